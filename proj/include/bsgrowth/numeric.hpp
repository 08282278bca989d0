#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsgrowth {

// Exact integer / rational types used throughout. BFS numerators reach k^n,
// so fixed-width integers are not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what, int radius = -1)
        : std::runtime_error(what), radius_reached(radius) {}
    int radius_reached;
};

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline BigInt pow_int(BigInt base, std::uint64_t e) {
    BigInt out = 1;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline BigInt pow_mod(BigInt base, BigInt e, const BigInt& m) {
    BigInt out = 1;
    base = mod_floor(base, m);
    while (e > 0) {
        if ((e & 1) != 0) out = out * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return out;
}

inline std::size_t hash_bigint(const BigInt& v) {
    return boost::hash<BigInt>{}(v);
}

inline long euler_totient(long j) {
    require(j >= 1, "euler_totient: j must be >= 1");
    long result = j;
    long n = j;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace bsgrowth
