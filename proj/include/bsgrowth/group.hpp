#pragma once

#include "bsgrowth/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bsgrowth {

// Ambient parameter of BS(1,k) = <a,t | t a t^-1 = a^k>, k >= 2.
// All element operations take the context; mixing elements built under
// different k values is a contract violation.
class Context {
public:
    explicit Context(int k) : k_(k) { require(k >= 2, "Context: k must be >= 2"); }
    int k() const { return k_; }
    int r() const { return k_ % 2 ? (k_ - 1) / 2 : k_ / 2; }
    bool odd() const { return k_ % 2 == 1; }

private:
    int k_;
};

// An element of Z[1/k] in the canonical form num / k^exp:
// num == 0 implies exp == 0, and exp > 0 implies k does not divide num.
struct KAdicRational {
    BigInt num;
    unsigned exp = 0;

    bool operator==(const KAdicRational&) const = default;
    bool is_zero() const { return num == 0; }
};

KAdicRational normalize(const Context& ctx, BigInt num, long exp);

// x + y
KAdicRational kadic_add(const Context& ctx, const KAdicRational& x, const KAdicRational& y);
// -x
KAdicRational kadic_negate(const KAdicRational& x);
// x * k^shift (shift may be negative)
KAdicRational kadic_shift(const Context& ctx, const KAdicRational& x, const BigInt& shift);
// exact division by an integer divisor; throws if the quotient leaves Z[1/k]
KAdicRational kadic_div_exact(const Context& ctx, const KAdicRational& x, const BigInt& divisor);

Rational kadic_value(const Context& ctx, const KAdicRational& x);
std::string to_string(const KAdicRational& x);

// Semidirect normal form (x, m): product (x,m)(y,n) = (x + k^m y, m+n).
// a = (1,0), t = (0,1).
struct GroupElement {
    KAdicRational x;
    BigInt m;

    bool operator==(const GroupElement&) const = default;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const;
};

GroupElement identity();
GroupElement generator_a(const Context& ctx, int sign = +1);
GroupElement generator_t(const Context& ctx, int sign = +1);

GroupElement multiply(const Context& ctx, const GroupElement& g, const GroupElement& h);
GroupElement invert(const Context& ctx, const GroupElement& g);
// h g h^-1 (the convention g^h = h g h^-1; conjugation acts on the left)
GroupElement conjugate(const Context& ctx, const GroupElement& g, const GroupElement& h);

std::string to_string(const GroupElement& g);

// Words over {a, a^-1, t, t^-1}.
enum class Letter : unsigned char { a, a_inv, t, t_inv };
using Word = std::vector<Letter>;

Letter inverse(Letter l);

// Compact encoding: 'a' = a, 'A' = a^-1, 't' = t, 'T' = t^-1.
// Whitespace is ignored; "a^3", "a^-2", "t^-1" exponent groups are accepted.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);

GroupElement eval_word(const Context& ctx, const Word& w);

} // namespace bsgrowth
