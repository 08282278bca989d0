#include "bsgrowth/conjugacy.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cmath>

namespace bsgrowth {

std::size_t ConjKeyHash::operator()(const ConjKey& key) const {
    std::size_t seed = hash_bigint(key.m);
    boost::hash_combine(seed, hash_bigint(key.datum));
    return seed;
}

namespace {

BigInt modulus_for(const Context& ctx, const BigInt& m, const KeyLimits& limits) {
    BigInt am = abs(m);
    const double bits_per_level = std::log2(static_cast<double>(ctx.k()));
    if (static_cast<double>(am) * bits_per_level > static_cast<double>(limits.max_modulus_bits)) {
        throw ResourceError("canonical_key: modulus k^|m| - 1 exceeds the memory budget");
    }
    return pow_int(ctx.k(), static_cast<std::uint64_t>(am)) - 1;
}

// residue of x = num / k^exp modulo M, using k^-1 = k^(|m|-1) mod M
BigInt residue_mod(const Context& ctx, const KAdicRational& x, const BigInt& m, const BigInt& M) {
    if (M == 1) return 0;
    BigInt kinv = pow_mod(ctx.k(), abs(m) - 1, M);
    return mod_floor(x.num, M) * pow_mod(kinv, x.exp, M) % M;
}

} // namespace

ConjKey canonical_key(const Context& ctx, const GroupElement& g, const KeyLimits& limits) {
    if (g.m == 0) {
        // orbit {x k^e}: the unique integer representative not divisible by k
        BigInt p = g.x.num;
        if (p == 0) return {BigInt(0), BigInt(0)};
        if (g.x.exp == 0) {
            while (p % ctx.k() == 0) p /= ctx.k();
        }
        // exp > 0 already guarantees k !| p (canonical form)
        return {BigInt(0), std::move(p)};
    }
    const BigInt M = modulus_for(ctx, g.m, limits);
    if (M == 1) return {g.m, BigInt(0)};
    BigInt r = residue_mod(ctx, g.x, g.m, M);
    BigInt best = r;
    BigInt cur = r * ctx.k() % M;
    while (cur != r) {
        if (cur < best) best = cur;
        cur = cur * ctx.k() % M;
    }
    return {g.m, std::move(best)};
}

bool are_conjugate(const Context& ctx, const GroupElement& g, const GroupElement& h,
                   const KeyLimits& limits) {
    return canonical_key(ctx, g, limits) == canonical_key(ctx, h, limits);
}

std::vector<BigInt> orbit_residues(const Context& ctx, const BigInt& m, const BigInt& r,
                                   const KeyLimits& limits) {
    require(m != 0, "orbit_residues: m must be nonzero");
    const BigInt M = modulus_for(ctx, m, limits);
    require(r >= 0 && r < M, "orbit_residues: residue out of range");
    std::vector<BigInt> orbit{r};
    BigInt cur = r * ctx.k() % M;
    while (cur != r) {
        orbit.push_back(cur);
        cur = cur * ctx.k() % M;
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::optional<GroupElement> find_conjugator(const Context& ctx, const GroupElement& g,
                                            const GroupElement& target, const KeyLimits& limits) {
    if (g.m != target.m) return std::nullopt;
    if (g.m == 0) {
        // target.x = k^e g.x for some e in Z; conjugator t^e
        if (g.x.is_zero() || target.x.is_zero()) {
            if (g.x == target.x) return identity();
            return std::nullopt;
        }
        // strip to the k-free integer and compare levels
        auto strip = [&](const KAdicRational& x) {
            BigInt p = x.num;
            long e = -static_cast<long>(x.exp);
            if (x.exp == 0) {
                while (p % ctx.k() == 0) { p /= ctx.k(); ++e; }
            }
            return std::pair<BigInt, long>(std::move(p), e);
        };
        auto [pg, eg] = strip(g.x);
        auto [pt, et] = strip(target.x);
        if (pg != pt) return std::nullopt;
        GroupElement conj{{BigInt(0), 0}, BigInt(et - eg)};
        return conj;
    }
    const BigInt M = modulus_for(ctx, g.m, limits);
    // find l with k^l * res(g) == res(target) mod M, then solve for the a-part:
    // target.x - k^l g.x must be an Z[1/k]-multiple of (1 - k^m)
    BigInt l = 0;
    if (M > 1) {
        const BigInt rg = residue_mod(ctx, g.x, g.m, M);
        const BigInt rt = residue_mod(ctx, target.x, target.m, M);
        bool found = false;
        BigInt cur = rg;
        BigInt steps = 0;
        do {
            if (cur == rt) { found = true; l = steps; break; }
            cur = cur * ctx.k() % M;
            ++steps;
        } while (cur != rg);
        if (!found) return std::nullopt;
    }
    // g' = t^l g t^-l = (k^l x, m); want z with g'^(z,0) = (k^l x + z(1-k^m), m) = target
    KAdicRational shifted = kadic_shift(ctx, g.x, l);
    KAdicRational diff = kadic_add(ctx, target.x, kadic_negate(shifted));
    // 1 - k^m = -M for m > 0, and M / k^|m| for m < 0
    KAdicRational z;
    if (diff.is_zero()) {
        z = {BigInt(0), 0};
    } else if (g.m > 0) {
        if (diff.num % M != 0) return std::nullopt;
        z = kadic_negate(kadic_div_exact(ctx, diff, M));
    } else {
        if (diff.num % M != 0) return std::nullopt;
        z = kadic_shift(ctx, kadic_div_exact(ctx, diff, M), abs(g.m));
    }
    // conjugator (z, 0) * (0, l) applied as h g h^-1 with h = (z,0)(0,l)
    GroupElement h = multiply(ctx, GroupElement{z, BigInt(0)}, GroupElement{{BigInt(0), 0}, l});
    if (conjugate(ctx, g, h) == target) return h;
    return std::nullopt;
}

} // namespace bsgrowth
