#include "bsgrowth/group.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>
#include <sstream>

namespace bsgrowth {

KAdicRational normalize(const Context& ctx, BigInt num, long exp) {
    require(exp >= 0, "normalize: exponent must be >= 0");
    if (num == 0) return {BigInt(0), 0};
    const int k = ctx.k();
    while (exp > 0 && num % k == 0) {
        num /= k;
        --exp;
    }
    return {std::move(num), static_cast<unsigned>(exp)};
}

KAdicRational kadic_add(const Context& ctx, const KAdicRational& x, const KAdicRational& y) {
    const unsigned e = std::max(x.exp, y.exp);
    BigInt num = x.num * pow_int(ctx.k(), e - x.exp) + y.num * pow_int(ctx.k(), e - y.exp);
    return normalize(ctx, std::move(num), e);
}

KAdicRational kadic_negate(const KAdicRational& x) {
    return {-x.num, x.exp};
}

KAdicRational kadic_shift(const Context& ctx, const KAdicRational& x, const BigInt& shift) {
    if (x.num == 0) return x;
    if (shift >= 0) {
        BigInt num = x.num * pow_int(ctx.k(), static_cast<std::uint64_t>(shift));
        return normalize(ctx, std::move(num), x.exp);
    }
    BigInt down = -shift;
    require(down <= (1 << 26), "kadic_shift: exponent out of budget");
    return normalize(ctx, x.num, x.exp + static_cast<long>(down));
}

KAdicRational kadic_div_exact(const Context& ctx, const KAdicRational& x, const BigInt& divisor) {
    require(divisor != 0, "kadic_div_exact: zero divisor");
    require(x.num % divisor == 0, "kadic_div_exact: division not exact in Z[1/k]");
    return normalize(ctx, x.num / divisor, x.exp);
}

Rational kadic_value(const Context& ctx, const KAdicRational& x) {
    return Rational(x.num, pow_int(ctx.k(), x.exp));
}

std::string to_string(const KAdicRational& x) {
    std::ostringstream os;
    os << x.num;
    if (x.exp > 0) os << "/k^" << x.exp;
    return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
    std::size_t seed = hash_bigint(g.x.num);
    boost::hash_combine(seed, g.x.exp);
    boost::hash_combine(seed, hash_bigint(g.m));
    return seed;
}

GroupElement identity() { return {{BigInt(0), 0}, BigInt(0)}; }

GroupElement generator_a(const Context&, int sign) {
    return {{BigInt(sign >= 0 ? 1 : -1), 0}, BigInt(0)};
}

GroupElement generator_t(const Context&, int sign) {
    return {{BigInt(0), 0}, BigInt(sign >= 0 ? 1 : -1)};
}

namespace {

// canonical form is k-dependent, so a non-canonical input is the footprint
// of an element built under a different context
void assert_same_context(const Context& ctx, const GroupElement& g) {
    require(g.x.exp == 0 || (g.x.num != 0 && g.x.num % ctx.k() != 0),
            "group op: element is not canonical for this k (mixed contexts?)");
}

} // namespace

GroupElement multiply(const Context& ctx, const GroupElement& g, const GroupElement& h) {
    assert_same_context(ctx, g);
    assert_same_context(ctx, h);
    return {kadic_add(ctx, g.x, kadic_shift(ctx, h.x, g.m)), g.m + h.m};
}

GroupElement invert(const Context& ctx, const GroupElement& g) {
    // (x, m)^-1 = (-x / k^m, -m)
    assert_same_context(ctx, g);
    return {kadic_shift(ctx, kadic_negate(g.x), -g.m), -g.m};
}

GroupElement conjugate(const Context& ctx, const GroupElement& g, const GroupElement& h) {
    return multiply(ctx, multiply(ctx, h, g), invert(ctx, h));
}

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << "(" << to_string(g.x) << ", " << g.m << ")";
    return os.str();
}

Letter inverse(Letter l) {
    switch (l) {
        case Letter::a: return Letter::a_inv;
        case Letter::a_inv: return Letter::a;
        case Letter::t: return Letter::t_inv;
        case Letter::t_inv: return Letter::t;
    }
    return Letter::a;
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        Letter base;
        switch (c) {
            case 'a': base = Letter::a; break;
            case 'A': base = Letter::a_inv; break;
            case 't': base = Letter::t; break;
            case 'T': base = Letter::t_inv; break;
            default: throw std::invalid_argument("parse_word: unexpected character");
        }
        ++i;
        long count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            require(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                    "parse_word: malformed exponent");
            count = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                count = count * 10 + (text[i] - '0');
                ++i;
            }
            if (neg) base = inverse(base);
        }
        for (long j = 0; j < count; ++j) w.push_back(base);
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) {
        switch (l) {
            case Letter::a: s += 'a'; break;
            case Letter::a_inv: s += 'A'; break;
            case Letter::t: s += 't'; break;
            case Letter::t_inv: s += 'T'; break;
        }
    }
    return s;
}

Word free_reduce(const Word& w) {
    Word out;
    for (Letter l : w) {
        if (!out.empty() && out.back() == inverse(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

GroupElement eval_word(const Context& ctx, const Word& w) {
    GroupElement g = identity();
    for (Letter l : w) {
        GroupElement v;
        switch (l) {
            case Letter::a: v = generator_a(ctx, +1); break;
            case Letter::a_inv: v = generator_a(ctx, -1); break;
            case Letter::t: v = generator_t(ctx, +1); break;
            case Letter::t_inv: v = generator_t(ctx, -1); break;
        }
        g = multiply(ctx, g, v);
    }
    return g;
}

} // namespace bsgrowth
