#include "bsgrowth/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bsgrowth {

PowerSeries PowerSeries::truncated(int order) const {
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + std::min<std::size_t>(coeffs_.size(),
                                                                    static_cast<std::size_t>(order) + 1));
    c.resize(static_cast<std::size_t>(order) + 1);
    return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i) out[i] = a[i] + b[i];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i) out[i] = a[i] - b[i];
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i) {
        Rational acc = 0;
        for (int j = 0; j <= i; ++j) acc += a[j] * b[i - j];
        out[i] = std::move(acc);
    }
    return out;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    PowerSeries out(order());
    for (int i = 0; i <= order(); ++i) out[i] = coeffs_[static_cast<std::size_t>(i)] * c;
    return out;
}

PowerSeries PowerSeries::substituted_power(int j) const {
    require(j >= 1, "substituted_power: j must be >= 1");
    PowerSeries out(order());
    for (int i = 0; i * j <= order(); ++i) out[i * j] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

PowerSeries PowerSeries::neg_log_one_minus() const {
    require(order() < 0 || coeffs_[0] == 0, "neg_log_one_minus: constant term must vanish");
    PowerSeries acc(order());
    PowerSeries power = *this;   // S^i, valuation >= i
    for (int i = 1; i <= order(); ++i) {
        acc += power.scaled(Rational(1, i));
        if (i < order()) power = power * *this;
    }
    return acc;
}

bool PowerSeries::integral_nonnegative() const {
    for (const Rational& c : coeffs_) {
        if (denominator(c) != 1 || c < 0) return false;
    }
    return true;
}

std::vector<BigInt> PowerSeries::integer_coefficients() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) {
        require(denominator(c) == 1, "integer_coefficients: non-integer coefficient");
        out.push_back(numerator(c));
    }
    return out;
}

std::string RationalFunction::to_string() const {
    auto poly = [](const std::vector<BigInt>& p) {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            if (!first) os << (p[i] > 0 ? " + " : " - ");
            else if (p[i] < 0) os << "-";
            first = false;
            BigInt a = abs(p[i]);
            if (a != 1 || i == 0) os << a;
            if (i >= 1) {
                os << "z";
                if (i >= 2) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    };
    return "(" + poly(num) + ") / (" + poly(den) + ")";
}

PowerSeries expand(const RationalFunction& f, int order) {
    require(!f.den.empty() && f.den[0] != 0,
            "expand: denominator must have nonzero constant term");
    PowerSeries out(order);
    const Rational d0(f.den[0]);
    for (int n = 0; n <= order; ++n) {
        Rational c = n < static_cast<int>(f.num.size()) ? Rational(f.num[static_cast<std::size_t>(n)])
                                                        : Rational(0);
        for (int j = 1; j <= n && j < static_cast<int>(f.den.size()); ++j) {
            c -= Rational(f.den[static_cast<std::size_t>(j)]) * out[n - j];
        }
        out[n] = c / d0;
    }
    return out;
}

namespace {

std::vector<BigInt> from_exponent_map(const std::map<int, long>& terms) {
    int deg = 0;
    for (const auto& [e, c] : terms)
        if (c != 0) deg = std::max(deg, e);
    std::vector<BigInt> p(static_cast<std::size_t>(deg) + 1);
    for (const auto& [e, c] : terms) p[static_cast<std::size_t>(e)] += c;
    return p;
}

// exact division by (1 - z): q_i = p_0 + ... + p_i, total sum must vanish
std::vector<BigInt> divide_by_one_minus_z(const std::vector<BigInt>& p) {
    if (p.empty()) return {};
    std::vector<BigInt> q(p.size() - 1);
    BigInt acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }
    acc += p.back();
    require(acc == 0, "divide_by_one_minus_z: polynomial not divisible");
    return q;
}

} // namespace

RationalFunction abelian_series(int k) {
    require(k >= 2, "abelian_series: k must be >= 2");
    const int r = k % 2 ? (k - 1) / 2 : k / 2;
    if (k == 2) {
        return {{1, 2, -1, 0, 0, -2, -2, 0, -2, 2},  // 1 + 2z - z^2 - 2z^5 - 2z^6 - 2z^8 + 2z^9
                {1, 0, -1, 0, 0, -2}};               // 1 - z^2 - 2z^5
    }
    if (k % 2 == 1) {
        std::map<int, long> num{{0, 1}, {1, 1}, {2, -1}, {3, -3}};
        num[r + 2] += -2;
        num[r + 4] += 4;
        num[r + 5] += 2;
        num[r + 6] += -2;
        std::map<int, long> den{{0, 1}, {1, -1}, {2, -1}, {3, -1}};
        den[r + 3] += 2;
        return {from_exponent_map(num), from_exponent_map(den)};
    }
    // even k >= 4; both polynomials carry a removable (1 - z) factor
    std::map<int, long> num{{0, 1}, {1, 1}, {2, -1}, {3, -3}};
    num[r + 2] += -2;
    num[r + 3] += 4;
    num[r + 4] += 2;
    num[r + 5] += -4;
    num[2 * r + 3] += -2;
    num[2 * r + 5] += 4;
    num[2 * r + 6] += 2;
    num[2 * r + 7] += -2;
    std::map<int, long> den{{0, 1}, {1, -1}, {2, -1}, {3, -1}};
    den[r + 2] += 2;
    den[r + 4] += -2;
    den[2 * r + 4] += 2;
    return {divide_by_one_minus_z(from_exponent_map(num)),
            divide_by_one_minus_z(from_exponent_map(den))};
}

RationalFunction syllable_series(int k) {
    require(k >= 2, "syllable_series: k must be >= 2");
    const int r = k % 2 ? (k - 1) / 2 : k / 2;
    std::map<int, long> s;
    if (k == 2) {
        s[1] += 1;           // t
        s[3] += 2;           // a^{+-1} t t
    } else if (k % 2 == 1) {
        s[1] += 1;           // t
        for (int j = 1; j <= r; ++j) s[j + 1] += 2;   // a^{+-j} t
    } else {
        s[1] += 1;
        for (int j = 1; j <= r - 1; ++j) s[j + 1] += 2;
        for (int x = 0; x <= r - 1; ++x) s[r + 2 + x] += 2;   // a^{+-r} t a^{+-x} t
    }
    return {from_exponent_map(s), {1}};
}

RationalFunction sequence_series(int k) {
    require(k >= 2, "sequence_series: k must be >= 2");
    const int r = k % 2 ? (k - 1) / 2 : k / 2;
    std::map<int, long> den{{0, 1}, {1, -2}, {2, -1}};
    if (k % 2 == 1) {
        den[r + 2] += 2;
    } else {
        den[r + 1] += 2;
        den[r + 2] += -2;
        den[2 * r + 2] += 2;
    }
    return {{1, -1}, from_exponent_map(den)};
}

PowerSeries cycle_construction(const PowerSeries& syllables, int order) {
    require(syllables.order() >= 0 && syllables[0] == 0,
            "cycle_construction: syllable series must have zero constant term");
    const PowerSeries s = syllables.truncated(order);
    PowerSeries acc(order);
    for (int j = 1; j <= order; ++j) {
        const PowerSeries sj = s.substituted_power(j);
        bool all_zero = true;
        for (int i = 0; i <= order; ++i)
            if (sj[i] != 0) { all_zero = false; break; }
        if (all_zero) continue;
        acc += sj.neg_log_one_minus().scaled(Rational(euler_totient(j), j));
    }
    return acc;
}

RationalFunction exclusion_series(int k) {
    require(k >= 2, "exclusion_series: k must be >= 2");
    const int r = k % 2 ? (k - 1) / 2 : k / 2;
    const int L = k % 2 ? r + 1 : 2 * r + 1;
    std::vector<BigInt> num(static_cast<std::size_t>(L) + 1);
    num[static_cast<std::size_t>(L)] = 1;
    std::vector<BigInt> den(static_cast<std::size_t>(L) + 1);
    den[0] = 1;
    den[static_cast<std::size_t>(L)] = -1;
    return {std::move(num), std::move(den)};
}

PowerSeries full_conjugacy_series(int k, int order) {
    require(order >= 0, "full_conjugacy_series: order must be >= 0");
    const PowerSeries abelian = expand(abelian_series(k), order);
    const PowerSeries syll = expand(syllable_series(k), order);
    const PowerSeries cyc = cycle_construction(syll, order);
    const PowerSeries excl = expand(exclusion_series(k), order);
    PowerSeries nonabelian = (cyc - excl).scaled(2);
    PowerSeries total = abelian + nonabelian;
    require(total.integral_nonnegative(),
            "full_conjugacy_series: coefficients must be nonnegative integers");
    return total;
}

} // namespace bsgrowth
