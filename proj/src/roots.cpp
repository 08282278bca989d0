#include "bsgrowth/roots.hpp"

#include <algorithm>

namespace bsgrowth {

int sign_at(const Polynomial& p, const Rational& x) {
    // evaluate p(a/b) * b^deg exactly: sum c_i a^i b^(deg-i)
    const BigInt a = numerator(x);
    const BigInt b = denominator(x);
    if (p.empty()) return 0;
    BigInt acc = 0;
    BigInt apow = 1;
    const std::size_t deg = p.size() - 1;
    std::vector<BigInt> bpow(p.size());
    bpow[deg] = 1;
    for (std::size_t i = deg; i-- > 0;) bpow[i] = bpow[i + 1] * b;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i] * apow * bpow[i];
        apow *= a;
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

std::optional<IntervalRoot> smallest_positive_root(const Polynomial& p, const Rational& width,
                                                   const RootScanOptions& opts) {
    require(!p.empty() && p[0] != 0, "smallest_positive_root: p(0) must be nonzero");
    require(width > 0, "smallest_positive_root: width must be positive");
    const int sign0 = p[0] > 0 ? 1 : -1;

    for (long grid = opts.initial_grid; grid <= opts.max_grid; grid *= 2) {
        const Rational scaled = opts.scan_bound * grid;
        const long steps = static_cast<long>(BigInt(numerator(scaled) / denominator(scaled)));
        for (long i = 1; i <= steps; ++i) {
            const Rational x(i, grid);
            const int s = sign_at(p, x);
            if (s == 0) {
                // exact rational root on the grid
                return IntervalRoot{p, x, x};
            }
            if (s != sign0) {
                Rational lo(i - 1, grid), hi = x;
                while (hi - lo > width) {
                    const Rational mid = (lo + hi) / 2;
                    const int sm = sign_at(p, mid);
                    if (sm == 0) return IntervalRoot{p, mid, mid};
                    if (sm == sign0) lo = mid;
                    else hi = mid;
                }
                return IntervalRoot{p, lo, hi};
            }
        }
        // no sign change at this resolution; refine in case a dip was missed
    }
    return std::nullopt;
}

Rational RateReport::abelian_rate_lo() const { return Rational(1) / abelian_root.hi; }
Rational RateReport::abelian_rate_hi() const {
    return abelian_root.lo == 0 ? Rational(1'000'000) : Rational(1) / abelian_root.lo;
}
Rational RateReport::conjugacy_rate_lo() const { return Rational(1) / conjugacy_root.hi; }
Rational RateReport::conjugacy_rate_hi() const {
    return conjugacy_root.lo == 0 ? Rational(1'000'000) : Rational(1) / conjugacy_root.lo;
}

namespace {

// certify that q has constant nonzero sign over [lo, hi] (interval inside (0,1));
// uses |q'| <= sum |coeffs of q'| on (0,1) and endpoint values
bool certify_nonvanishing(const Polynomial& q, IntervalRoot& root, const Rational& min_width) {
    for (int round = 0; round < 64; ++round) {
        const int slo = sign_at(q, root.lo);
        const int shi = sign_at(q, root.hi);
        if (root.exact()) return slo != 0;
        if (slo != 0 && slo == shi) {
            // derivative bound: |q'(x)| <= D for x in (0,1)
            BigInt dbound = 0;
            for (std::size_t i = 1; i < q.size(); ++i) dbound += abs(q[i]) * static_cast<long>(i);
            // interval image cannot cross zero when D * width < |q(endpoint)|
            auto abs_at = [&](const Rational& x) {
                const BigInt a = numerator(x), b = denominator(x);
                BigInt acc = 0, apow = 1;
                const std::size_t deg = q.size() - 1;
                std::vector<BigInt> bpow(q.size());
                bpow[deg] = 1;
                for (std::size_t i = deg; i-- > 0;) bpow[i] = bpow[i + 1] * b;
                for (std::size_t i = 0; i < q.size(); ++i) {
                    acc += q[i] * apow * bpow[i];
                    apow *= a;
                }
                return Rational(abs(acc), pow_int(b, static_cast<std::uint64_t>(deg)));
            };
            const Rational margin = std::min(abs_at(root.lo), abs_at(root.hi));
            if (Rational(dbound) * root.width() < margin) return true;
        }
        // shrink the root interval by one bisection step and retry
        if (root.width() <= min_width) break;
        const Rational mid = root.midpoint();
        const int sm = sign_at(root.poly, mid);
        const int s0 = sign_at(root.poly, root.lo);
        if (sm == 0) {
            root.lo = root.hi = mid;
        } else if (sm == s0) {
            root.lo = mid;
        } else {
            root.hi = mid;
        }
    }
    return false;
}

} // namespace

RateReport growth_rates(int k, const Rational& width) {
    require(k >= 2, "growth_rates: k must be >= 2");
    RateReport report;
    report.k = k;

    const RationalFunction ab = abelian_series(k);
    auto ab_root = smallest_positive_root(ab.den, width);
    if (!ab_root) throw std::runtime_error("growth_rates: abelian denominator root not found");
    report.abelian_root = *ab_root;

    const RationalFunction seq = sequence_series(k);
    auto seq_root = smallest_positive_root(seq.den, width);
    if (!seq_root) throw std::runtime_error("growth_rates: sequence denominator root not found");
    report.conjugacy_root = *seq_root;

    IntervalRoot refine = report.abelian_root;
    report.numerator_nonvanishing = certify_nonvanishing(ab.num, refine, width / 1024);
    report.abelian_root = refine;

    report.abelian_rate_in_range =
        report.abelian_rate_lo() > Rational(4, 3) && report.abelian_rate_hi() < 2;
    report.conjugacy_dominates = report.conjugacy_rate_lo() > report.abelian_rate_hi();
    return report;
}

double to_double(const Rational& x) {
    return static_cast<double>(numerator(x)) / static_cast<double>(denominator(x));
}

} // namespace bsgrowth
