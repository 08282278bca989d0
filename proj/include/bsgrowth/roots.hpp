#pragma once

#include "bsgrowth/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsgrowth {

// Integer-coefficient polynomial, index = degree.
using Polynomial = std::vector<BigInt>;

int sign_at(const Polynomial& p, const Rational& x);

// Enclosure of the smallest positive real root: either an exact rational
// root (lo == hi) or an interval with a strict sign change, of width at most
// the requested bound. All arithmetic is exact.
struct IntervalRoot {
    Polynomial poly;
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

struct RootScanOptions {
    Rational scan_bound = 2;     // certify absence of roots up to here
    long initial_grid = 16;      // start with steps of 1/initial_grid
    long max_grid = 1 << 20;     // refinement limit for the sign-change scan
};

// Finds the smallest positive real root by an exact-sign grid scan followed
// by bisection. Returns nothing when the polynomial is positive on
// (0, scan_bound] at every refinement up to max_grid.
std::optional<IntervalRoot> smallest_positive_root(const Polynomial& p, const Rational& width,
                                                   const RootScanOptions& opts = {});

struct RateReport {
    int k = 0;
    IntervalRoot abelian_root;       // smallest positive root of the abelian denominator
    IntervalRoot conjugacy_root;     // smallest positive root of the sequence denominator
    bool numerator_nonvanishing = false;  // abelian numerator certified nonzero at the root
    bool abelian_rate_in_range = false;   // abelian rate in (4/3, 2)  (k >= 3)
    bool conjugacy_dominates = false;     // conjugacy rate > abelian rate

    // reciprocals as intervals
    Rational abelian_rate_lo() const;
    Rational abelian_rate_hi() const;
    Rational conjugacy_rate_lo() const;
    Rational conjugacy_rate_hi() const;
};

// Isolates both growth-rate constants of BS(1,k) and evaluates the range and
// dominance assertions. Throws ResourceError-free; a root that cannot be
// isolated surfaces as std::runtime_error with context.
RateReport growth_rates(int k, const Rational& width);

double to_double(const Rational& x);

} // namespace bsgrowth
