#pragma once

#include "bsgrowth/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bsgrowth {

// Truncated formal power series with exact rational coefficients.
// All arithmetic is exact up to the truncation order; binary operations on
// mismatched orders truncate to the shorter one.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const PowerSeries&) const = default;

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }

    PowerSeries scaled(const Rational& c) const;
    // S(z^j)
    PowerSeries substituted_power(int j) const;
    // -log(1 - S) = sum_{i>=1} S^i / i ; requires S(0) = 0
    PowerSeries neg_log_one_minus() const;

    // exact integer coefficients check (used for necklace counts)
    bool integral_nonnegative() const;
    std::vector<BigInt> integer_coefficients() const;

private:
    std::vector<Rational> coeffs_;
};

// Numerator / denominator with integer coefficients; index = degree.
// Denominator must have a nonzero constant term to be expandable.
struct RationalFunction {
    std::vector<BigInt> num;
    std::vector<BigInt> den;

    std::string to_string() const;
};

PowerSeries expand(const RationalFunction& f, int order);

// Closed form of the conjugacy growth series of the subgroup Z[1/k]
// (one rational function per parity class, exact integer coefficients).
RationalFunction abelian_series(int k);

// Length census polynomial of the syllable alphabet: S_o for odd k,
// S_e for even k (with the two-syllable blocks after a^{+-r}).
RationalFunction syllable_series(int k);

// 1 / (1 - S(z)) in the normalized form (1 - z) / p(z); p's smallest positive
// root is the reciprocal growth rate of the syllable sequences.
RationalFunction sequence_series(int k);

// Necklace-counting operator: sum_{j>=1} phi(j)/j * (-log(1 - S(z^j))).
// Requires S(0) = 0. Coefficients of the result are nonnegative integers.
PowerSeries cycle_construction(const PowerSeries& syllables, int order);

// Generating function of the excluded exceptional powers: z^L / (1 - z^L)
// with L = r + 1 for odd k and L = 2r + 1 for even k (one necklace each).
RationalFunction exclusion_series(int k);

// Full conjugacy growth series of BS(1,k):
//   abelian + 2 * (Cyc(syllables) - exclusions),
// the factor 2 accounting for the inverse classes with m < 0.
PowerSeries full_conjugacy_series(int k, int order);

} // namespace bsgrowth
