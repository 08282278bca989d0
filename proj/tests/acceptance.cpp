// Acceptance suite: one check per release criterion, each printing a single
// PASS/FAIL line. Run all (no arguments) or one with --criterion N.

#include "bsgrowth/grammar.hpp"
#include "bsgrowth/languages.hpp"
#include "bsgrowth/oracle.hpp"
#include "bsgrowth/roots.hpp"
#include "bsgrowth/series.hpp"

#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace bsgrowth;

namespace {

// 1. Exact triangle identity: oracle counts == language enumeration ==
//    closed-form series coefficients, k in {2,3,4,5}, n <= 10.
bool criterion_triangle(std::string& detail) {
    for (int k : {2, 3, 4, 5}) {
        Context ctx(k);
        const int N = 10;
        const auto oracle = conjugacy_growth_strict(ctx, N);
        const PowerSeries series = full_conjugacy_series(k, N);
        for (int n = 0; n <= N; ++n) {
            const std::uint64_t lang = count_by_length(ctx, conjugacy_family(ctx), n) +
                                       count_by_length(ctx, Family::A_plus, n) +
                                       count_by_length(ctx, Family::A_minus, n);
            const std::uint64_t ora = oracle[static_cast<std::size_t>(n)];
            if (ora != lang || series[n] != Rational(ora)) {
                std::ostringstream os;
                os << "k=" << k << " n=" << n << ": oracle " << ora << ", language " << lang
                   << ", series " << series[n];
                detail = os.str();
                return false;
            }
        }
    }
    detail = "oracle == language == series for k in {2,3,4,5}, n <= 10";
    return true;
}

// 2. Abelian spot values and DSV == closed form through order 20.
bool criterion_abelian_series(std::string& detail) {
    const std::vector<BigInt> expected{1, 2, 0, 2, 0, 2};
    if (expand(abelian_series(2), 5).integer_coefficients() != expected) {
        detail = "expansion of the k=2 closed form disagrees with [1,2,0,2,0,2]";
        return false;
    }
    // independent confirmation: filter all words of length <= 5 by brute force
    {
        Context c2(2);
        std::map<ConjKey, int> first;
        std::vector<Word> frontier{{}};
        first[canonical_key(c2, identity())] = 0;
        std::vector<std::uint64_t> census(6, 0);
        for (int n = 1; n <= 5; ++n) {
            std::vector<Word> next;
            for (const Word& w : frontier)
                for (Letter l : {Letter::a, Letter::a_inv, Letter::t, Letter::t_inv}) {
                    Word u = w;
                    u.push_back(l);
                    GroupElement g = eval_word(c2, u);
                    ConjKey key = canonical_key(c2, g);
                    if (g.m == 0 && !first.count(key)) first[key] = n;
                    next.push_back(std::move(u));
                }
            frontier = std::move(next);
        }
        for (const auto& [key, n] : first)
            if (key.abelian()) ++census[static_cast<std::size_t>(n)];
        for (int n = 0; n <= 5; ++n)
            if (Rational(census[static_cast<std::size_t>(n)]) != Rational(expected[static_cast<std::size_t>(n)])) {
                detail = "exhaustive word filter disagrees at n=" + std::to_string(n);
                return false;
            }
    }
    for (int k : {2, 3, 4, 5, 6}) {
        if (!(dsv_series(build_conjugacy_grammar(k), 20) == expand(abelian_series(k), 20))) {
            detail = "DSV series != closed form at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "spot values confirmed two ways; DSV == closed form to order 20, k in {2..6}";
    return true;
}

// 3. Rate constants with the stated tolerances.
bool criterion_rates(std::string& detail) {
    const Rational width(1, 10'000'000);
    {
        RateReport r = growth_rates(2, width);
        if (!(r.abelian_root.lo > Rational(741, 1000) && r.abelian_root.hi < Rational(743, 1000))) {
            detail = "k=2 abelian root outside 0.742 +- 0.001";
            return false;
        }
        if (!(r.abelian_rate_lo() > Rational(1347, 1000) &&
              r.abelian_rate_hi() < Rational(1349, 1000))) {
            detail = "k=2 abelian rate outside 1.348 +- 0.001";
            return false;
        }
        if (!(r.conjugacy_root.lo > Rational(589, 1000) &&
              r.conjugacy_root.hi < Rational(591, 1000))) {
            detail = "k=2 sequence root outside 0.590 +- 0.001";
            return false;
        }
    }
    {
        RateReport r = growth_rates(3, width);
        if (!r.conjugacy_root.exact() || r.conjugacy_root.lo != Rational(1, 2)) {
            detail = "k=3 sequence root is not exactly 1/2";
            return false;
        }
    }
    for (int k : {3, 4, 5, 6}) {
        RateReport r = growth_rates(k, width);
        if (!r.abelian_rate_in_range || !r.numerator_nonvanishing) {
            detail = "abelian rate not certified inside (4/3, 2) at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "0.742 / 1.348 / 0.590 / exact 1/2 reproduced; abelian rates in (4/3, 2)";
    return true;
}

// 4. Grammar unambiguity and language equality up to length 12.
bool criterion_grammar(std::string& detail) {
    for (int k : {2, 3, 4, 5, 6}) {
        Context ctx(k);
        Grammar g = build_conjugacy_grammar(k);
        DerivationCount words = language_up_to(g, 12);
        if (!words.unambiguous()) {
            detail = "ambiguous derivation at k=" + std::to_string(k);
            return false;
        }
        for (int n = 0; n <= 12; ++n) {
            std::set<std::string> lhs;
            for (const auto& [w, c] : words.by_length[static_cast<std::size_t>(n)]) lhs.insert(w);
            std::set<std::string> rhs;
            for (const Word& w : members_of_length(ctx, conjugacy_family(ctx), n))
                rhs.insert(to_string(w));
            if (lhs != rhs) {
                detail = "language mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "unique derivations and exact language equality, k in {2..6}, n <= 12";
    return true;
}

// 5. Cycle-construction integrality and necklace equivalence.
bool criterion_cycle(std::string& detail) {
    for (int k : {2, 3, 4, 5}) {
        Context ctx(k);
        const int N = 10;
        PowerSeries cyc = cycle_construction(expand(syllable_series(k), N), N);
        if (!cyc.integral_nonnegative()) {
            detail = "cycle construction left non-integer coefficients at k=" + std::to_string(k);
            return false;
        }
        PowerSeries excl = expand(exclusion_series(k), N);
        for (int n = 1; n <= N; ++n) {
            const Rational expected = cyc[n] - excl[n];
            if (expected != Rational(count_by_length(ctx, Family::A_plus, n)) ||
                expected != Rational(count_by_length(ctx, Family::A_minus, n))) {
                detail = "necklace count mismatch at k=" + std::to_string(k) +
                         " n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "integral nonnegative Cyc; equals least-rotation necklace counts, n <= 10";
    return true;
}

// 6. Asymptotic sandwich plus rate dominance.
bool criterion_sandwich(std::string& detail) {
    for (int k : {2, 3, 4, 5, 6}) {
        RateReport report = growth_rates(k, Rational(1, BigInt(1) << 40));
        const Rational rho = report.conjugacy_root.midpoint();
        const int N = 25;
        PowerSeries a = cycle_construction(expand(syllable_series(k), N), N) -
                        expand(exclusion_series(k), N);
        Rational v10;
        Rational rho_pow = 1;
        for (int i = 0; i < 10; ++i) rho_pow *= rho;
        for (int n = 10; n <= N; ++n) {
            const Rational v = Rational(n) * a[n] * rho_pow;
            rho_pow *= rho;
            if (n == 10) {
                v10 = v;
                continue;
            }
            if (!(v >= v10 / 4 && v <= v10 * 4)) {
                detail = "n a_n rho^n escaped the factor-4 band at k=" + std::to_string(k) +
                         " n=" + std::to_string(n);
                return false;
            }
        }
        if (!report.conjugacy_dominates) {
            detail = "conjugacy rate does not dominate the abelian rate at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "n a_n rho^n stays in the factor-4 band of its n=10 value; dominance holds";
    return true;
}

// 7. Sphere-ratio check against 1/rho at radius 14.
bool criterion_sphere_ratio(std::string& detail) {
    for (int k : {2, 3}) {
        Context ctx(k);
        BfsLimits limits;
        limits.max_elements = 20'000'000;
        SphereTable table;
        try {
            table = bfs_ball(ctx, 14, limits);
        } catch (const ResourceError& e) {
            detail = std::string("resource limit: ") + e.what();
            return false;
        }
        const Rational ratio(BigInt(table.sphere_sizes[14]), BigInt(table.sphere_sizes[13]));
        RateReport report = growth_rates(k, Rational(1, 1'000'000'000));
        const Rational inv_lo = report.conjugacy_rate_lo();
        const Rational inv_hi = report.conjugacy_rate_hi();
        if (!(ratio >= inv_lo * Rational(9, 10) && ratio <= inv_hi * Rational(11, 10))) {
            std::ostringstream os;
            os << "k=" << k << ": sphere ratio " << to_double(ratio) << " vs 1/rho "
               << to_double(inv_lo);
            detail = os.str();
            return false;
        }
    }
    detail = "sphere(14)/sphere(13) within 10% of 1/rho for k in {2,3}";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "triangle identity (oracle == language == series)", criterion_triangle},
    {2, "abelian series spot values and DSV agreement", criterion_abelian_series},
    {3, "growth-rate constants", criterion_rates},
    {4, "grammar unambiguity and language equality", criterion_grammar},
    {5, "cycle-construction integrality and necklaces", criterion_cycle},
    {6, "asymptotic sandwich and rate dominance", criterion_sandwich},
    {7, "sphere ratio vs 1/rho at radius 14", criterion_sphere_ratio},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::cerr << "usage: bsgrowth_acceptance [--criterion N]\n";
            return 2;
        }
    }
    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << c.id << " [" << c.name << "]: " << (ok ? "PASS" : "FAIL")
                  << " - " << detail << "\n";
        all_pass = all_pass && ok;
    }
    return all_pass ? 0 : 1;
}
