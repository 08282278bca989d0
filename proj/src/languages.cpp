#include "bsgrowth/languages.hpp"

#include "bsgrowth/conjugacy.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace bsgrowth {

Family element_family(const Context& ctx) {
    if (ctx.k() == 2) return Family::E_2;
    return ctx.odd() ? Family::E_o : Family::E_e;
}

Family conjugacy_family(const Context& ctx) {
    if (ctx.k() == 2) return Family::C_2;
    return ctx.odd() ? Family::C_o : Family::C_e;
}

namespace {

// ---------------------------------------------------------------- parsing

// Shape t^-b a^{x0} t a^{x1} t ... t a^{xd} t^-c  (b, c >= 0, d = #t's).
// Every word of the abelian families has this shape with b + c = d.
struct DigitShape {
    int b = 0;
    int c = 0;
    std::vector<long> digits;   // x_0 .. x_d
    int d() const { return static_cast<int>(digits.size()) - 1; }
};

std::optional<DigitShape> parse_digit_shape(const Word& w) {
    DigitShape s;
    std::size_t i = 0;
    while (i < w.size() && w[i] == Letter::t_inv) { ++s.b; ++i; }
    std::vector<long> digits;
    long run = 0;
    int run_sign = 0;
    bool in_tail = false;
    for (; i < w.size(); ++i) {
        switch (w[i]) {
            case Letter::a:
            case Letter::a_inv: {
                if (in_tail) return std::nullopt;   // a after trailing t^-1
                int sign = w[i] == Letter::a ? +1 : -1;
                if (run != 0 && run_sign != sign) return std::nullopt;  // unreduced
                run_sign = sign;
                run += sign;
                break;
            }
            case Letter::t:
                if (in_tail) return std::nullopt;
                digits.push_back(run);
                run = 0;
                run_sign = 0;
                break;
            case Letter::t_inv:
                if (!in_tail) {
                    digits.push_back(run);
                    run = 0;
                    in_tail = true;
                }
                ++s.c;
                break;
        }
    }
    if (!in_tail) digits.push_back(run);
    s.digits = std::move(digits);
    return s;
}

int last_nonzero_index(const std::vector<long>& xs) {
    for (int i = static_cast<int>(xs.size()) - 1; i >= 0; --i)
        if (xs[i] != 0) return i;
    return -1;
}

// ------------------------------------------------- abelian family predicates

// Digit conditions shared by the E and C families. t_terminated = the final
// digit is followed by t^-1 letters (shapes b and c); otherwise shape d.
// The pair conditions were pinned against the brute-force oracle; see the
// language tests for the bijection and uniqueness checks.
bool digits_ok(const Context& ctx, const std::vector<long>& xs, bool t_terminated) {
    const int k = ctx.k();
    const long r = ctx.r();
    const int d = static_cast<int>(xs.size()) - 1;
    const int dlow = last_nonzero_index(xs);
    if (dlow < 0) return false;   // all-zero digit words reduce away

    const long mid_bound = k == 2 ? 1 : r;
    for (int i = 0; i < dlow; ++i)
        if (std::labs(xs[i]) > mid_bound) return false;
    const long top = std::labs(xs[dlow]);
    if (k == 2) {
        if (t_terminated) {
            if (dlow != d || (top != 2 && top != 3)) return false;
        } else if (top > (dlow == d ? 3 : 1)) {
            return false;
        }
    } else if (ctx.odd()) {
        if (top > r + 1) return false;
        if (t_terminated && dlow != d) return false;
    } else {
        if (top > (dlow == d ? r + 1 : r)) return false;
        if (t_terminated && dlow != d) return false;
    }

    if (k == 2) {
        // no two adjacent nonzero digits strictly before the top digit
        for (int i = 1; i < dlow; ++i)
            if (xs[i - 1] != 0 && xs[i] != 0) return false;
        // top digit sign-coherent with its predecessor
        if (dlow >= 1) {
            if (xs[dlow] > 0 && xs[dlow - 1] < 0) return false;
            if (xs[dlow] < 0 && xs[dlow - 1] > 0) return false;
        }
        if (t_terminated) {
            // a^{-+1} t t a^{+-2} t^-1 collapses to the shorter a^{+-1} t a^{+-3} t^-1
            if (d >= 2 && xs[d - 1] == 0 && std::labs(xs[d]) == 2 &&
                xs[d - 2] == -(xs[d] / 2))
                return false;
        } else {
            // the t^-d-shape tie a^{-+1}tta^{+-1} vs a^{+-1}ta^{+-1}t
            if (dlow >= 2 && xs[dlow - 1] == 0 && std::labs(xs[dlow]) == 1 &&
                xs[dlow - 2] == -xs[dlow])
                return false;
        }
        return true;
    }

    if (ctx.odd()) {
        // after a^{+-r}, the final digit may not be a^{-+1}
        if (dlow >= 1) {
            if (xs[dlow - 1] == r && xs[dlow] == -1) return false;
            if (xs[dlow - 1] == -r && xs[dlow] == 1) return false;
        }
        return true;
    }

    // even k >= 4: after +-r an inner digit is sign-matched with |.| < r,
    // and the top digit is sign-matched with no magnitude cap beyond r+1
    for (int i = 1; i < dlow; ++i) {
        if (xs[i - 1] == r && !(0 <= xs[i] && xs[i] < r)) return false;
        if (xs[i - 1] == -r && !(-r < xs[i] && xs[i] <= 0)) return false;
    }
    if (dlow >= 1) {
        if (xs[dlow - 1] == r && xs[dlow] < 0) return false;
        if (xs[dlow - 1] == -r && xs[dlow] > 0) return false;
    }
    if (t_terminated) {
        // forbidden endings a^{+-(r-1)} t a^{-+1} t^-1  and  a^{+-r} t a^{+-(r-2)} t a^{-+1} t^-1
        if (d >= 1 && ((xs[d - 1] == r - 1 && xs[d] == -1) ||
                       (xs[d - 1] == -(r - 1) && xs[d] == 1)))
            return false;
        if (d >= 2 && ((xs[d - 2] == r && xs[d - 1] == r - 2 && xs[d] == -1) ||
                       (xs[d - 2] == -r && xs[d - 1] == -(r - 2) && xs[d] == 1)))
            return false;
    } else {
        // t^-d-shape tie breaker: drop a^{-+r} t a^{-+(r-1)} t a^{+-1} in favour
        // of the sign-flipped a^{+-r} t a^{+-r} ending
        if (dlow >= 2 && ((xs[dlow - 2] == -r && xs[dlow - 1] == -(r - 1) && xs[dlow] == 1) ||
                          (xs[dlow - 2] == r && xs[dlow - 1] == r - 1 && xs[dlow] == -1)))
            return false;
    }
    return true;
}

bool bare_ok(const Context& ctx, long n, bool conjugacy) {
    const long a = std::labs(n);
    if (ctx.k() == 2) {
        if (conjugacy) return a == 0 || a == 1 || a == 3;  // a^{+-2} ~ a^{+-1}
        return a <= 3;
    }
    return a <= ctx.r() + 1;
}

bool abelian_member(const Context& ctx, const Word& w, bool conjugacy) {
    auto shape = parse_digit_shape(w);
    if (!shape) return false;
    const auto& s = *shape;
    if (s.b + s.c != s.d()) return false;   // nonzero t-exponent sum
    if (s.d() == 0) {
        return s.b == 0 && s.c == 0 && bare_ok(ctx, s.digits[0], conjugacy);
    }
    if (conjugacy) {
        // conjugacy representatives use only the integral shape with x_0 != 0
        if (s.b != 0 || s.c != s.d()) return false;
        if (s.digits.front() == 0 || s.digits.back() == 0) return false;
        return digits_ok(ctx, s.digits, true);
    }
    if (s.b == 0) {
        if (s.c != s.d() || s.digits.back() == 0) return false;
        return digits_ok(ctx, s.digits, true);
    }
    if (s.c == 0) {
        if (s.b != s.d() || s.digits.front() == 0) return false;
        return digits_ok(ctx, s.digits, false);
    }
    if (s.digits.front() == 0 || s.digits.back() == 0) return false;
    return digits_ok(ctx, s.digits, true);
}

// ------------------------------------------------------- syllable families

// A_plus words a^{x_0} t a^{x_1} t ... a^{x_{m-1}} t with the cyclic
// conventions x_{-1} = x_{m-1}.
std::optional<std::vector<long>> parse_syllables_plus(const Word& w) {
    if (w.empty() || w.back() != Letter::t) return std::nullopt;
    auto shape = parse_digit_shape(w);
    if (!shape || shape->b != 0 || shape->c != 0) return std::nullopt;
    // trailing t means last digit slot is an empty run after the final t
    if (shape->digits.back() != 0) return std::nullopt;
    std::vector<long> xs(shape->digits.begin(), shape->digits.end() - 1);
    if (xs.empty()) return std::nullopt;
    return xs;
}

bool syllables_plus_ok(const Context& ctx, const std::vector<long>& xs) {
    const long r = ctx.r();
    const int m = static_cast<int>(xs.size());
    for (long x : xs)
        if (std::labs(x) > r) return false;
    if (ctx.odd()) {
        if (std::all_of(xs.begin(), xs.end(), [&](long x) { return x == -r; })) return false;
        return true;
    }
    for (int i = 0; i < m; ++i) {
        const long prev = xs[(i + m - 1) % m];
        if (prev == r && !(0 <= xs[i] && xs[i] < r)) return false;
        if (prev == -r && !(-r < xs[i] && xs[i] <= 0)) return false;
    }
    if (m % 2 == 0) {
        auto alternates = [&](long first) {
            for (int i = 0; i < m; ++i)
                if (xs[i] != ((i % 2 == 0) ? first : (first == -r ? -(r - 1) : -r))) return false;
            return true;
        };
        if (alternates(-(r - 1)) || alternates(-r)) return false;
    }
    return true;
}

Word word_from_syllables_plus(const std::vector<long>& xs) {
    Word w;
    for (long x : xs) {
        for (long j = 0; j < std::labs(x); ++j) w.push_back(x > 0 ? Letter::a : Letter::a_inv);
        w.push_back(Letter::t);
    }
    return w;
}

Word word_from_syllables_minus(const std::vector<long>& xs_plus) {
    // inverse of the A_plus word: t^-1 a^{-x_{m-1}} t^-1 a^{-x_{m-2}} ...
    return word_inverse(word_from_syllables_plus(xs_plus));
}

// --------------------------------------------------------------- enumerators

template <typename Fn>
void for_each_digit_vector(long lo_abs_bound, long hi_abs_bound, int slots, long budget, Fn&& fn,
                           std::vector<long>& xs) {
    if (static_cast<int>(xs.size()) == slots) {
        fn(xs);
        return;
    }
    const bool last = static_cast<int>(xs.size()) == slots - 1;
    const long bound = last ? hi_abs_bound : lo_abs_bound;
    for (long x = -bound; x <= bound; ++x) {
        if (std::labs(x) > budget) continue;
        xs.push_back(x);
        for_each_digit_vector(lo_abs_bound, hi_abs_bound, slots, budget - std::labs(x), fn, xs);
        xs.pop_back();
    }
}

Word word_from_shape(int b, const std::vector<long>& digits, int c) {
    Word w;
    for (int i = 0; i < b; ++i) w.push_back(Letter::t_inv);
    const int d = static_cast<int>(digits.size()) - 1;
    for (int i = 0; i <= d; ++i) {
        long x = digits[i];
        for (long j = 0; j < std::labs(x); ++j) w.push_back(x > 0 ? Letter::a : Letter::a_inv);
        if (i < d) w.push_back(Letter::t);
    }
    for (int i = 0; i < c; ++i) w.push_back(Letter::t_inv);
    return w;
}

void abelian_members(const Context& ctx, int n, bool conjugacy, std::vector<Word>& out) {
    if (n == 0) {
        out.push_back({});
        return;
    }
    if (bare_ok(ctx, n, conjugacy)) {
        Word pos(n, Letter::a), neg(n, Letter::a_inv);
        out.push_back(pos);
        out.push_back(neg);
    }
    // generate with the loose top bound everywhere; digits_ok applies the
    // position-sensitive bounds (the top digit need not sit in the last slot)
    const long top = ctx.k() == 2 ? 3 : ctx.r() + 1;
    std::vector<long> xs;
    for (int d = 1; 2 * d <= n; ++d) {
        const long budget = n - 2 * d;
        for_each_digit_vector(top, top, d + 1, budget,
            [&](const std::vector<long>& digits) {
                if (std::accumulate(digits.begin(), digits.end(), 0L,
                                    [](long acc, long x) { return acc + std::labs(x); }) != budget)
                    return;
                // shape b (t^-d tail): conjugacy reps also need x_0 != 0
                if (digits.back() != 0 && (!conjugacy || digits.front() != 0) &&
                    digits_ok(ctx, digits, true)) {
                    out.push_back(word_from_shape(0, digits, d));
                }
                if (conjugacy) return;
                // shape d (t^-d head)
                if (digits.front() != 0 && digits_ok(ctx, digits, false)) {
                    out.push_back(word_from_shape(d, digits, 0));
                }
                // shape c (split tail), one word per b in 1..d-1
                if (digits.front() != 0 && digits.back() != 0 && digits_ok(ctx, digits, true)) {
                    for (int b = 1; b < d; ++b) {
                        out.push_back(word_from_shape(b, digits, d - b));
                    }
                }
            },
            xs);
    }
}

std::vector<long> rotate_to_least(const std::vector<long>& xs) {
    const std::size_t s = least_rotation(std::span<const long>(xs));
    std::vector<long> out;
    out.reserve(xs.size());
    out.insert(out.end(), xs.begin() + static_cast<long>(s), xs.end());
    out.insert(out.end(), xs.begin(), xs.begin() + static_cast<long>(s));
    return out;
}

void necklace_members(const Context& ctx, int n, bool plus, std::vector<Word>& out) {
    if (n <= 0) return;
    const long r = ctx.r();
    std::vector<long> xs;
    for (int m = 1; m <= n; ++m) {
        const long budget = n - m;
        std::function<void(long)> rec = [&](long remaining) {
            if (static_cast<int>(xs.size()) == m) {
                if (remaining != 0) return;
                if (!syllables_plus_ok(ctx, xs)) return;
                if (least_rotation(std::span<const long>(xs)) != 0) return;
                // xs is the canonical rotation of its necklace
                out.push_back(plus ? word_from_syllables_plus(xs)
                                   : word_from_syllables_minus(xs));
                return;
            }
            for (long x = -r; x <= r; ++x) {
                if (std::labs(x) > remaining) continue;
                xs.push_back(x);
                rec(remaining - std::labs(x));
                xs.pop_back();
            }
        };
        rec(budget);
    }
}

} // namespace

std::size_t least_rotation(std::span<const long> seq) {
    const std::size_t n = seq.size();
    if (n <= 1) return 0;
    // Booth's algorithm on the doubled sequence
    std::vector<long> f(2 * n, -1);
    std::size_t kk = 0;
    auto at = [&](std::size_t i) { return seq[i % n]; };
    for (std::size_t j = 1; j < 2 * n; ++j) {
        long i = f[j - kk - 1];
        while (i != -1 && at(j) != at(kk + static_cast<std::size_t>(i) + 1)) {
            if (at(j) < at(kk + static_cast<std::size_t>(i) + 1)) kk = j - i - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && at(j) != at(kk)) {
            if (at(j) < at(kk)) kk = j;
            f[j - kk] = -1;
        } else {
            f[j - kk] = i + 1;
        }
    }
    return kk;
}

bool is_member(const Context& ctx, Family family, const Word& w) {
    switch (family) {
        case Family::E_o: require(ctx.odd(), "E_o needs odd k"); return abelian_member(ctx, w, false);
        case Family::E_e: require(!ctx.odd() && ctx.k() > 2, "E_e needs even k >= 4"); return abelian_member(ctx, w, false);
        case Family::E_2: require(ctx.k() == 2, "E_2 needs k = 2"); return abelian_member(ctx, w, false);
        case Family::C_o: require(ctx.odd(), "C_o needs odd k"); return abelian_member(ctx, w, true);
        case Family::C_e: require(!ctx.odd() && ctx.k() > 2, "C_e needs even k >= 4"); return abelian_member(ctx, w, true);
        case Family::C_2: require(ctx.k() == 2, "C_2 needs k = 2"); return abelian_member(ctx, w, true);
        case Family::A_plus: {
            auto xs = parse_syllables_plus(w);
            return xs && syllables_plus_ok(ctx, *xs);
        }
        case Family::A_minus: {
            auto xs = parse_syllables_plus(word_inverse(w));
            return xs && syllables_plus_ok(ctx, *xs);
        }
    }
    return false;
}

std::vector<Word> members_of_length(const Context& ctx, Family family, int n) {
    require(n >= 0, "members_of_length: n must be >= 0");
    std::vector<Word> out;
    switch (family) {
        case Family::E_o:
        case Family::E_e:
        case Family::E_2:
            require(family == element_family(ctx), "element family does not match k");
            abelian_members(ctx, n, false, out);
            break;
        case Family::C_o:
        case Family::C_e:
        case Family::C_2:
            require(family == conjugacy_family(ctx), "conjugacy family does not match k");
            abelian_members(ctx, n, true, out);
            break;
        case Family::A_plus:
            necklace_members(ctx, n, true, out);
            break;
        case Family::A_minus:
            necklace_members(ctx, n, false, out);
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_by_length(const Context& ctx, Family family, int n) {
    return members_of_length(ctx, family, n).size();
}

namespace {

// Balanced digit vector for the class of (x, m), m > 0: digits x_0..x_{m-1}
// with |x_i| <= r and sum x_i k^i = x (mod k^m - 1), followed by the
// even-case pair repairs of the representative procedure.
std::vector<long> representative_digits(const Context& ctx, const GroupElement& g) {
    const int k = ctx.k();
    const long r = ctx.r();
    require(g.m > 0 && g.m <= 4096, "representative_digits: t-exponent out of range");
    const int m = static_cast<int>(g.m);
    const BigInt M = pow_int(k, m) - 1;
    std::vector<long> xs(m, 0);
    if (M > 1) {
        BigInt kinv = pow_mod(k, m - 1, M);
        BigInt v = mod_floor(g.x.num, M) * pow_mod(kinv, g.x.exp, M) % M;
        // v < M < k^m, so m base-k digits absorb it completely
        for (int i = 0; i < m; ++i) {
            xs[i] = static_cast<long>(v % k);
            v /= k;
        }
    }
    // balanced reduction with cyclic carries (value stays fixed mod M)
    for (int guard = 0; guard < 64 * m * k; ++guard) {
        bool changed = false;
        for (int i = 0; i < m; ++i) {
            while (xs[i] > r) {
                xs[i] -= k;
                ++xs[(i + 1) % m];
                changed = true;
            }
            while (xs[i] < -r) {
                xs[i] += k;
                --xs[(i + 1) % m];
                changed = true;
            }
        }
        if (!changed) break;
    }
    if (ctx.odd()) {
        if (std::all_of(xs.begin(), xs.end(), [&](long x) { return x == -r; }))
            std::fill(xs.begin(), xs.end(), r);   // conjugate class, translation by k^m - 1
        return xs;
    }
    // even case: repair the cyclic pair conditions
    if (m == 1) {
        // a single syllable constrains itself: +-r reduces by +-M = +-(k-1)
        if (xs[0] == r) xs[0] = -(r - 1);
        else if (xs[0] == -r) xs[0] = r - 1;
        return xs;
    }
    for (int guard = 0; guard < 64 * m * k; ++guard) {
        bool changed = false;
        for (int i = 0; i < m && !changed; ++i) {
            const int p = (i + m - 1) % m;
            if (xs[p] == r && xs[i] < 0) {
                xs[p] = -r;
                xs[i] += 1;
                changed = true;
            } else if (xs[p] == -r && xs[i] > 0) {
                xs[p] = r;
                xs[i] -= 1;
                changed = true;
            } else if (xs[p] == r && xs[i] == r) {
                xs[p] = -r;
                xs[i] = -(r - 1);
                xs[(i + 1) % m] += 1;
                changed = true;
            } else if (xs[p] == -r && xs[i] == -r) {
                xs[p] = r;
                xs[i] = r - 1;
                xs[(i + 1) % m] -= 1;
                changed = true;
            }
        }
        if (!changed) {
            // digits may have left [-r, r] after a repair carry
            bool balanced = std::all_of(xs.begin(), xs.end(),
                                        [&](long x) { return std::labs(x) <= r; });
            if (balanced) break;
            for (int i = 0; i < m; ++i) {
                while (xs[i] > r) { xs[i] -= k; ++xs[(i + 1) % m]; }
                while (xs[i] < -r) { xs[i] += k; --xs[(i + 1) % m]; }
            }
        }
    }
    if (m % 2 == 0) {
        auto alternates = [&](long first, long second) {
            for (int i = 0; i < m; ++i)
                if (xs[i] != (i % 2 == 0 ? first : second)) return false;
            return true;
        };
        if (alternates(-(r - 1), -r) || alternates(-r, -(r - 1))) {
            for (auto& x : xs) x = -x;   // the sign-flipped word is conjugate and legal
        }
    }
    return xs;
}

} // namespace

Word rewrite_to_representative(const Context& ctx, const Word& w) {
    GroupElement g = eval_word(ctx, w);
    require(g.m != 0, "rewrite_to_representative: word has zero t-exponent sum");
    const bool plus = g.m > 0;
    GroupElement base = plus ? g : invert(ctx, g);
    std::vector<long> xs = representative_digits(ctx, base);
    xs = rotate_to_least(xs);
    Word out = plus ? word_from_syllables_plus(xs) : word_from_syllables_minus(xs);
    if (!is_member(ctx, plus ? Family::A_plus : Family::A_minus, out) ||
        canonical_key(ctx, eval_word(ctx, out)) != canonical_key(ctx, g)) {
        throw std::logic_error("rewrite_to_representative: procedure failed to converge");
    }
    return out;
}

bool check_geodesic_subwords(const Word& w) {
    // condition 3: at most one pinch t^-1 a^i t and at most one t a^i t^-1
    int down_up = 0, up_down = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != Letter::t_inv && w[i] != Letter::t) continue;
        std::size_t j = i + 1;
        bool has_a = false, same_sign = true;
        while (j < w.size() && (w[j] == Letter::a || w[j] == Letter::a_inv)) {
            if (has_a && w[j] != w[j - 1]) same_sign = false;
            has_a = true;
            ++j;
        }
        if (!has_a || !same_sign || j >= w.size()) continue;
        if (w[i] == Letter::t_inv && w[j] == Letter::t) ++down_up;
        if (w[i] == Letter::t && w[j] == Letter::t_inv) ++up_down;
    }
    if (down_up > 1 || up_down > 1) return false;

    // conditions 1 and 2: window inequalities between consecutive runs of
    // t^-1 (resp. t) with nonzero a-runs at both boundaries
    auto window_check = [&](Letter outer, Letter inner) {
        std::vector<std::pair<std::size_t, std::size_t>> runs;  // [start, end)
        std::size_t i = 0;
        while (i < w.size()) {
            if (w[i] != outer) { ++i; continue; }
            std::size_t s = i;
            while (i < w.size() && w[i] == outer) ++i;
            runs.emplace_back(s, i);
        }
        for (std::size_t q = 1; q < runs.size(); ++q) {
            const auto [ps, pe] = runs[q - 1];
            const auto [cs, ce] = runs[q];
            long inner_count = 0;
            bool lead = false, tail = false;
            long tail_a = 0;
            bool lead_zone = true;
            for (std::size_t p = pe; p < cs; ++p) {
                if (w[p] == inner) {
                    ++inner_count;
                    lead_zone = false;
                    tail_a = 0;
                } else {
                    if (lead_zone) lead = true;
                    ++tail_a;
                }
            }
            tail = tail_a > 0;
            if (inner_count >= 1 && lead && tail) {
                const long r1 = static_cast<long>(pe - ps);
                const long r2 = static_cast<long>(ce - cs);
                if (r1 + r2 > inner_count) return false;
            }
        }
        return true;
    };
    if (!window_check(Letter::t_inv, Letter::t)) return false;
    if (!window_check(Letter::t, Letter::t_inv)) return false;
    return true;
}

} // namespace bsgrowth
