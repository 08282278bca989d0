#pragma once

#include "bsgrowth/group.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bsgrowth {

// The explicit word languages attached to BS(1,k):
//   E_o / E_e / E_2  unique geodesic representatives of the elements of Z[1/k]
//   C_o / C_e / C_2  unique geodesic representatives of the conjugacy classes
//                    inside Z[1/k]  (odd k, even k >= 4, k = 2)
//   A_plus / A_minus syllable words a^{x_0}t...a^{x_{m-1}}t (resp. inverses)
//                    that represent the classes with m > 0 (resp. m < 0),
//                    one class per cyclic-rotation orbit.
enum class Family { E_o, E_e, E_2, C_o, C_e, C_2, A_plus, A_minus };

Family element_family(const Context& ctx);     // E_* matching k
Family conjugacy_family(const Context& ctx);   // C_* matching k

bool is_member(const Context& ctx, Family family, const Word& w);

// Exact number of members of the given length. For A_plus / A_minus this
// counts necklaces: cyclic words up to rotation by whole syllables, with the
// excluded exceptional powers removed.
std::uint64_t count_by_length(const Context& ctx, Family family, int n);

// The members themselves; for A_plus / A_minus one least-rotation
// representative per necklace. Deterministic order.
std::vector<Word> members_of_length(const Context& ctx, Family family, int n);

// Conjugates w (which must evaluate to some (x, m) with m != 0) into the
// representative language: a member of A_plus for m > 0, of A_minus for
// m < 0. The result's length equals the conjugacy length of [w], so it never
// exceeds |w| when w is geodesic. The digit vector is produced by balanced
// base-k rewriting modulo k^|m| - 1 followed by the even-case pair repairs.
Word rewrite_to_representative(const Context& ctx, const Word& w);

// Necessary geodesic conditions on subword patterns: at most one pinch of
// each kind, and both t-exponent window inequalities. True = no violation.
bool check_geodesic_subwords(const Word& w);

// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const long> seq);

} // namespace bsgrowth
