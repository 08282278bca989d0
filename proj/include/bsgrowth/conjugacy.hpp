#pragma once

#include "bsgrowth/group.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace bsgrowth {

// Canonical identifier of a conjugacy class.
//
// m == 0 (the class lies in Z[1/k]): datum is the unique integer x* in the
// orbit {x k^e} with x* = 0 or k !| x*.
//
// m != 0: the a- and t-conjugates of (x, m) sweep out exactly the residues
// {k^l * (x mod M)} mod M, where M = k^|m| - 1 (k is invertible mod M, so
// the residue of x = p/k^e is p * (k^{|m|-1})^e mod M). datum is the minimum
// of that multiplication-by-k orbit, which has size dividing |m|.
struct ConjKey {
    BigInt m;
    BigInt datum;

    bool operator==(const ConjKey&) const = default;
    std::strong_ordering operator<=>(const ConjKey&) const = default;
    bool abelian() const { return m == 0; }
};

struct ConjKeyHash {
    std::size_t operator()(const ConjKey& key) const;
};

struct KeyLimits {
    // refuse to build the modulus k^|m| - 1 past this many bits
    std::uint64_t max_modulus_bits = 1u << 22;
};

ConjKey canonical_key(const Context& ctx, const GroupElement& g, const KeyLimits& limits = {});

bool are_conjugate(const Context& ctx, const GroupElement& g, const GroupElement& h,
                   const KeyLimits& limits = {});

// The full multiplication-by-k orbit of r mod (k^|m| - 1), sorted ascending.
std::vector<BigInt> orbit_residues(const Context& ctx, const BigInt& m, const BigInt& r,
                                   const KeyLimits& limits = {});

// An explicit conjugator h with h g h^-1 = target, built from the orbit
// arithmetic (no search). Returns nothing when the elements are not conjugate.
std::optional<GroupElement> find_conjugator(const Context& ctx, const GroupElement& g,
                                            const GroupElement& target,
                                            const KeyLimits& limits = {});

} // namespace bsgrowth
