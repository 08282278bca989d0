#pragma once

#include "bsgrowth/conjugacy.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

namespace bsgrowth {

// Exact Cayley-ball census for BS(1,k) with respect to {a, t}.
// sphere_sizes[n] = number of elements of word length exactly n;
// class_first_seen maps each conjugacy class met in the ball to the first
// radius at which one of its members appears (= the class length whenever
// that length is <= radius).
struct SphereTable {
    int k = 0;
    int radius = -1;
    std::vector<std::uint64_t> sphere_sizes;
    std::map<ConjKey, int> class_first_seen;

    bool operator==(const SphereTable&) const = default;

    std::vector<std::uint64_t> ball_sizes() const;
    // strict conjugacy growth c(0..radius); the cumulative version is its
    // prefix-sum sequence
    std::vector<std::uint64_t> conjugacy_strict() const;
    std::vector<std::uint64_t> conjugacy_cumulative() const;
};

struct BfsLimits {
    std::uint64_t max_elements = 40'000'000;
};

// Blocking, level-synchronous search; the returned table is immutable and
// safe to share across threads.
SphereTable bfs_ball(const Context& ctx, int radius, const BfsLimits& limits = {});

std::vector<std::uint64_t> conjugacy_growth_strict(const Context& ctx, int radius,
                                                   const BfsLimits& limits = {});

// Length-prefixed text cache, one file per (k, radius); see README for the
// exact format. Loading verifies version, header consistency and a checksum;
// any mismatch raises CacheError rather than silently recomputing.
void save_cache(const SphereTable& table, const std::filesystem::path& path);
SphereTable load_cache(const std::filesystem::path& path);

std::filesystem::path cache_file_name(int k, int radius);

// Loads the table from cache_dir when a valid file for (k, radius) exists,
// otherwise computes it and, if cache_dir is given, writes the file.
SphereTable load_or_compute(const Context& ctx, int radius,
                            const std::optional<std::filesystem::path>& cache_dir,
                            const BfsLimits& limits = {});

} // namespace bsgrowth
