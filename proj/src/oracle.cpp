#include "bsgrowth/oracle.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bsgrowth {

std::vector<std::uint64_t> SphereTable::ball_sizes() const {
    std::vector<std::uint64_t> out(sphere_sizes.size());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < sphere_sizes.size(); ++i) {
        acc += sphere_sizes[i];
        out[i] = acc;
    }
    return out;
}

std::vector<std::uint64_t> SphereTable::conjugacy_strict() const {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(radius) + 1, 0);
    for (const auto& [key, n] : class_first_seen) {
        ++c[static_cast<std::size_t>(n)];
    }
    return c;
}

std::vector<std::uint64_t> SphereTable::conjugacy_cumulative() const {
    std::vector<std::uint64_t> c = conjugacy_strict();
    for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
    return c;
}

SphereTable bfs_ball(const Context& ctx, int radius, const BfsLimits& limits) {
    require(radius >= 0, "bfs_ball: radius must be >= 0");
    SphereTable table;
    table.k = ctx.k();
    table.radius = radius;

    std::unordered_map<GroupElement, int, GroupElementHash> seen;
    std::vector<GroupElement> frontier{identity()};
    seen.emplace(identity(), 0);
    table.sphere_sizes.push_back(1);

    const GroupElement gens[4] = {
        generator_a(ctx, +1), generator_a(ctx, -1),
        generator_t(ctx, +1), generator_t(ctx, -1),
    };

    for (int n = 1; n <= radius; ++n) {
        std::vector<GroupElement> next;
        next.reserve(frontier.size() * 3);
        for (const GroupElement& g : frontier) {
            for (const GroupElement& v : gens) {
                GroupElement h = multiply(ctx, g, v);
                if (seen.emplace(h, n).second) {
                    next.push_back(std::move(h));
                }
            }
        }
        if (seen.size() > limits.max_elements) {
            throw ResourceError("bfs_ball: element budget exceeded at radius " +
                                    std::to_string(n),
                                n - 1);
        }
        table.sphere_sizes.push_back(next.size());
        frontier = std::move(next);
    }

    for (const auto& [g, n] : seen) {
        ConjKey key = canonical_key(ctx, g);
        auto [it, inserted] = table.class_first_seen.emplace(std::move(key), n);
        if (!inserted && it->second > n) it->second = n;
    }
    return table;
}

std::vector<std::uint64_t> conjugacy_growth_strict(const Context& ctx, int radius,
                                                   const BfsLimits& limits) {
    return bfs_ball(ctx, radius, limits).conjugacy_strict();
}

namespace {

constexpr char kCacheMagic[] = "bsgrowth-oracle-cache v1";

std::uint64_t fnv1a(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string cache_payload(const SphereTable& table) {
    std::ostringstream os;
    os << kCacheMagic << "\n";
    os << "k " << table.k << "\n";
    os << "radius " << table.radius << "\n";
    os << "spheres";
    for (auto s : table.sphere_sizes) os << ' ' << s;
    os << "\n";
    os << "classes " << table.class_first_seen.size() << "\n";
    for (const auto& [key, n] : table.class_first_seen) {
        os << key.m << ' ' << key.datum << ' ' << n << "\n";
    }
    return os.str();
}

} // namespace

std::filesystem::path cache_file_name(int k, int radius) {
    return "bs1k-oracle-k" + std::to_string(k) + "-n" + std::to_string(radius) + "-v1.txt";
}

void save_cache(const SphereTable& table, const std::filesystem::path& path) {
    const std::string payload = cache_payload(table);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CacheError("save_cache: cannot open " + path.string());
    out << payload << "checksum " << std::hex << fnv1a(payload) << "\n";
    if (!out) throw CacheError("save_cache: write failed for " + path.string());
}

SphereTable load_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("load_cache: cannot open " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    const auto pos = content.rfind("checksum ");
    if (pos == std::string::npos) throw CacheError("load_cache: missing checksum (truncated file?)");
    const std::string payload = content.substr(0, pos);
    std::uint64_t stored = 0;
    {
        std::istringstream cs(content.substr(pos + 9));
        cs >> std::hex >> stored;
        if (!cs) throw CacheError("load_cache: malformed checksum line");
    }
    if (stored != fnv1a(payload)) throw CacheError("load_cache: checksum mismatch (corrupt cache)");

    std::istringstream is(payload);
    std::string line;
    if (!std::getline(is, line) || line != kCacheMagic)
        throw CacheError("load_cache: unknown cache version");

    SphereTable table;
    std::string tag;
    is >> tag >> table.k;
    if (tag != "k") throw CacheError("load_cache: malformed header (k)");
    is >> tag >> table.radius;
    if (tag != "radius") throw CacheError("load_cache: malformed header (radius)");
    is >> tag;
    if (tag != "spheres") throw CacheError("load_cache: malformed header (spheres)");
    table.sphere_sizes.resize(static_cast<std::size_t>(table.radius) + 1);
    for (auto& s : table.sphere_sizes) is >> s;
    std::size_t count = 0;
    is >> tag >> count;
    if (tag != "classes") throw CacheError("load_cache: malformed header (classes)");
    for (std::size_t i = 0; i < count; ++i) {
        ConjKey key;
        int n;
        is >> key.m >> key.datum >> n;
        if (!is) throw CacheError("load_cache: truncated class records");
        table.class_first_seen.emplace(std::move(key), n);
    }
    if (table.class_first_seen.size() != count)
        throw CacheError("load_cache: duplicate class records");
    return table;
}

SphereTable load_or_compute(const Context& ctx, int radius,
                            const std::optional<std::filesystem::path>& cache_dir,
                            const BfsLimits& limits) {
    if (cache_dir) {
        const auto path = *cache_dir / cache_file_name(ctx.k(), radius);
        if (std::filesystem::exists(path)) {
            SphereTable table = load_cache(path);
            if (table.k != ctx.k() || table.radius != radius)
                throw CacheError("load_or_compute: cache key mismatch in " + path.string());
            return table;
        }
    }
    SphereTable table = bfs_ball(ctx, radius, limits);
    if (cache_dir) {
        std::filesystem::create_directories(*cache_dir);
        save_cache(table, *cache_dir / cache_file_name(ctx.k(), radius));
    }
    return table;
}

} // namespace bsgrowth
