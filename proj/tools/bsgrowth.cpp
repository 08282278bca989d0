// Command-line front end: growth tables with cross-checks, growth-rate
// reports, and grammar validation.
//
// Exit codes: 0 success, 1 mismatch or failed assertion, 2 usage error,
// 3 resource limit.

#include "bsgrowth/grammar.hpp"
#include "bsgrowth/languages.hpp"
#include "bsgrowth/oracle.hpp"
#include "bsgrowth/roots.hpp"
#include "bsgrowth/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>

using namespace bsgrowth;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct CommonOptions {
    int k = 2;
    std::string format = "table";
    std::string cache_dir;

    std::optional<std::filesystem::path> cache_path() const {
        // the environment variable overrides the flag
        if (const char* env = std::getenv("BSGROWTH_CACHE_DIR")) return std::filesystem::path(env);
        if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
        return std::nullopt;
    }
};

Rational parse_precision(const std::string& text) {
    // accepts "1e-6", "0.001" or "p/q"
    if (auto slash = text.find('/'); slash != std::string::npos) {
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const double v = std::stod(text);
    require(v > 0 && v <= 1, "precision must be in (0, 1]");
    Rational r(1);
    while (r > Rational(v * 1.0000001)) r /= 10;
    return r;
}

std::vector<std::uint64_t> language_counts(const Context& ctx, int max_n) {
    std::vector<std::uint64_t> out;
    for (int n = 0; n <= max_n; ++n) {
        out.push_back(count_by_length(ctx, conjugacy_family(ctx), n) +
                      count_by_length(ctx, Family::A_plus, n) +
                      count_by_length(ctx, Family::A_minus, n));
    }
    return out;
}

int cmd_series(const CommonOptions& common, int max_n, const std::string& method) {
    Context ctx(common.k);
    std::vector<std::string> methods;
    if (method == "all") methods = {"oracle", "language", "formula"};
    else methods = {method};

    std::map<std::string, std::vector<std::uint64_t>> counts;
    for (const std::string& m : methods) {
        if (m == "oracle") {
            counts["oracle"] = load_or_compute(ctx, max_n, common.cache_path()).conjugacy_strict();
        } else if (m == "language") {
            counts["language"] = language_counts(ctx, max_n);
        } else {
            PowerSeries s = full_conjugacy_series(common.k, max_n);
            std::vector<std::uint64_t> v;
            for (int n = 0; n <= max_n; ++n)
                v.push_back(static_cast<std::uint64_t>(numerator(s[n])));
            counts["formula"] = v;
        }
    }

    bool all_match = true;
    std::vector<bool> row_match(static_cast<std::size_t>(max_n) + 1, true);
    if (methods.size() > 1) {
        for (int n = 0; n <= max_n; ++n) {
            const auto& ref = counts[methods[0]];
            for (const auto& m : methods)
                if (counts[m][static_cast<std::size_t>(n)] != ref[static_cast<std::size_t>(n)])
                    row_match[static_cast<std::size_t>(n)] = false;
            all_match = all_match && row_match[static_cast<std::size_t>(n)];
        }
    }

    if (common.format == "json") {
        json out{{"command", "series"}, {"k", common.k}, {"max_n", max_n}, {"method", method}};
        for (const auto& m : methods) out["counts"][m] = counts[m];
        if (methods.size() > 1) out["match"] = all_match;
        std::cout << out.dump(2) << "\n";
    } else if (common.format == "csv") {
        std::cout << "n,method,count\n";
        for (int n = 0; n <= max_n; ++n)
            for (const auto& m : methods)
                std::cout << n << ',' << m << ',' << counts[m][static_cast<std::size_t>(n)] << "\n";
    } else {
        std::cout << "n";
        for (const auto& m : methods) std::cout << '\t' << m;
        if (methods.size() > 1) std::cout << "\tverdict";
        std::cout << "\n";
        for (int n = 0; n <= max_n; ++n) {
            std::cout << n;
            for (const auto& m : methods) std::cout << '\t' << counts[m][static_cast<std::size_t>(n)];
            if (methods.size() > 1)
                std::cout << '\t' << (row_match[static_cast<std::size_t>(n)] ? "MATCH" : "MISMATCH");
            std::cout << "\n";
        }
    }
    return all_match ? kOk : kMismatch;
}

int cmd_rates(const CommonOptions& common, const std::string& precision) {
    const Rational width = parse_precision(precision);
    RateReport r = growth_rates(common.k, width);
    const bool range_applies = common.k >= 3;
    const bool range_pass = !range_applies || r.abelian_rate_in_range;
    const bool pass = r.numerator_nonvanishing && range_pass && r.conjugacy_dominates;

    if (common.format == "json") {
        json out{{"command", "rates"},
                 {"k", common.k},
                 {"abelian_root", {{"lo", to_double(r.abelian_root.lo)},
                                   {"hi", to_double(r.abelian_root.hi)},
                                   {"exact", r.abelian_root.exact()}}},
                 {"conjugacy_root", {{"lo", to_double(r.conjugacy_root.lo)},
                                     {"hi", to_double(r.conjugacy_root.hi)},
                                     {"exact", r.conjugacy_root.exact()}}},
                 {"abelian_rate", {{"lo", to_double(r.abelian_rate_lo())},
                                   {"hi", to_double(r.abelian_rate_hi())}}},
                 {"conjugacy_rate", {{"lo", to_double(r.conjugacy_rate_lo())},
                                     {"hi", to_double(r.conjugacy_rate_hi())}}},
                 {"numerator_nonvanishing", r.numerator_nonvanishing},
                 {"abelian_rate_in_range", r.abelian_rate_in_range},
                 {"conjugacy_dominates", r.conjugacy_dominates},
                 {"pass", pass}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "k = " << common.k << "\n";
        std::cout << "abelian root      in [" << to_double(r.abelian_root.lo) << ", "
                  << to_double(r.abelian_root.hi) << "]"
                  << (r.abelian_root.exact() ? " (exact)" : "") << "\n";
        std::cout << "abelian rate      in [" << to_double(r.abelian_rate_lo()) << ", "
                  << to_double(r.abelian_rate_hi()) << "]\n";
        std::cout << "conjugacy root    in [" << to_double(r.conjugacy_root.lo) << ", "
                  << to_double(r.conjugacy_root.hi) << "]"
                  << (r.conjugacy_root.exact() ? " (exact)" : "") << "\n";
        std::cout << "conjugacy rate    in [" << to_double(r.conjugacy_rate_lo()) << ", "
                  << to_double(r.conjugacy_rate_hi()) << "]\n";
        std::cout << "numerator nonzero at root: " << (r.numerator_nonvanishing ? "PASS" : "FAIL")
                  << "\n";
        if (range_applies)
            std::cout << "abelian rate in (4/3, 2):  "
                      << (r.abelian_rate_in_range ? "PASS" : "FAIL") << "\n";
        std::cout << "conjugacy rate dominates:  " << (r.conjugacy_dominates ? "PASS" : "FAIL")
                  << "\n";
    }
    return pass ? kOk : kMismatch;
}

int cmd_grammar_check(const CommonOptions& common, int max_n) {
    Context ctx(common.k);
    Grammar g = build_conjugacy_grammar(common.k);
    DerivationCount words = language_up_to(g, max_n);
    bool pass = words.unambiguous();
    std::vector<std::uint64_t> grammar_counts, family_counts;
    for (int n = 0; n <= max_n; ++n) {
        grammar_counts.push_back(words.words_of_length(n));
        family_counts.push_back(count_by_length(ctx, conjugacy_family(ctx), n));
        std::set<std::string> lhs, rhs;
        for (const auto& [w, c] : words.by_length[static_cast<std::size_t>(n)]) lhs.insert(w);
        for (const Word& w : members_of_length(ctx, conjugacy_family(ctx), n))
            rhs.insert(to_string(w));
        pass = pass && lhs == rhs;
    }

    if (common.format == "json") {
        json out{{"command", "grammar-check"},
                 {"k", common.k},
                 {"max_n", max_n},
                 {"unambiguous", words.unambiguous()},
                 {"grammar_counts", grammar_counts},
                 {"language_counts", family_counts},
                 {"pass", pass}};
        std::cout << out.dump(2) << "\n";
    } else if (common.format == "csv") {
        std::cout << "n,method,count\n";
        for (int n = 0; n <= max_n; ++n) {
            std::cout << n << ",grammar," << grammar_counts[static_cast<std::size_t>(n)] << "\n";
            std::cout << n << ",language," << family_counts[static_cast<std::size_t>(n)] << "\n";
        }
    } else {
        std::cout << "n\tgrammar\tlanguage\n";
        for (int n = 0; n <= max_n; ++n)
            std::cout << n << '\t' << grammar_counts[static_cast<std::size_t>(n)] << '\t'
                      << family_counts[static_cast<std::size_t>(n)] << "\n";
        std::cout << (pass ? "PASS" : "FAIL")
                  << " (unambiguous, language equals the representative set)\n";
    }
    return pass ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact conjugacy growth toolkit for the soluble Baumslag-Solitar groups BS(1,k)"};
    app.require_subcommand(1);

    CommonOptions common;
    int max_n = 10;
    std::string method = "all";
    std::string precision = "1e-3";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--k", common.k, "group parameter k >= 2")->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--format", common.format, "table | csv | json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--cache-dir", common.cache_dir,
                        "oracle cache directory (BSGROWTH_CACHE_DIR overrides)");
    };

    CLI::App* series = app.add_subcommand("series", "conjugacy growth c(0..n) by method");
    add_common(series);
    series->add_option("--max-n,--order", max_n, "largest length / series order")
        ->check(CLI::Range(0, 10000));
    series->add_option("--method", method, "oracle | language | formula | all")
        ->check(CLI::IsMember({"oracle", "language", "formula", "all"}));

    CLI::App* rates = app.add_subcommand("rates", "growth-rate constants by exact root isolation");
    add_common(rates);
    rates->add_option("--precision", precision, "root interval width (e.g. 1e-6)");

    CLI::App* grammar = app.add_subcommand("grammar-check",
                                           "verify grammar unambiguity and language equality");
    add_common(grammar);
    grammar->add_option("--max-n,--order", max_n, "largest word length checked")
        ->check(CLI::Range(0, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (series->parsed()) return cmd_series(common, max_n, method);
        if (rates->parsed()) return cmd_rates(common, precision);
        if (grammar->parsed()) return cmd_grammar_check(common, max_n);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
