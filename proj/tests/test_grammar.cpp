#include "bsgrowth/grammar.hpp"

#include "bsgrowth/languages.hpp"

#include <doctest.h>

#include <set>

using namespace bsgrowth;

TEST_CASE("grammar construction validates its invariants") {
    // S -> a S | eps has a positive-weight recursion: fine
    CHECK_NOTHROW(parse_grammar("S -> a^1 S | eps"));
    // unit cycle of zero weight
    CHECK_THROWS_AS(parse_grammar("S -> U\nU -> S | a^1"), std::invalid_argument);
    // unproductive variable
    CHECK_THROWS_AS(parse_grammar("S -> a^1 | U\nU -> U a^1"), std::invalid_argument);
    // unreachable variable
    CHECK_THROWS_AS(parse_grammar("S -> a^1\nU -> a^2"), std::invalid_argument);
}

TEST_CASE("conjugacy grammar shapes") {
    Grammar g3 = build_conjugacy_grammar(3);
    // A has the four alternatives a^-2 | a^-1 | a | a^2
    const auto& vars3 = g3.variables();
    std::size_t a_index = std::find(vars3.begin(), vars3.end(), "A") - vars3.begin();
    CHECK(g3.productions()[a_index].size() == 4);

    Grammar g2 = build_conjugacy_grammar(2);
    std::size_t t_index =
        std::find(g2.variables().begin(), g2.variables().end(), "T") - g2.variables().begin();
    CHECK(g2.productions()[t_index].size() == 6);

    // for k = 4 the short-digit variable B is vacuous and dropped
    Grammar g4 = build_conjugacy_grammar(4);
    CHECK(std::find(g4.variables().begin(), g4.variables().end(), "B") == g4.variables().end());
    Grammar g6 = build_conjugacy_grammar(6);
    CHECK(std::find(g6.variables().begin(), g6.variables().end(), "B") != g6.variables().end());
}

TEST_CASE("trivial grammar series") {
    Grammar g = parse_grammar("S -> eps | a^1 S");
    PowerSeries s = dsv_series(g, 6);
    for (int i = 0; i <= 6; ++i) CHECK(s[i] == 1);
    DerivationCount words = language_up_to(g, 4);
    CHECK(words.by_length[0].size() == 1);
    CHECK(words.by_length[0].count(""));
    CHECK(words.words_of_length(3) == 1);
}

TEST_CASE("dsv series matches the closed forms") {
    CHECK(dsv_series(build_conjugacy_grammar(3), 5).integer_coefficients() ==
          std::vector<BigInt>{1, 2, 2, 0, 2, 4});
    for (int k : {2, 3, 4, 5, 6}) {
        CAPTURE(k);
        CHECK(dsv_series(build_conjugacy_grammar(k), 20) == expand(abelian_series(k), 20));
    }
}

TEST_CASE("grammar language equals the conjugacy representatives, unambiguously") {
    for (int k : {2, 3, 4, 5, 6}) {
        Context ctx(k);
        Grammar g = build_conjugacy_grammar(k);
        const int N = 12;
        DerivationCount words = language_up_to(g, N);
        CHECK(words.unambiguous());
        for (int n = 0; n <= N; ++n) {
            std::set<std::string> grammar_words;
            for (const auto& [w, count] : words.by_length[static_cast<std::size_t>(n)]) {
                CHECK(count == 1);
                grammar_words.insert(w);
            }
            std::set<std::string> family_words;
            for (const Word& w : members_of_length(ctx, conjugacy_family(ctx), n))
                family_words.insert(to_string(w));
            CAPTURE(k);
            CAPTURE(n);
            CHECK(grammar_words == family_words);
        }
    }
}

TEST_CASE("dsv series equals the language census by weighted length") {
    for (int k : {2, 4, 5}) {
        Grammar g = build_conjugacy_grammar(k);
        const int N = 10;
        DerivationCount words = language_up_to(g, N);
        PowerSeries s = dsv_series(g, N);
        for (int n = 0; n <= N; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(s[n] == Rational(words.words_of_length(n)));
        }
    }
}

TEST_CASE("grammar text round-trip") {
    for (int k : {2, 3, 4, 6}) {
        Grammar g = build_conjugacy_grammar(k);
        const std::string text = dump_grammar(g);
        Grammar parsed = parse_grammar(text);
        CHECK(dump_grammar(parsed) == text);
        // and the reparsed grammar describes the same language
        CHECK(dsv_series(parsed, 12) == dsv_series(g, 12));
    }
}
