#pragma once

#include "bsgrowth/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bsgrowth {

// Context-free grammar with weighted terminals: a^{+-j} is a single terminal
// of length weight j, t^{+-1} of weight 1. Construction validates that every
// variable is productive and reachable and that no derivation cycle has zero
// total terminal weight (so bounded enumeration and the DSV fixed point
// both terminate).
struct GrammarSymbol {
    bool is_terminal = false;
    int index = 0;

    bool operator==(const GrammarSymbol&) const = default;
};

struct GrammarTerminal {
    std::string text;   // compact letters, e.g. "aaa", "T"
    int weight = 0;     // letter count

    bool operator==(const GrammarTerminal&) const = default;
};

class Grammar {
public:
    using Alternative = std::vector<GrammarSymbol>;

    Grammar(std::vector<std::string> variables, std::vector<GrammarTerminal> terminals,
            std::vector<std::vector<Alternative>> productions, int start);

    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<GrammarTerminal>& terminals() const { return terminals_; }
    const std::vector<std::vector<Alternative>>& productions() const { return productions_; }
    int start() const { return start_; }

    bool operator==(const Grammar&) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<GrammarTerminal> terminals_;
    std::vector<std::vector<Alternative>> productions_;
    int start_;
};

// The conjugacy-representative grammar for the abelian part of BS(1,k),
// selected by parity (odd / even >= 4 / k = 2). Its language is exactly the
// matching C-family and it is unambiguous (checked in tests).
Grammar build_conjugacy_grammar(int k);

// Number of distinct leftmost derivations for every word of weighted length
// <= n, grouped by length. For an unambiguous grammar every count is 1.
struct DerivationCount {
    std::vector<std::map<std::string, std::uint64_t>> by_length;

    bool unambiguous() const;
    std::uint64_t words_of_length(int n) const;
};

DerivationCount language_up_to(const Grammar& g, int n);

// The DSV translation: terminals become z^weight, alternation becomes +,
// concatenation becomes *, and the algebraic system is solved as a truncated
// power series by fixed-point iteration.
PowerSeries dsv_series(const Grammar& g, int order);

// Line-oriented text format, one production per line:
//   S -> eps | A | a^2 t^1 U t^-1
// Terminals always carry an exponent (a^-3, t^1, ...); any other token names
// a variable. The first line's left-hand side is the start variable.
std::string dump_grammar(const Grammar& g);
Grammar parse_grammar(const std::string& text);

} // namespace bsgrowth
