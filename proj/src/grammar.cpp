#include "bsgrowth/grammar.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace bsgrowth {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

// shortest derivable weighted length per variable (kInf when unproductive)
std::vector<long> min_lengths(const std::vector<std::vector<Grammar::Alternative>>& prods,
                              const std::vector<GrammarTerminal>& terms) {
    std::vector<long> len(prods.size(), kInf);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < prods.size(); ++v) {
            for (const auto& alt : prods[v]) {
                long total = 0;
                for (const auto& sym : alt) {
                    total += sym.is_terminal ? terms[static_cast<std::size_t>(sym.index)].weight
                                             : len[static_cast<std::size_t>(sym.index)];
                    if (total >= kInf) { total = kInf; break; }
                }
                if (total < len[v]) {
                    len[v] = total;
                    changed = true;
                }
            }
        }
    }
    return len;
}

} // namespace

Grammar::Grammar(std::vector<std::string> variables, std::vector<GrammarTerminal> terminals,
                 std::vector<std::vector<Alternative>> productions, int start)
    : variables_(std::move(variables)),
      terminals_(std::move(terminals)),
      productions_(std::move(productions)),
      start_(start) {
    require(variables_.size() == productions_.size(), "Grammar: one production row per variable");
    require(start_ >= 0 && start_ < static_cast<int>(variables_.size()), "Grammar: bad start");
    for (const auto& t : terminals_)
        require(t.weight == static_cast<int>(t.text.size()), "Grammar: terminal weight mismatch");

    const auto len = min_lengths(productions_, terminals_);
    for (std::size_t v = 0; v < variables_.size(); ++v)
        if (len[v] >= kInf)
            throw std::invalid_argument("Grammar: unproductive variable " + variables_[v]);

    // reachability from the start variable
    std::vector<char> reach(variables_.size(), 0);
    std::vector<int> stack{start_};
    reach[static_cast<std::size_t>(start_)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& alt : productions_[static_cast<std::size_t>(v)])
            for (const auto& sym : alt)
                if (!sym.is_terminal && !reach[static_cast<std::size_t>(sym.index)]) {
                    reach[static_cast<std::size_t>(sym.index)] = 1;
                    stack.push_back(sym.index);
                }
    }
    for (std::size_t v = 0; v < variables_.size(); ++v)
        if (!reach[v]) throw std::invalid_argument("Grammar: unreachable variable " + variables_[v]);

    // reject derivation cycles of zero total weight: edge v -> w when an
    // alternative of v contains w and everything else in it can vanish
    std::vector<std::vector<int>> zero_edges(variables_.size());
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        for (const auto& alt : productions_[v]) {
            long base = 0;
            for (const auto& sym : alt)
                base += sym.is_terminal ? terminals_[static_cast<std::size_t>(sym.index)].weight
                                        : len[static_cast<std::size_t>(sym.index)];
            for (const auto& sym : alt) {
                if (sym.is_terminal) continue;
                if (base - len[static_cast<std::size_t>(sym.index)] == 0)
                    zero_edges[v].push_back(sym.index);
            }
        }
    }
    std::vector<char> color(variables_.size(), 0);
    std::function<void(int)> dfs = [&](int v) {
        color[static_cast<std::size_t>(v)] = 1;
        for (int w : zero_edges[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(w)] == 1)
                throw std::invalid_argument("Grammar: zero-weight derivation cycle through " +
                                            variables_[static_cast<std::size_t>(w)]);
            if (color[static_cast<std::size_t>(w)] == 0) dfs(w);
        }
        color[static_cast<std::size_t>(v)] = 2;
    };
    for (std::size_t v = 0; v < variables_.size(); ++v)
        if (color[v] == 0) dfs(static_cast<int>(v));
}

// ------------------------------------------------------------ construction

namespace {

class GrammarBuilder {
public:
    int var(const std::string& name) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        vars_.push_back(name);
        prods_.emplace_back();
        return static_cast<int>(vars_.size()) - 1;
    }

    GrammarSymbol v(const std::string& name) { return {false, var(name)}; }

    GrammarSymbol term(long a_power) {
        std::string text;
        if (a_power > 0) text.assign(static_cast<std::size_t>(a_power), 'a');
        else text.assign(static_cast<std::size_t>(-a_power), 'A');
        return term_text(text);
    }

    GrammarSymbol t_up() { return term_text("t"); }
    GrammarSymbol t_down() { return term_text("T"); }

    GrammarSymbol term_text(const std::string& text) {
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].text == text) return {true, static_cast<int>(i)};
        terms_.push_back({text, static_cast<int>(text.size())});
        return {true, static_cast<int>(terms_.size()) - 1};
    }

    void rule(const std::string& name, std::vector<Grammar::Alternative> alts) {
        int i = var(name);
        auto& row = prods_[static_cast<std::size_t>(i)];
        for (auto& a : alts) row.push_back(std::move(a));
    }

    Grammar build(const std::string& start) {
        return Grammar(vars_, terms_, prods_, var(start));
    }

private:
    std::vector<std::string> vars_;
    std::vector<GrammarTerminal> terms_;
    std::vector<std::vector<Grammar::Alternative>> prods_;
};

} // namespace

Grammar build_conjugacy_grammar(int k) {
    require(k >= 2, "build_conjugacy_grammar: k must be >= 2");
    const long r = k % 2 ? (k - 1) / 2 : k / 2;
    GrammarBuilder b;

    if (k == 2) {
        b.var("S");
        b.rule("S", {{}, {b.v("A")}, {b.v("T")}});
        b.rule("A", {{b.term(-3)}, {b.term(-1)}, {b.term(1)}, {b.term(3)}});
        b.rule("T", {{b.term(1), b.t_up(), b.t_up(), b.v("Up"), b.t_down(), b.t_down()},
                     {b.term(-1), b.t_up(), b.t_up(), b.v("Um"), b.t_down(), b.t_down()},
                     {b.term(1), b.t_up(), b.term(2), b.t_down()},
                     {b.term(1), b.t_up(), b.term(3), b.t_down()},
                     {b.term(-1), b.t_up(), b.term(-2), b.t_down()},
                     {b.term(-1), b.t_up(), b.term(-3), b.t_down()}});
        b.rule("U", {{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")},
                     {b.term(-3)}, {b.term(-2)}, {b.term(2)}, {b.term(3)}});
        // straight after a^{+-1} t t the opposite-sign square is excluded
        // (a^{-+1} t t a^{+-2} t^-1 t^-1 collapses to a shorter representative)
        b.rule("Up", {{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")},
                      {b.term(-3)}, {b.term(2)}, {b.term(3)}});
        b.rule("Um", {{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")},
                      {b.term(-3)}, {b.term(-2)}, {b.term(3)}});
        return b.build("S");
    }

    if (k % 2 == 1) {
        b.var("S");
        std::vector<Grammar::Alternative> a_alts, b_alts, v_fin, w_fin;
        for (long j = -(r + 1); j <= r + 1; ++j)
            if (j != 0) a_alts.push_back({b.term(j)});
        for (long j = -(r - 1); j <= r - 1; ++j)
            if (j != 0) b_alts.push_back({b.term(j)});
        for (long j = -(r + 1); j <= r + 1; ++j)
            if (j != 0 && j != -1) v_fin.push_back({b.term(j)});
        for (long j = -(r + 1); j <= r + 1; ++j)
            if (j != 0 && j != 1) w_fin.push_back({b.term(j)});

        b.rule("S", {{}, {b.v("A")}, {b.v("T")}});
        b.rule("A", std::move(a_alts));
        std::vector<Grammar::Alternative> t_alts;
        if (!b_alts.empty()) {
            b.rule("B", std::move(b_alts));
            t_alts.push_back({b.v("B"), b.t_up(), b.v("U"), b.t_down()});
        }
        t_alts.push_back({b.term(r), b.t_up(), b.v("V"), b.t_down()});
        t_alts.push_back({b.term(-r), b.t_up(), b.v("W"), b.t_down()});
        b.rule("T", std::move(t_alts));
        b.rule("U", {{b.v("A")}, {b.t_up(), b.v("U"), b.t_down()}, {b.v("T")}});
        std::vector<Grammar::Alternative> v_alts{{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")}};
        v_alts.insert(v_alts.end(), v_fin.begin(), v_fin.end());
        b.rule("V", std::move(v_alts));
        std::vector<Grammar::Alternative> w_alts{{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")}};
        w_alts.insert(w_alts.end(), w_fin.begin(), w_fin.end());
        b.rule("W", std::move(w_alts));
        return b.build("S");
    }

    // even k >= 4
    b.var("S");
    std::vector<Grammar::Alternative> a_alts, b_alts, x_fin, y_fin;
    for (long j = -(r + 1); j <= r + 1; ++j)
        if (j != 0) a_alts.push_back({b.term(j)});
    for (long j = -(r - 2); j <= r - 2; ++j)
        if (j != 0) b_alts.push_back({b.term(j)});
    for (long j = -(r + 1); j <= r + 1; ++j)
        if (j != 0 && j != -1) x_fin.push_back({b.term(j)});
    for (long j = -(r + 1); j <= r + 1; ++j)
        if (j != 0 && j != 1) y_fin.push_back({b.term(j)});

    b.rule("S", {{}, {b.v("A")}, {b.v("T")}});
    b.rule("A", std::move(a_alts));
    std::vector<Grammar::Alternative> t_alts;
    if (!b_alts.empty()) {
        b.rule("B", std::move(b_alts));
        t_alts.push_back({b.v("B"), b.t_up(), b.v("U"), b.t_down()});
    }
    t_alts.push_back({b.term(r), b.t_up(), b.v("V"), b.t_down()});
    t_alts.push_back({b.term(-r), b.t_up(), b.v("W"), b.t_down()});
    t_alts.push_back({b.term(r - 1), b.t_up(), b.v("X"), b.t_down()});
    t_alts.push_back({b.term(-(r - 1)), b.t_up(), b.v("Y"), b.t_down()});
    b.rule("T", std::move(t_alts));
    b.rule("U", {{b.v("A")}, {b.t_up(), b.v("U"), b.t_down()}, {b.v("T")}});

    // V continues after a^{+r}: final digits stay positive; inner digit j
    // needs X when the forbidden-ending rules reach past it
    std::vector<Grammar::Alternative> v_alts, w_alts;
    for (long j = 1; j <= r + 1; ++j) v_alts.push_back({b.term(j)});
    for (long j = 0; j <= r - 3; ++j) {
        Grammar::Alternative alt;
        if (j > 0) alt.push_back(b.term(j));
        alt.push_back(b.t_up());
        alt.push_back(b.v("U"));
        alt.push_back(b.t_down());
        v_alts.push_back(std::move(alt));
    }
    for (long j = r - 2; j <= r - 1; ++j) {
        Grammar::Alternative alt;
        if (j > 0) alt.push_back(b.term(j));
        alt.push_back(b.t_up());
        alt.push_back(b.v("X"));
        alt.push_back(b.t_down());
        v_alts.push_back(std::move(alt));
    }
    for (long j = 1; j <= r + 1; ++j) w_alts.push_back({b.term(-j)});
    for (long j = 0; j <= r - 3; ++j) {
        Grammar::Alternative alt;
        if (j > 0) alt.push_back(b.term(-j));
        alt.push_back(b.t_up());
        alt.push_back(b.v("U"));
        alt.push_back(b.t_down());
        w_alts.push_back(std::move(alt));
    }
    for (long j = r - 2; j <= r - 1; ++j) {
        Grammar::Alternative alt;
        if (j > 0) alt.push_back(b.term(-j));
        alt.push_back(b.t_up());
        alt.push_back(b.v("Y"));
        alt.push_back(b.t_down());
        w_alts.push_back(std::move(alt));
    }
    b.rule("V", std::move(v_alts));
    b.rule("W", std::move(w_alts));
    std::vector<Grammar::Alternative> x_alts{{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")}};
    x_alts.insert(x_alts.end(), x_fin.begin(), x_fin.end());
    b.rule("X", std::move(x_alts));
    std::vector<Grammar::Alternative> y_alts{{b.t_up(), b.v("U"), b.t_down()}, {b.v("T")}};
    y_alts.insert(y_alts.end(), y_fin.begin(), y_fin.end());
    b.rule("Y", std::move(y_alts));
    return b.build("S");
}

// ------------------------------------------------------------- enumeration

bool DerivationCount::unambiguous() const {
    for (const auto& words : by_length)
        for (const auto& [w, count] : words)
            if (count > 1) return false;
    return true;
}

std::uint64_t DerivationCount::words_of_length(int n) const {
    if (n < 0 || n >= static_cast<int>(by_length.size())) return 0;
    return by_length[static_cast<std::size_t>(n)].size();
}

DerivationCount language_up_to(const Grammar& g, int n) {
    require(n >= 0, "language_up_to: n must be >= 0");
    const auto& prods = g.productions();
    const auto& terms = g.terminals();
    const std::size_t nv = g.variables().size();

    // per variable: word -> number of leftmost derivations, weight <= n
    using WordMap = std::map<std::string, std::uint64_t>;
    std::vector<WordMap> table(nv);

    const int max_rounds = (n + 2) * (static_cast<int>(nv) + 2);
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < max_rounds) {
        changed = false;
        for (std::size_t v = 0; v < nv; ++v) {
            WordMap fresh;
            for (const auto& alt : prods[v]) {
                // convolve the symbols of the alternative left to right
                WordMap partial{{"", 1}};
                for (const auto& sym : alt) {
                    WordMap next;
                    if (sym.is_terminal) {
                        const auto& t = terms[static_cast<std::size_t>(sym.index)];
                        for (const auto& [w, c] : partial) {
                            if (static_cast<int>(w.size()) + t.weight > n) continue;
                            next[w + t.text] += c;
                        }
                    } else {
                        const auto& sub = table[static_cast<std::size_t>(sym.index)];
                        for (const auto& [w, c] : partial) {
                            for (const auto& [u, cu] : sub) {
                                if (w.size() + u.size() > static_cast<std::size_t>(n)) continue;
                                next[w + u] += c * cu;
                            }
                        }
                    }
                    partial = std::move(next);
                    if (partial.empty()) break;
                }
                for (const auto& [w, c] : partial) fresh[w] += c;
            }
            if (fresh != table[v]) {
                table[v] = std::move(fresh);
                changed = true;
            }
        }
    }
    require(!changed, "language_up_to: enumeration failed to stabilize");

    DerivationCount out;
    out.by_length.resize(static_cast<std::size_t>(n) + 1);
    for (const auto& [w, c] : table[static_cast<std::size_t>(g.start())])
        out.by_length[w.size()][w] = c;
    return out;
}

PowerSeries dsv_series(const Grammar& g, int order) {
    require(order >= 0, "dsv_series: order must be >= 0");
    const auto& prods = g.productions();
    const auto& terms = g.terminals();
    const std::size_t nv = g.variables().size();

    std::vector<PowerSeries> table(nv, PowerSeries(order));
    const int max_rounds = order + static_cast<int>(nv) + 3;
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < max_rounds) {
        changed = false;
        for (std::size_t v = 0; v < nv; ++v) {
            PowerSeries fresh(order);
            for (const auto& alt : prods[v]) {
                PowerSeries partial(order);
                partial[0] = 1;
                for (const auto& sym : alt) {
                    if (sym.is_terminal) {
                        const int w = terms[static_cast<std::size_t>(sym.index)].weight;
                        PowerSeries shifted(order);
                        for (int i = 0; i + w <= order; ++i) shifted[i + w] = partial[i];
                        partial = std::move(shifted);
                    } else {
                        partial = partial * table[static_cast<std::size_t>(sym.index)];
                    }
                }
                fresh += partial;
            }
            if (!(fresh == table[v])) {
                table[v] = std::move(fresh);
                changed = true;
            }
        }
    }
    require(!changed, "dsv_series: fixed point failed to stabilize");
    return table[static_cast<std::size_t>(g.start())];
}

// ---------------------------------------------------------------- text IO

namespace {

std::string terminal_token(const GrammarTerminal& t) {
    long power = 0;
    char kind = 0;
    for (char c : t.text) {
        char k = (c == 'a' || c == 'A') ? 'a' : 't';
        if (kind == 0) kind = k;
        power += (c == 'a' || c == 't') ? 1 : -1;
    }
    std::ostringstream os;
    os << kind << '^' << power;
    return os.str();
}

} // namespace

std::string dump_grammar(const Grammar& g) {
    std::ostringstream os;
    // start variable first, then the rest in declaration order
    std::vector<int> order{g.start()};
    for (int v = 0; v < static_cast<int>(g.variables().size()); ++v)
        if (v != g.start()) order.push_back(v);
    for (int v : order) {
        os << g.variables()[static_cast<std::size_t>(v)] << " ->";
        const auto& alts = g.productions()[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < alts.size(); ++i) {
            os << (i == 0 ? " " : " | ");
            if (alts[i].empty()) {
                os << "eps";
                continue;
            }
            for (std::size_t s = 0; s < alts[i].size(); ++s) {
                if (s) os << ' ';
                const auto& sym = alts[i][s];
                if (sym.is_terminal)
                    os << terminal_token(g.terminals()[static_cast<std::size_t>(sym.index)]);
                else
                    os << g.variables()[static_cast<std::size_t>(sym.index)];
            }
        }
        os << "\n";
    }
    return os.str();
}

Grammar parse_grammar(const std::string& text) {
    struct Line {
        std::string lhs;
        std::vector<std::vector<std::string>> alts;
    };
    std::vector<Line> lines;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        if (raw.empty() || raw[0] == '#') continue;
        std::istringstream ls(raw);
        Line line;
        std::string tok;
        ls >> line.lhs >> tok;
        if (!ls || tok != "->") throw std::invalid_argument("parse_grammar: expected 'Var ->'");
        std::vector<std::string> current;
        while (ls >> tok) {
            if (tok == "|") {
                line.alts.push_back(std::move(current));
                current = {};
            } else {
                current.push_back(tok);
            }
        }
        line.alts.push_back(std::move(current));
        lines.push_back(std::move(line));
    }
    require(!lines.empty(), "parse_grammar: empty grammar");

    std::vector<std::string> vars;
    auto var_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        vars.push_back(name);
        return static_cast<int>(vars.size()) - 1;
    };
    for (const auto& line : lines) var_index(line.lhs);

    auto is_terminal_token = [](const std::string& tok) {
        return tok.size() >= 3 && (tok[0] == 'a' || tok[0] == 't') && tok[1] == '^';
    };

    std::vector<GrammarTerminal> terms;
    auto term_index = [&](const std::string& tok) {
        long power = std::stol(tok.substr(2));
        require(power != 0, "parse_grammar: zero-power terminal");
        char up = tok[0] == 'a' ? 'a' : 't';
        char down = tok[0] == 'a' ? 'A' : 'T';
        std::string rendered(static_cast<std::size_t>(std::labs(power)), power > 0 ? up : down);
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (terms[i].text == rendered) return static_cast<int>(i);
        terms.push_back({rendered, static_cast<int>(rendered.size())});
        return static_cast<int>(terms.size()) - 1;
    };

    std::vector<std::vector<Grammar::Alternative>> prods(vars.size());
    for (const auto& line : lines) {
        auto& row = prods[static_cast<std::size_t>(var_index(line.lhs))];
        for (const auto& alt_tokens : line.alts) {
            Grammar::Alternative alt;
            for (const auto& tok : alt_tokens) {
                if (tok == "eps") continue;
                if (is_terminal_token(tok))
                    alt.push_back({true, term_index(tok)});
                else
                    alt.push_back({false, var_index(tok)});
            }
            row.push_back(std::move(alt));
        }
    }
    return Grammar(std::move(vars), std::move(terms), std::move(prods), 0);
}

} // namespace bsgrowth
