#include "bsgrowth/grammar.hpp"
#include "bsgrowth/languages.hpp"
#include "bsgrowth/oracle.hpp"
#include "bsgrowth/roots.hpp"
#include "bsgrowth/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bsgrowth;

namespace {

// big integers cross the boundary as decimal strings -> python int
py::object to_py_int(const BigInt& v) {
    return py::int_(py::str(v.str()));
}

py::object to_py_fraction(const Rational& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(numerator(v)), to_py_int(denominator(v)));
}

GroupElement element_from(const Context& ctx, py::object num, unsigned exp, py::object m) {
    const BigInt n(py::str(num).cast<std::string>());
    const BigInt mm(py::str(m).cast<std::string>());
    return {normalize(ctx, n, exp), mm};
}

Family family_from(const Context& ctx, const std::string& name) {
    if (name == "E") return element_family(ctx);
    if (name == "C") return conjugacy_family(ctx);
    if (name == "A+" || name == "A_plus") return Family::A_plus;
    if (name == "A-" || name == "A_minus") return Family::A_minus;
    throw std::invalid_argument("family must be one of E, C, A+, A-");
}

} // namespace

PYBIND11_MODULE(_bsgrowth, m) {
    m.doc() = "Exact conjugacy growth of the soluble Baumslag-Solitar groups BS(1,k)";

    py::class_<GroupElement>(m, "Element")
        .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; })
        .def("__repr__", [](const GroupElement& g) { return "Element" + to_string(g); })
        .def_property_readonly("numerator", [](const GroupElement& g) { return to_py_int(g.x.num); })
        .def_property_readonly("denom_exponent", [](const GroupElement& g) { return g.x.exp; })
        .def_property_readonly("t_exponent", [](const GroupElement& g) { return to_py_int(g.m); });

    py::class_<Context>(m, "BS")
        .def(py::init<int>(), py::arg("k"))
        .def_property_readonly("k", &Context::k)
        .def("element",
             [](const Context& ctx, py::object num, unsigned exp, py::object m) {
                 return element_from(ctx, num, exp, m);
             },
             py::arg("numerator"), py::arg("denom_exponent") = 0,
             py::arg("t_exponent") = py::int_(0))
        .def("eval_word",
             [](const Context& ctx, const std::string& w) { return eval_word(ctx, parse_word(w)); })
        .def("multiply", &multiply)
        .def("invert", &invert)
        .def("conjugate", &conjugate)
        .def("canonical_key",
             [](const Context& ctx, const GroupElement& g) {
                 ConjKey key = canonical_key(ctx, g);
                 return py::make_tuple(to_py_int(key.m), to_py_int(key.datum));
             })
        .def("are_conjugate",
             [](const Context& ctx, const GroupElement& g, const GroupElement& h) {
                 return are_conjugate(ctx, g, h);
             })
        .def("sphere_sizes",
             [](const Context& ctx, int radius) { return bfs_ball(ctx, radius).sphere_sizes; },
             py::arg("radius"))
        .def("conjugacy_growth",
             [](const Context& ctx, int radius) { return conjugacy_growth_strict(ctx, radius); },
             py::arg("radius"))
        .def("count_by_length",
             [](const Context& ctx, const std::string& family, int n) {
                 return count_by_length(ctx, family_from(ctx, family), n);
             },
             py::arg("family"), py::arg("n"))
        .def("members_of_length",
             [](const Context& ctx, const std::string& family, int n) {
                 std::vector<std::string> out;
                 for (const Word& w : members_of_length(ctx, family_from(ctx, family), n))
                     out.push_back(to_string(w));
                 return out;
             },
             py::arg("family"), py::arg("n"))
        .def("is_member",
             [](const Context& ctx, const std::string& family, const std::string& w) {
                 return is_member(ctx, family_from(ctx, family), parse_word(w));
             },
             py::arg("family"), py::arg("word"))
        .def("rewrite_to_representative", [](const Context& ctx, const std::string& w) {
            return to_string(rewrite_to_representative(ctx, parse_word(w)));
        });

    m.def("full_conjugacy_series",
          [](int k, int order) {
              std::vector<py::object> out;
              for (const BigInt& c : full_conjugacy_series(k, order).integer_coefficients())
                  out.push_back(to_py_int(c));
              return out;
          },
          py::arg("k"), py::arg("order"));
    m.def("abelian_series_coefficients",
          [](int k, int order) {
              std::vector<py::object> out;
              for (const BigInt& c : expand(abelian_series(k), order).integer_coefficients())
                  out.push_back(to_py_int(c));
              return out;
          },
          py::arg("k"), py::arg("order"));
    m.def("abelian_series_string", [](int k) { return abelian_series(k).to_string(); },
          py::arg("k"));
    m.def("dsv_series_coefficients",
          [](int k, int order) {
              std::vector<py::object> out;
              for (const BigInt& c :
                   dsv_series(build_conjugacy_grammar(k), order).integer_coefficients())
                  out.push_back(to_py_int(c));
              return out;
          },
          py::arg("k"), py::arg("order"));
    m.def("grammar_text", [](int k) { return dump_grammar(build_conjugacy_grammar(k)); },
          py::arg("k"));
    m.def("grammar_check",
          [](int k, int max_n) {
              Context ctx(k);
              Grammar g = build_conjugacy_grammar(k);
              DerivationCount words = language_up_to(g, max_n);
              if (!words.unambiguous()) return false;
              for (int n = 0; n <= max_n; ++n) {
                  std::set<std::string> lhs, rhs;
                  for (const auto& [w, c] : words.by_length[static_cast<std::size_t>(n)])
                      lhs.insert(w);
                  for (const Word& w : members_of_length(ctx, conjugacy_family(ctx), n))
                      rhs.insert(to_string(w));
                  if (lhs != rhs) return false;
              }
              return true;
          },
          py::arg("k"), py::arg("max_n"));
    m.def("growth_rates",
          [](int k, const std::string& precision) {
              Rational width(1, 1000);
              if (auto slash = precision.find('/'); slash != std::string::npos)
                  width = Rational(BigInt(precision.substr(0, slash)),
                                   BigInt(precision.substr(slash + 1)));
              RateReport r = growth_rates(k, width);
              py::dict out;
              out["abelian_root"] =
                  py::make_tuple(to_py_fraction(r.abelian_root.lo), to_py_fraction(r.abelian_root.hi));
              out["conjugacy_root"] = py::make_tuple(to_py_fraction(r.conjugacy_root.lo),
                                                     to_py_fraction(r.conjugacy_root.hi));
              out["abelian_rate"] = py::make_tuple(to_py_fraction(r.abelian_rate_lo()),
                                                   to_py_fraction(r.abelian_rate_hi()));
              out["conjugacy_rate"] = py::make_tuple(to_py_fraction(r.conjugacy_rate_lo()),
                                                     to_py_fraction(r.conjugacy_rate_hi()));
              out["numerator_nonvanishing"] = r.numerator_nonvanishing;
              out["abelian_rate_in_range"] = r.abelian_rate_in_range;
              out["conjugacy_dominates"] = r.conjugacy_dominates;
              return out;
          },
          py::arg("k"), py::arg("precision") = "1/1000");

    py::register_exception<ResourceError>(m, "ResourceError");
    py::register_exception<CacheError>(m, "CacheError");
}
