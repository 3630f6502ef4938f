#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"
#include "klrpoly/involution.hpp"
#include "klrpoly/paths.hpp"
#include "klrpoly/perm.hpp"
#include "klrpoly/poly.hpp"
#include "klrpoly/rpoly.hpp"
#include "klrpoly/serialize.hpp"

namespace py = pybind11;
using namespace klrpoly;

namespace {

py::object to_python(const nlohmann::json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Direction parse_direction(const std::string &s) {
  if (s == "increasing" || s == "inc") return Direction::Increasing;
  if (s == "decreasing" || s == "dec") return Direction::Decreasing;
  throw ParseError("direction must be 'increasing' or 'decreasing'");
}

// Functions taking an optional table fall back to a private one.
template <class F> auto with_table(RTable *table, F &&f) {
  if (table) return f(*table);
  RTable local;
  return f(local);
}

} // namespace

PYBIND11_MODULE(_klrpoly, m) {
  m.doc() = "Kazhdan-Lusztig R-polynomials on symmetric groups";

  py::register_exception<InvariantViolation>(m, "InvariantViolation");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init(&parse_permutation), py::arg("text"))
      .def(py::init<std::vector<int>>(), py::arg("entries"))
      .def_static("identity", &Permutation::identity)
      .def_static("longest", &Permutation::longest)
      .def_property_readonly("entries",
                             [](const Permutation &w) { return std::vector<int>(w.entries().begin(), w.entries().end()); })
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation &w, int pos) {
        if (pos < 1 || pos > w.size()) throw py::index_error("position out of range");
        return w(pos);
      })
      .def("length", [](const Permutation &w) { return length(w); })
      .def("right_descents", [](const Permutation &w) { return right_descents(w); })
      .def("__mul__", [](const Permutation &w, std::pair<int, int> t) {
        return multiply_right(w, Transposition(t.first, t.second));
      })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Permutation &w) { return std::hash<Permutation>{}(w); })
      .def("__str__", &format_permutation)
      .def("__repr__", [](const Permutation &w) { return "Permutation('" + format_permutation(w) + "')"; });
  py::implicitly_convertible<std::string, Permutation>();

  py::class_<IntPolynomial>(m, "Polynomial")
      .def(py::init<std::vector<Coefficient>>(), py::arg("coefficients"))
      .def_property_readonly("coefficients",
                             [](const IntPolynomial &p) {
                               return std::vector<Coefficient>(p.coefficients().begin(), p.coefficients().end());
                             })
      .def_property_readonly("degree", &IntPolynomial::degree)
      .def("is_zero", &IntPolynomial::is_zero)
      .def("evaluate", &IntPolynomial::evaluate)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const IntPolynomial &p) { return to_string(p); })
      .def("__repr__", [](const IntPolynomial &p) { return "Polynomial('" + to_string(p) + "')"; });

  py::class_<RTable>(m, "RTable")
      .def(py::init<>())
      .def("__len__", [](const RTable &t) { return t.size(RTable::Kind::RTilde) + t.size(RTable::Kind::R); })
      .def_property_readonly("hits", &RTable::hits)
      .def_property_readonly("misses", &RTable::misses);

  py::class_<BruhatPath>(m, "BruhatPath")
      .def_property_readonly("start", &BruhatPath::start)
      .def_property_readonly("labels",
                             [](const BruhatPath &p) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto &t : p.labels()) out.emplace_back(t.i(), t.j());
                               return out;
                             })
      .def_property_readonly("nodes", &BruhatPath::nodes)
      .def_property_readonly("end", &BruhatPath::end)
      .def("__len__", &BruhatPath::length)
      .def("__str__", [](const BruhatPath &p) { return to_string(p); });

  py::class_<VPath>(m, "VPath")
      .def_property_readonly("leg1", &VPath::leg1)
      .def_property_readonly("leg2", &VPath::leg2)
      .def_property_readonly("bottom", &VPath::bottom)
      .def_property_readonly("sign", &VPath::sign)
      .def_property_readonly("total_length", &VPath::total_length)
      .def(py::self == py::self)
      .def("__str__", [](const VPath &p) { return to_string(p); });

  m.def("length", [](const Permutation &w) { return length(w); });
  m.def("bruhat_leq", &bruhat_leq);
  m.def("interval", &interval);
  m.def("interval_ending_with", &interval_ending_with);

  m.def("rtilde",
        [](const Permutation &u, const Permutation &v, RTable *table) {
          return with_table(table, [&](RTable &t) { return rtilde(u, v, t); });
        },
        py::arg("u"), py::arg("v"), py::arg("table") = nullptr);
  m.def("rpoly_r",
        [](const Permutation &u, const Permutation &v, RTable *table) {
          return with_table(table, [&](RTable &t) { return rpoly_r(u, v, t); });
        },
        py::arg("u"), py::arg("v"), py::arg("table") = nullptr);
  m.def("rpoly_from_rtilde",
        [](const Permutation &u, const Permutation &v, RTable *table) {
          return with_table(table, [&](RTable &t) { return rpoly_from_rtilde(u, v, t); });
        },
        py::arg("u"), py::arg("v"), py::arg("table") = nullptr);
  m.def("inversion_sum",
        [](const Permutation &u, const Permutation &v, RTable *table) {
          return with_table(table, [&](RTable &t) { return inversion_sum(u, v, t); });
        },
        py::arg("u"), py::arg("v"), py::arg("table") = nullptr);
  m.def("rtilde_by_paths",
        [](const Permutation &u, const Permutation &v, const std::string &dir) {
          return rtilde_by_paths(u, v, parse_direction(dir));
        },
        py::arg("u"), py::arg("v"), py::arg("direction") = "increasing");
  m.def("substitute_shift", &substitute_shift, py::arg("p"), py::arg("d"));

  m.def("monotone_paths",
        [](const Permutation &u, const Permutation &v, const std::string &dir) {
          return monotone_paths(u, v, parse_direction(dir));
        },
        py::arg("u"), py::arg("v"), py::arg("direction") = "increasing");
  m.def("vpaths", &vpaths);
  m.def("vpath_signed_sum", &vpath_signed_sum);
  m.def("reflect", &reflect);
  m.def("refined_reflect", [](const VPath &p, int k) {
    auto img = refined_reflect(p, k);
    return py::make_tuple(img.path, img.fixed);
  });

  m.def("interval_pairing", &interval_pairing);
  m.def("parity_census", [](const Permutation &u, const Permutation &v) {
    const auto c = parity_census(u, v);
    return py::make_tuple(c.even, c.odd);
  });
  m.def("classify_s_interval",
        [](const Permutation &u, const Permutation &v) { return to_python(to_json(classify_s_interval(u, v))); });
  m.def("canonical_fixed_point", &canonical_fixed_point);
  m.def("refinement_sum",
        [](const Permutation &u, const Permutation &v, int k, RTable *table) {
          auto rep = with_table(table, [&](RTable &t) { return refinement_sum(u, v, k, t); });
          py::dict d = to_python(to_json(rep));
          d["sum_text"] = to_string(rep.sum);
          d["predicted_text"] = to_string(rep.predicted);
          return d;
        },
        py::arg("u"), py::arg("v"), py::arg("k"), py::arg("table") = nullptr);

  m.def("bruhat_graph", [](int n, const std::string &format) -> py::object {
    const auto g = bruhat_graph(n);
    if (format == "dot") return py::str(to_dot(g));
    return to_python(to_json(g));
  }, py::arg("n"), py::arg("format") = "json");
}
