#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pslens/cli.hpp"
#include "pslens/io.hpp"

namespace py = pybind11;
using namespace pslens;

namespace pybind11::detail {

// Python int <-> cpp_int through the decimal representation.
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    value = Integer(text.cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using Pair = std::pair<Integer, Integer>;

Pair rational_pair(const Rational& r) { return {r.numerator(), r.denominator()}; }

LensSpace lens(const Pair& pq) { return {pq.first, pq.second}; }
Pair pair_of(const LensSpace& l) { return {l.p, l.q}; }

}  // namespace

PYBIND11_MODULE(_pslens, m) {
  m.doc() = "Exact lens-space surgery calculus";

  // Translators are tried newest first, so the base class goes first.
  const auto& domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());
  py::register_exception<DegenerateEvaluation>(m, "DegenerateEvaluation", domain.ptr());

  m.def("cf_eval", [](const std::vector<Integer>& terms) { return rational_pair(cf_eval(terms)); }, py::arg("terms"),
        "(numerator, denominator) of [a1,...,ak]; the empty fraction is (1, 0).");
  m.def("cf_expand", [](const Integer& p, const Integer& q) { return cf_expand(p, q).terms; }, py::arg("p"),
        py::arg("q"));
  m.def("quadratic_solutions", &quadratic_solutions, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"));
  m.def("mod_inverse", &mod_inverse, py::arg("a"), py::arg("p"));

  m.def("torus_alexander", [](const Integer& a, const Integer& b) { return torus_alexander(a, b).to_string(); },
        py::arg("a"), py::arg("b"));
  m.def("correction_lift",
        [](const std::string& base, const Integer& p) { return correction_lift(LaurentPoly::parse(base), p).to_string(); },
        py::arg("base"), py::arg("p"));
  m.def("cyclic_reduce",
        [](const std::string& poly, const Integer& p) { return cyclic_reduce(LaurentPoly::parse(poly), p).coefficients(); },
        py::arg("poly"), py::arg("p"));
  m.def("genus", [](const std::string& poly) { return genus_from_alexander(LaurentPoly::parse(poly)); },
        py::arg("poly"));
  m.def(
      "lspace_form_check",
      [](const std::string& poly) {
        const LSpaceForm f = lspace_form_check(LaurentPoly::parse(poly));
        return py::make_tuple(f.ok, f.exponents, f.diagnostic);
      },
      py::arg("poly"));
  m.def("poly_terms", [](const std::string& poly) { return LaurentPoly::parse(poly).terms(); }, py::arg("poly"),
        "Exponent -> coefficient map of a polynomial in text form.");

  m.def(
      "normalize",
      [](const Pair& pq) {
        const NormalizedLens n = normalize(lens(pq));
        return py::make_tuple(pair_of(n.canonical), n.mirror_flag);
      },
      py::arg("lens"));
  m.def("equivalent_oriented", [](const Pair& a, const Pair& b) { return equivalent_oriented(lens(a), lens(b)); });
  m.def("equivalent_unoriented", [](const Pair& a, const Pair& b) { return equivalent_unoriented(lens(a), lens(b)); });
  m.def(
      "sum_equivalent",
      [](const std::string& a, const std::string& b, bool oriented) {
        return sum_equivalent(LensSum::parse(a), LensSum::parse(b),
                              oriented ? Orientation::Oriented : Orientation::Unoriented);
      },
      py::arg("a"), py::arg("b"), py::arg("oriented") = false);
  m.def("berge_vii_classes", &berge_vii_classes, py::arg("p"));
  m.def("berge_viii_classes", &berge_viii_classes, py::arg("p"));
  m.def(
      "hsphere_surgery_classes",
      [](const Integer& p, const Integer& q) {
        const HsphereClasses c = hsphere_surgery_classes(p, q);
        return py::make_tuple(c.plus, c.minus);
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "hedden_classes",
      [](const Integer& p, const Integer& q) {
        const HeddenClasses c = hedden_classes(p, q);
        return py::make_tuple(c.left.k, c.right.k);
      },
      py::arg("p"), py::arg("q"));

  m.def("tangle_sum_double_cover", [](const Integer& x, const Integer& y) { return describe(tangle_sum_double_cover(x, y)); });
  m.def("pretzel_double_cover",
        [](const Integer& a, const Integer& b, const Integer& c) { return describe(pretzel_double_cover({a, b, c})); });
  m.def("pretzel_is_two_bridge",
        [](const Integer& a, const Integer& b, const Integer& c) { return pretzel_is_two_bridge({a, b, c}); });
  m.def("tunnel_verdict", [](const Integer& n) { return tunnel_verdict(n).to_string(); }, py::arg("n"));

  m.def("slope_distance", [](const Pair& a, const Pair& b) {
    return slope_distance(Slope(a.first, a.second), Slope(b.first, b.second));
  });
  m.def("involution_image", [](const Pair& s) {
    const Slope image = involution_image(Slope(s.first, s.second));
    return Pair{image.p(), image.q()};
  });
  m.def("torus_knot_integral_surgery", [](const Integer& a, const Integer& b, const Integer& m) {
    return describe(torus_knot_integral_surgery(a, b, m));
  });

  m.def("family_params", [](const Integer& n) {
    const FamilyParams fp = family_params(n);
    return Pair{fp.p, fp.q};
  });
  m.def("family_report_json", [](const Integer& n) { return io::to_json(family_report(n)).dump(); }, py::arg("n"));
  m.def(
      "census_json",
      [](const Integer& n_min, const Integer& n_max, unsigned threads) {
        std::vector<std::string> lines;
        {
          py::gil_scoped_release release;
          for (const FamilyReport& r : census_scan(n_min, n_max, threads)) lines.push_back(io::to_json(r).dump());
        }
        return lines;
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("threads") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit status, stdout, stderr).");
}
