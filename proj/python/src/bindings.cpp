#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wildsets/certificate_json.hpp"
#include "wildsets/cli.hpp"
#include "wildsets/constructions.hpp"
#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

namespace py = pybind11;
using namespace wildsets;

namespace {

struct PyCurve {
  CurvePtr X;

  PyCurve(unsigned q, const std::string& curve) : X(make_curve(FiniteField::make(q), curve)) {}

  std::vector<Place> places(const std::string& s) const {
    return s.empty() ? std::vector<Place>{} : parse_place_list(*X, s);
  }
};

std::vector<std::string> names(const std::vector<Place>& S) {
  std::vector<std::string> v;
  for (const auto& p : S) v.push_back(format_place(p));
  return v;
}

py::dict ranks(const PyCurve& c, const std::string& places) {
  const auto S = c.places(places);
  check_place_set(*c.X, S);
  const auto pic = check_pic_rank_formula(*c.X, S);
  const auto lemma = check_lin_dep_lemma(c.X, S);
  py::dict d;
  d["rk_sing"] = sing_space(c.X, S).rank();
  d["rk_delta"] = delta_space(c.X, S).rank();
  d["rk_G"] = g_rank(*c.X, S).rank;
  d["rk_pic"] = pic.direct;
  d["rk_pic_formula"] = pic.formula;
  d["S_independent_mod_2"] = lemma.independent;
  d["independence_criterion_agrees"] = lemma.agree;
  return d;
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wild sets of self-equivalences of global function fields";

  auto base = py::register_exception<Error>(m, "WildsetsError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<NotPrincipal>(m, "NotPrincipal", pre.ptr());
  py::register_exception<Refusal>(m, "Refusal", base.ptr());
  py::register_exception<SearchExhausted>(m, "SearchExhausted", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Certificate>(m, "Certificate")
      .def_static("from_json", &read_certificate)
      .def("to_json", &write_certificate)
      .def_property_readonly("kind", [](const Certificate& c) { return c.kind == CertKind::Pre ? "pre" : "small"; })
      .def_property_readonly("S", [](const Certificate& c) { return names(c.S); })
      .def_property_readonly("T", [](const Certificate& c) { return names(c.T); })
      .def("verify",
           [](const Certificate& c) {
             const auto R = verify(c);
             return py::make_tuple(R.ok(), R.to_text());
           })
      .def("wild_points", [](const Certificate& c) { return names(wild_points(c)); });

  py::class_<PyCurve>(m, "Curve")
      .def(py::init<unsigned, const std::string&>(), py::arg("q"), py::arg("curve") = "")
      .def_property_readonly("q", [](const PyCurve& c) { return c.X->field()->q(); })
      .def_property_readonly("is_elliptic", [](const PyCurve& c) { return c.X->is_elliptic(); })
      .def("places", [](const PyCurve& c, unsigned d) {
        std::vector<std::string> v;
        c.X->for_each_place(d, [&](const Place& p) {
          v.push_back(format_place(p));
          return true;
        });
        return v;
      })
      .def("hilbert",
           [](const PyCurve& c, const std::string& a, const std::string& b, const std::string& place) {
             return hilbert_symbol(*c.X, parse_element(*c.X, a), parse_element(*c.X, b), parse_place(*c.X, place));
           })
      .def("reciprocity",
           [](const PyCurve& c, const std::string& a, const std::string& b) {
             return reciprocity_product(*c.X, parse_element(*c.X, a), parse_element(*c.X, b)).product;
           })
      .def("ranks", &ranks)
      .def("smile",
           [](const PyCurve& c, const std::string& p1, const std::string& p2) {
             return smile(*c.X, parse_place(*c.X, p1), parse_place(*c.X, p2));
           })
      .def("construct_rank0",
           [](const PyCurve& c, const std::string& S, const std::string& avoid) {
             return construct_rank0(c.X, c.places(S), c.places(avoid));
           },
           py::arg("places"), py::arg("avoid") = "")
      .def("construct_rank1",
           [](const PyCurve& c, const std::string& S, const std::string& avoid) {
             return construct_rank1(c.X, c.places(S), c.places(avoid));
           },
           py::arg("places"), py::arg("avoid") = "")
      .def("construct_general",
           [](const PyCurve& c, const std::string& P, const std::string& Q, const std::string& avoid) {
             return construct_general(c.X, c.places(P), c.places(Q), c.places(avoid));
           },
           py::arg("P"), py::arg("Q"), py::arg("avoid") = "");

  m.def("run_cli", &run, "Run a command-line invocation; returns (exit code, stdout, stderr)");
}
