#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ausglue/errors.hpp"
#include "ausglue/report.hpp"
#include "ausglue/tower.hpp"

namespace py = pybind11;
using namespace ausglue;

namespace {

// Everything below returns JSON text; the Python package decodes it.

FinCategory algebra_of(const std::string& kind, const std::string& arg, const std::string& orientation) {
  if (kind == "dynkin") return path_category(DynkinSpec::parse(arg, orientation));
  if (kind == "quiver") return category_from_presentation(load_quiver_spec(arg).presentation);
  if (kind == "auslander") return auslander_algebra(knit(path_category(DynkinSpec::parse(arg, orientation))));
  if (kind == "nakayama") {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw InvalidParams("nakayama source expects m,l");
    return category_from_presentation(nakayama_linear(std::stoi(arg.substr(0, comma)), std::stoi(arg.substr(comma + 1))));
  }
  throw InvalidParams("unknown source kind " + kind);
}

GlueInput higher_input(const FinCategory& a, int n, int k) {
  GlueInput in;
  in.algebra = a;
  in.cluster = cluster_tilting_from_tau_n(a, n);
  in.labels = cluster_labels(a, in.cluster);
  in.n = n;
  in.k = k;
  return in;
}

std::string with_field(const std::string& field, const std::function<std::string()>& body) {
  FieldGuard guard(field.empty() ? field_from_env(Field::prime()) : Field::parse(field));
  return body();
}

}  // namespace

PYBIND11_MODULE(_ausglue, m) {
  m.doc() = "Glued higher Auslander algebras";
  py::register_exception<Error>(m, "AusglueError");

  m.def("ar_quiver", [](const std::string& dynkin, const std::string& orientation, const std::string& field) {
    return with_field(field, [&] { return ar_json(knit(path_category(DynkinSpec::parse(dynkin, orientation)))); });
  }, py::arg("dynkin"), py::arg("orientation") = "linear", py::arg("field") = "");

  m.def("ar_dot", [](const std::string& dynkin, const std::string& orientation) {
    return ar_dot(knit(path_category(DynkinSpec::parse(dynkin, orientation))));
  }, py::arg("dynkin"), py::arg("orientation") = "linear");

  m.def("glued_quiver", [](const std::string& kind, const std::string& arg, const std::string& orientation, int n, int k,
                           const std::string& field) {
    return with_field(field, [&] {
      FinCategory a = algebra_of(kind, arg, orientation);
      return glued_json(n == 1 ? build_sk(a, k) : build_mk(higher_input(a, n, k)));
    });
  }, py::arg("kind"), py::arg("arg"), py::arg("orientation") = "linear", py::arg("n") = 1, py::arg("k") = 1,
     py::arg("field") = "");

  m.def("verify", [](const std::string& kind, const std::string& arg, const std::string& orientation, int n, int k,
                     const std::string& field) {
    return with_field(field, [&] {
      if (kind == "dynkin" && n == 1) return report_json(verify_theorem_dynkin(DynkinSpec::parse(arg, orientation), k));
      FinCategory a = algebra_of(kind, arg, orientation);
      if (n == 1) return report_json(verify_theorem_hereditary(a, k, arg));
      return report_json(verify_theorem_higher(higher_input(a, n, k), arg));
    });
  }, py::arg("kind"), py::arg("arg"), py::arg("orientation") = "linear", py::arg("n") = 1, py::arg("k") = 1,
     py::arg("field") = "");

  m.def("angles", [](const std::string& kind, const std::string& arg, const std::string& orientation, int n,
                     const std::string& field) {
    return with_field(field, [&] {
      if (n < 2) throw InvalidParams("angles need n >= 2");
      GlueInput in = higher_input(algebra_of(kind, arg, orientation), n, 1);
      auto ct = is_cluster_tilting(in.cluster, n, in.algebra);
      if (!ct.ok) throw NotClusterTilting(ct.witness);
      return angles_json(connecting_angles(in));
    });
  }, py::arg("kind"), py::arg("arg"), py::arg("orientation") = "linear", py::arg("n") = 2, py::arg("field") = "");
}
