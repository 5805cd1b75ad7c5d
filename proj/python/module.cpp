#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpi/builtins.hpp"
#include "gpi/cocharacter.hpp"
#include "gpi/parser.hpp"
#include "gpi/tideal.hpp"

namespace py = pybind11;
using namespace gpi;

namespace {

py::int_ pyint(const Int& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

// One loaded algebra definition with its materialized action.
struct PySession {
  AlgebraFile file;
  ActingAlgebra action;
  Limits limits;

  static PySession from_builtin(const std::string& name) {
    Builtin b = builtin(name);
    return {std::move(b.file), std::move(b.action), {}};
  }

  static PySession from_file(const std::string& path) {
    PySession s{load_algebra_file(path), {}, {}};
    s.action = make_action(s.file);
    return s;
  }

  const GradedAlgebra& A() const { return file.algebra; }

  py::int_ codim(int n) const { return pyint(codim_total(A(), action, n, limits)); }

  std::vector<py::int_> codim_series_py(int n_max) const {
    std::vector<py::int_> out;
    for (const auto& e : gpi::codim_series(A(), action, n_max, limits)) {
      if (!e.c) throw std::runtime_error(e.error);
      out.push_back(pyint(*e.c));
    }
    return out;
  }

  std::uint64_t codim_md(const std::vector<int>& counts) const {
    MultiDegree md{counts};
    return codim_multidegree(A(), action, md, limits).rank;
  }

  GenPolynomial parse(const std::string& text) const { return parse_polynomial(action, text); }

  bool identity(const std::string& text) const { return is_identity(A(), action, parse(text)); }

  std::uint64_t mult(const std::vector<std::vector<int>>& shapes) const {
    std::vector<Partition> ps(shapes.begin(), shapes.end());
    return multiplicity(ps, A(), action, limits);
  }

  py::list cochar(int n) const {
    py::list out;
    for (const auto& e : cocharacter_table(A(), action, n, limits).entries) {
      py::dict row;
      py::list shapes;
      for (const auto& p : e.shapes) shapes.append(p);
      row["shapes"] = shapes;
      row["m"] = e.m;
      row["contribution"] = pyint(e.contribution);
      out.append(row);
    }
    return out;
  }

  int exponent() const {
    if (!file.wedderburn) throw std::runtime_error("no wedderburn block in the definition");
    return graded_exponent(*file.wedderburn, A());
  }

  py::dict multiplier_dims() const {
    py::dict out;
    const auto graded = grading_of_M(A());
    std::size_t total = 0;
    for (const auto& [g, part] : graded) {
      out[py::str(A().group.labels[g])] = part.size();
      total += part.size();
    }
    out["total"] = total;
    return out;
  }

  bool tideal_verify(const std::vector<std::string>& generators, int n) const {
    GeneratorSet S;
    for (const auto& g : generators) S.generators.push_back(parse(g));
    for (const auto& g : S.generators)
      if (!is_identity(A(), action, g)) return false;
    return verify_basis(S, A(), action, n, limits).pass;
  }
};

}  // namespace

PYBIND11_MODULE(_gpilab, m) {
  m.doc() = "Exact-arithmetic invariants of graded W-algebras";

  py::class_<GenPolynomial>(m, "GenPolynomial")
      .def_property_readonly("num_terms",
                             [](const GenPolynomial& g) { return g.terms.size(); })
      .def("is_zero", &GenPolynomial::is_zero);

  py::class_<PySession>(m, "Algebra")
      .def_static("builtin", &PySession::from_builtin, py::arg("name"))
      .def_static("load", &PySession::from_file, py::arg("path"))
      .def_property(
          "threads", [](const PySession& s) { return s.limits.threads; },
          [](PySession& s, int t) { s.limits.threads = t; })
      .def_property(
          "max_rows", [](const PySession& s) { return s.limits.max_rows; },
          [](PySession& s, std::uint64_t v) { s.limits.max_rows = v; })
      .def_property_readonly("dim", [](const PySession& s) { return s.A().dim; })
      .def("codim", &PySession::codim, py::arg("n"))
      .def("codim_series", &PySession::codim_series_py, py::arg("n_max"))
      .def("codim_multidegree", &PySession::codim_md, py::arg("multidegree"))
      .def("parse", &PySession::parse, py::arg("text"))
      .def("is_identity", &PySession::identity, py::arg("polynomial"))
      .def("multiplicity", &PySession::mult, py::arg("shapes"))
      .def("cocharacter_table", &PySession::cochar, py::arg("n"))
      .def("graded_exponent", &PySession::exponent)
      .def("multiplier_dims", &PySession::multiplier_dims)
      .def("verify_tideal_basis", &PySession::tideal_verify, py::arg("generators"),
           py::arg("n"));

  m.def("builtin_names", &builtin_names);
}
