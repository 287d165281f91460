// Python bindings for the main operations: build an algebra from its JSON
// document, assemble complexes, measure hom spaces, knit and classify the
// stable window, and run mesh propagation on Dynkin trees.  Results that
// have a JSON form on the CLI side come back as JSON strings here too, so
// the two surfaces stay byte-compatible.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arknit/errors.hpp"
#include "arknit/hom.hpp"
#include "arknit/io.hpp"
#include "arknit/mesh.hpp"

namespace py = pybind11;
using namespace arknit;

namespace {

ArComponentGraph knit_window(const Algebra& A, std::size_t budget,
                             int window) {
  KnitOptions opts;
  opts.budget = budget;
  opts.window_lo = -window;
  opts.window_hi = window;
  return knit(A, opts);
}

std::string analyze_report(const Algebra& A, std::size_t budget, int window,
                           bool verify) {
  ArComponentGraph g = knit_window(A, budget, window);
  Report r = make_report(g, classify(g, A));
  if (verify) {
    std::vector<ProjComplex> universe;
    for (const ArNode& n : g.nodes)
      for (int s = g.window_lo; s <= g.window_hi; ++s)
        universe.push_back(shift(n.rep, s));
    for (std::size_t i = 0; i < g.triangles.size(); ++i) {
      VerifyReport vr = verify_ar(g.triangles[i], universe);
      r.triangles[i].status = "verified";
      r.triangles[i].objects_checked = vr.objects_checked;
    }
  }
  return write_report(r);
}

std::string analyze_dot(const Algebra& A, std::size_t budget, int window) {
  return write_dot(knit_window(A, budget, window));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "stable window computations over prime fields";

  py::register_exception<Error>(m, "ArknitError");

  py::class_<Algebra>(m, "Algebra")
      .def_static(
          "from_json",
          [](const std::string& text) {
            return Algebra::build(parse_algebra_document(text));
          },
          py::arg("text"),
          "Build a path algebra quotient from its JSON document.")
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("vertices", &Algebra::vertex_count)
      .def_property_readonly("arrows", &Algebra::arrow_count)
      .def_property_readonly("simple", &Algebra::is_simple)
      .def("__repr__", [](const Algebra& A) {
        return "<Algebra dim=" + std::to_string(A.dim()) + " over F_" +
               std::to_string(A.field().p()) + ">";
      });

  py::class_<ProjComplex>(m, "Complex")
      .def_property_readonly("lo", &ProjComplex::lo)
      .def_property_readonly("hi", &ProjComplex::hi)
      .def_property_readonly("width", &ProjComplex::total_width)
      .def_property_readonly("is_zero", &ProjComplex::is_zero_complex)
      .def("lengths",
           [](const ProjComplex& X) {
             LengthTriple t = lengths(X);
             return py::make_tuple(t.l_c, t.l, t.l_p);
           })
      .def(
          "__eq__",
          [](const ProjComplex& a, const ProjComplex& b) { return a == b; },
          py::is_operator())
      .def("__repr__", [](const ProjComplex& X) {
        if (X.is_zero_complex()) return std::string("<Complex 0>");
        return "<Complex degrees [" + std::to_string(X.lo()) + ", " +
               std::to_string(X.hi()) + "] width " +
               std::to_string(X.total_width()) + ">";
      });

  m.def(
      "stalk",
      [](const Algebra& A, std::size_t vertex, int degree) {
        return ProjComplex::stalk(A, vertex, degree);
      },
      py::arg("algebra"), py::arg("vertex"), py::arg("degree") = 0,
      py::keep_alive<0, 1>(),
      "Indecomposable projective as a one-term complex.");

  m.def(
      "complex_from_json",
      [](const std::string& text, const Algebra& A) {
        return parse_complex_document(text, A);
      },
      py::arg("text"), py::arg("algebra"), py::keep_alive<0, 2>(),
      "Assemble and validate a complex from its JSON document.");

  m.def(
      "shift",
      [](const ProjComplex& X, int n) { return shift(X, n); },
      py::arg("complex"), py::arg("n"), py::keep_alive<0, 1>());

  m.def(
      "hom_dims",
      [](const ProjComplex& X, const ProjComplex& Y) {
        HomSpace H = HomSpace::compute(X, Y);
        return py::make_tuple(H.chain_dim(), H.null_dim(), H.dim());
      },
      py::arg("X"), py::arg("Y"),
      "(chain maps, null homotopic, hom in the homotopy category)");

  m.def("analyze_report", &analyze_report, py::arg("algebra"),
        py::arg("budget") = 200, py::arg("window") = 4,
        py::arg("verify") = false,
        "Knit, classify and serialize the report document.");
  m.def("analyze_dot", &analyze_dot, py::arg("algebra"),
        py::arg("budget") = 200, py::arg("window") = 4,
        "Knit and serialize the window graph in DOT.");

  m.def(
      "mesh_identities",
      [](const std::string& tree) {
        std::vector<std::pair<std::string, bool>> out;
        for (const MeshIdentity& id :
             check_identities(DynkinTree::parse(tree)))
          out.emplace_back(id.name, id.holds);
        return out;
      },
      py::arg("tree"), "E-series relation checks as (name, holds) pairs.");

  m.def(
      "mesh_positivity",
      [](const std::string& tree, const std::vector<long long>& initial,
         std::size_t columns) {
        PositivityBreak b = positivity_certificate(DynkinTree::parse(tree),
                                                   initial, columns);
        return py::make_tuple(b.vertex, b.column, b.value);
      },
      py::arg("tree"), py::arg("initial"), py::arg("columns") = 64,
      "(vertex, column, value) of the first forced non-positive entry.");

  m.def(
      "mesh_rows",
      [](const std::string& tree, std::size_t rows) {
        return propagate_symbolic(DynkinTree::parse(tree), rows).columns;
      },
      py::arg("tree"), py::arg("rows") = 8,
      "Symbolic window columns as coefficient vectors over the initial "
      "row.");
}
