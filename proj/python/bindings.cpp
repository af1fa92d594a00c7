#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <stdexcept>

#include "ahm/catalog.hpp"
#include "ahm/circulant.hpp"
#include "ahm/designs.hpp"
#include "ahm/io.hpp"
#include "ahm/json.hpp"
#include "ahm/linalg.hpp"
#include "ahm/optimizer.hpp"
#include "ahm/two_entry.hpp"
#include "ahm/verify.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ahm::SquareMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw std::invalid_argument("expected a square 2-d array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  std::vector<double> entries(a.data(), a.data() + n * n);
  return ahm::SquareMatrix(n, std::move(entries));
}

Array to_array(const ahm::SquareMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.size());
  Array out({n, n});
  std::memcpy(out.mutable_data(), m.entries().data(), m.entries().size() * sizeof(double));
  return out;
}

py::object to_python(const ahm::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_ahm, m) {
  m.doc() = "Construction, verification and optimization of almost Hadamard matrices";

  py::register_exception<ahm::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ahm::IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<ahm::ZeroEntryError>(m, "ZeroEntryError", PyExc_ValueError);
  py::register_exception<ahm::InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<ahm::PatternViolation>(m, "PatternViolation", PyExc_ValueError);

  m.attr("DEFAULT_TOL") = ahm::kDefaultTol;
  m.attr("DEFAULT_SEED") = ahm::kDefaultBaseSeed;

  m.def("construct", [](const std::string& name) { return to_array(ahm::construct_named(name)); }, py::arg("name"),
        "Matrix H for a catalog name or family (K5, L7, I4, W3, K3xH2, ...).");
  m.def("known_names", &ahm::known_names);
  m.def("check", [](const Array& h, double tol) { return to_python(ahm::to_json(ahm::check_ahm(to_matrix(h), tol))); },
        py::arg("h"), py::arg("tol") = ahm::kDefaultTol, "Almost Hadamard report of H as a dict.");
  m.def("one_norm", [](const Array& a) { return ahm::one_norm(to_matrix(a)); }, py::arg("m"));
  m.def("p_norm", [](const Array& a, double p) { return ahm::p_norm(to_matrix(a), p); }, py::arg("m"), py::arg("p"));
  m.def("format_matrix", [](const Array& a) { return ahm::format_matrix(to_matrix(a)); }, py::arg("m"));
  m.def("parse_matrix", [](const std::string& text) { return to_array(ahm::parse_matrix(text)); }, py::arg("text"));

  m.def("circulant", [](const std::vector<double>& gamma) { return to_array(ahm::circulant_from_gamma(gamma)); },
        py::arg("gamma"));
  m.def("construct_L", [](std::size_t n) { return to_python(ahm::to_json(ahm::construct_L(n))); }, py::arg("n"));
  m.def("construct_prop24",
        [](std::size_t n, std::size_t r, int sign) { return to_python(ahm::to_json(ahm::construct_prop24(n, r, sign))); },
        py::arg("n"), py::arg("r"), py::arg("sign") = 1);
  m.def("circulant_check",
        [](const std::vector<double>& gamma, double tol) {
          const auto r = ahm::circulant_ahm_check(gamma, tol);
          py::dict d;
          d["verdict"] = std::string(ahm::to_string(r.verdict));
          d["min_re_nu"] = r.diagnostics.min_re_nu;
          d["alpha_modulus_residual"] = r.diagnostics.alpha_modulus_residual;
          std::vector<double> nu;
          for (const auto& v : r.diagnostics.nu) nu.push_back(v.real());
          d["nu"] = nu;
          return d;
        },
        py::arg("gamma"), py::arg("tol") = ahm::kDefaultTol);
  m.def("search_circulant_hadamard", &ahm::search_circulant_hadamard, py::arg("n"));

  m.def("projective_plane", [](unsigned p, unsigned k) { return to_python(ahm::to_json(ahm::projective_plane(ahm::build_field(p, k)))); },
        py::arg("p"), py::arg("k"));
  m.def("paley_biplane", [] { return to_python(ahm::to_json(ahm::paley_biplane())); });
  m.def("verify_design",
        [](const py::object& design) {
          const auto text = py::module_::import("json").attr("dumps")(design).cast<std::string>();
          return ahm::verify_bibd(ahm::design_from_json(ahm::Json::parse(text))).valid;
        },
        py::arg("design"));

  m.def("solve_two_entry",
        [](unsigned a, unsigned b, unsigned c, bool plus) {
          return to_python(ahm::to_json(ahm::solve_two_entry({a, b, c}, plus ? ahm::Branch::Plus : ahm::Branch::Minus)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("plus") = false);

  m.def("multistart",
        [](std::size_t n, std::size_t seeds, std::uint64_t base_seed, std::size_t max_iters, std::size_t hops) {
          ahm::AscentConfig cfg;
          cfg.seed = base_seed;
          cfg.max_iters = max_iters;
          cfg.hops = hops;
          ahm::AscentResult r;
          {
            py::gil_scoped_release release;
            r = ahm::multistart(n, seeds, cfg);
          }
          py::dict d = to_python(ahm::to_json(r));
          d["U"] = to_array(r.U_final);
          d["trace"] = r.trace;
          return d;
        },
        py::arg("n"), py::arg("seeds") = 20, py::arg("base_seed") = ahm::kDefaultBaseSeed,
        py::arg("max_iters") = 100000, py::arg("hops") = ahm::AscentConfig{}.hops);

  m.def("table1_csv",
        [](std::size_t n9_seeds) {
          ahm::Table1Options opts;
          opts.n9_seeds = n9_seeds;
          return ahm::table1_csv(ahm::table1(opts));
        },
        py::arg("n9_seeds") = 0);
}
