#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "pauliops/dense.hpp"
#include "pauliops/dynamics.hpp"
#include "pauliops/io.hpp"
#include "pauliops/krylov.hpp"
#include "pauliops/models.hpp"
#include "pauliops/operator.hpp"
#include "pauliops/symmetric.hpp"

namespace py = pybind11;
using namespace pauliops;

namespace {

std::vector<SiteLetter> to_letters(const std::vector<std::pair<std::string, int>>& letters) {
  std::vector<SiteLetter> out;
  out.reserve(letters.size());
  for (const auto& [op, site] : letters) {
    if (op.size() != 1) throw std::invalid_argument("Pauli letter must be a single character");
    out.push_back({op[0], site});
  }
  return out;
}

TrimPolicy make_policy(std::size_t m, double cut) {
  TrimPolicy p;
  p.max_terms = m;
  p.cutoff = cut;
  return p;
}

models::Boundary boundary(const std::string& b) { return models::boundary_from_string(b); }

template <class Op>
void bind_lanczos_result(py::module_& m, const char* name) {
  py::class_<LanczosRun<Op>>(m, name)
      .def_readonly("b", &LanczosRun<Op>::b)
      .def_readonly("term_counts", &LanczosRun<Op>::term_counts)
      .def_readonly("natural_termination", &LanczosRun<Op>::natural_termination)
      .def_readonly("budget_exceeded", &LanczosRun<Op>::budget_exceeded);
}

template <class Op>
LanczosRun<Op> run_lanczos(const Op& h, const Op& o0, int steps, std::size_t m, double cut) {
  LanczosOptions opt;
  opt.policy = make_policy(m, cut);
  return lanczos(h, o0, steps, opt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pauli-string operator algebra with truncated Heisenberg evolution and the "
            "Lanczos recursion";

  py::class_<Operator>(m, "Operator")
      .def(py::init<int>(), py::arg("n_sites"))
      .def_property_readonly("n_sites", &Operator::n_sites)
      .def("__len__", &Operator::size)
      .def(
          "add",
          [](Operator& a, Coeff c, const std::vector<std::pair<std::string, int>>& letters) {
            const auto ls = to_letters(letters);
            a.add(c, std::span<const SiteLetter>(ls.data(), ls.size()));
          },
          py::arg("coeff"), py::arg("letters"))
      .def("terms",
           [](const Operator& a) {
             std::vector<std::pair<std::string, Coeff>> out;
             for (const auto& lt : labeled_terms(a)) out.emplace_back(lt.label, lt.coeff);
             return out;
           })
      .def("is_hermitian", &Operator::is_hermitian, py::arg("tol") = 1e-12)
      .def("__str__", [](const Operator& a) { return to_string(a); })
      .def("__add__", [](const Operator& a, const Operator& b) { return a + b; })
      .def("__sub__", [](const Operator& a, const Operator& b) { return a - b; })
      .def("__mul__", [](const Operator& a, Coeff c) { return a * c; })
      .def("__rmul__", [](const Operator& a, Coeff c) { return a * c; });

  py::class_<SymOperator1D>(m, "SymOperator1D")
      .def_static("from_operator", &SymOperator1D::from_operator, py::arg("op"),
                  py::arg("tol") = 1e-12)
      .def("to_operator", &SymOperator1D::to_operator)
      .def_property_readonly("n_sites", &SymOperator1D::n_sites)
      .def("__len__", &SymOperator1D::size)
      .def_property_readonly("rep", &SymOperator1D::rep);

  m.def("product", [](const Operator& a, const Operator& b) { return product(a, b); });
  m.def("commutator", [](const Operator& a, const Operator& b) { return commutator(a, b); });
  m.def("sym_product", [](const SymOperator1D& a, const SymOperator1D& b) { return product(a, b); });
  m.def("sym_commutator",
        [](const SymOperator1D& a, const SymOperator1D& b) { return commutator(a, b); });
  m.def("dagger", [](const Operator& a) { return dagger(a); });
  m.def("trace", [](const Operator& a) { return trace_normalized(a); });
  m.def("trace_product",
        [](const Operator& a, const Operator& b) { return trace_product_normalized(a, b); });
  m.def("norm_lanczos", [](const Operator& a) { return norm_lanczos(a); });
  m.def("norm_lanczos", [](const SymOperator1D& a) { return norm_lanczos(a); });
  m.def(
      "trim", [](const Operator& a, std::size_t m_) { return trim(a, m_); }, py::arg("op"),
      py::arg("max_terms"));
  m.def("cutoff", [](const Operator& a, double eps) { return cutoff(a, eps); });
  m.def("add_noise", [](const Operator& a, double g) { return add_noise(a, g); });
  m.def("truncate_weight", [](const Operator& a, int l) { return truncate_weight(a, l); });
  m.def("to_dense", [](const Operator& a) { return to_dense(a); });
  m.def("to_json", [](const Operator& a) { return to_json(a); });
  m.def("from_json", [](const std::string& s) {
    auto loaded = from_json(s);
    return std::make_pair(std::move(loaded.op), loaded.translation_symmetric);
  });

  bind_lanczos_result<Operator>(m, "LanczosResult");
  bind_lanczos_result<SymOperator1D>(m, "SymLanczosResult");
  m.def("lanczos", &run_lanczos<Operator>, py::arg("h"), py::arg("o0"), py::arg("steps"),
        py::arg("max_terms") = 0, py::arg("cutoff") = 0.0);
  m.def("lanczos", &run_lanczos<SymOperator1D>, py::arg("h"), py::arg("o0"), py::arg("steps"),
        py::arg("max_terms") = 0, py::arg("cutoff") = 0.0);
  m.def("dense_lanczos", &dense_lanczos, py::arg("h"), py::arg("o0"), py::arg("steps"));

  py::class_<EvolutionTrace>(m, "EvolutionTrace")
      .def_readonly("times", &EvolutionTrace::times)
      .def_readonly("autocorr", &EvolutionTrace::autocorr)
      .def_readonly("loss", &EvolutionTrace::loss)
      .def_readonly("term_counts", &EvolutionTrace::term_counts)
      .def_readonly("discarded", &EvolutionTrace::discarded)
      .def_readonly("separations", &EvolutionTrace::separations)
      .def_readonly("profile", &EvolutionTrace::profile)
      .def_readonly("budget_exceeded", &EvolutionTrace::budget_exceeded);

  m.def(
      "evolve",
      [](const Operator& h, const Operator& o0, double dt, int steps, std::size_t max_terms,
         double noise) {
        EvolveConfig cfg;
        cfg.dt = dt;
        cfg.steps = steps;
        cfg.max_terms = max_terms;
        cfg.noise = noise;
        return evolve_autocorrelation(h, o0, cfg);
      },
      py::arg("h"), py::arg("o0"), py::arg("dt"), py::arg("steps"), py::arg("max_terms") = 0,
      py::arg("noise") = 0.0);
  m.def(
      "evolve_two_point",
      [](const Operator& h, const Operator& o0, double dt, int steps,
         const std::vector<int>& sites, std::size_t max_terms, double noise) {
        EvolveConfig cfg;
        cfg.dt = dt;
        cfg.steps = steps;
        cfg.max_terms = max_terms;
        cfg.noise = noise;
        return evolve_two_point(h, o0, cfg, sites);
      },
      py::arg("h"), py::arg("o0"), py::arg("dt"), py::arg("steps"), py::arg("sites"),
      py::arg("max_terms") = 0, py::arg("noise") = 0.0);

  auto models_mod = m.def_submodule("models", "spin model builders");
  models_mod.def(
      "xx_chain", [](int n, const std::string& b) { return models::xx_chain(n, boundary(b)); },
      py::arg("n"), py::arg("boundary") = "open");
  models_mod.def(
      "xxx_chain", [](int n, const std::string& b) { return models::xxx_chain(n, boundary(b)); },
      py::arg("n"), py::arg("boundary") = "open");
  models_mod.def(
      "quantum_ising",
      [](int n, double h_x, const std::string& b) {
        return models::quantum_ising(n, h_x, boundary(b));
      },
      py::arg("n"), py::arg("h_x") = 0.5, py::arg("boundary") = "open");
  models_mod.def(
      "ising_chain",
      [](int n, double J, double g, const std::string& b) {
        return models::ising_chain(n, J, g, boundary(b));
      },
      py::arg("n"), py::arg("J") = 1.0, py::arg("g") = 1.0, py::arg("boundary") = "periodic");
  models_mod.def(
      "xxz_nnn",
      [](int n, double delta, double gamma, const std::string& b) {
        return models::xxz_nnn(n, delta, gamma, boundary(b));
      },
      py::arg("n"), py::arg("delta") = 2.0, py::arg("gamma") = 0.5,
      py::arg("boundary") = "periodic");
  models_mod.def(
      "xzzx_2d",
      [](int lx, int ly, const std::string& b) { return models::xzzx_2d(lx, ly, boundary(b)); },
      py::arg("lx"), py::arg("ly"), py::arg("boundary") = "open");
  models_mod.def(
      "xxz_2d",
      [](int lx, int ly, double delta, const std::string& b) {
        return models::xxz_2d(lx, ly, delta, boundary(b));
      },
      py::arg("lx"), py::arg("ly"), py::arg("delta") = 0.5, py::arg("boundary") = "open");
  models_mod.def(
      "graph_model",
      [](int n, const std::vector<std::pair<int, int>>& edges,
         const std::vector<std::pair<double, std::string>>& bond_terms,
         const std::vector<std::pair<double, std::string>>& field_terms) {
        std::vector<models::BondTerm> bonds;
        for (const auto& [c, ops] : bond_terms) {
          if (ops.size() != 2) throw std::invalid_argument("bond term needs two letters");
          bonds.push_back({c, ops[0], ops[1]});
        }
        std::vector<models::FieldTerm> fields;
        for (const auto& [c, op] : field_terms) {
          if (op.size() != 1) throw std::invalid_argument("field term needs one letter");
          fields.push_back({c, op[0]});
        }
        return models::graph_model(n, edges, bonds, fields);
      },
      py::arg("n"), py::arg("edges"), py::arg("bond_terms"),
      py::arg("field_terms") = std::vector<std::pair<double, std::string>>{});
  models_mod.def(
      "initial_operator",
      [](const std::string& name, int n, const std::string& b) {
        return models::initial_operator(name, n, boundary(b));
      },
      py::arg("name"), py::arg("n"), py::arg("boundary") = "open");
}
