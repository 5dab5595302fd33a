#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pauliops/operator.hpp"

namespace pauliops::models {

enum class Boundary { open, periodic };

Boundary boundary_from_string(const std::string& s);

// Nearest-neighbor chains.
Operator xx_chain(int n, Boundary b = Boundary::open);
Operator xxx_chain(int n, Boundary b = Boundary::open);

// sum_i (X_i X_{i+1} - 1.05 Z_i + h_x X_i)
Operator quantum_ising(int n, double h_x, Boundary b = Boundary::open);

// -J (sum Z_i Z_{i+1} + g sum X_i)
Operator ising_chain(int n, double J = 1.0, double g = 1.0, Boundary b = Boundary::periodic);

// Nearest plus gamma-weighted next-nearest XXZ couplings.
Operator xxz_nnn(int n, double delta = 2.0, double gamma = 0.5, Boundary b = Boundary::periodic);

// 2D lattices; site index is (y-1)*Lx + x, x fastest.
int grid_site(int x, int y, int lx);
Operator xzzx_2d(int lx, int ly, Boundary b = Boundary::open);
Operator xxz_2d(int lx, int ly, double delta = 0.5, Boundary b = Boundary::open);

// Arbitrary graph: each bond term (coeff, two letters) is applied to every
// edge, each field term (coeff, letter) to every site.
struct BondTerm {
  double coeff;
  char op_a;
  char op_b;
};
struct FieldTerm {
  double coeff;
  char op;
};
Operator graph_model(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<BondTerm>& bond_terms,
                     const std::vector<FieldTerm>& field_terms);

// Named initial operators used by the drivers:
//   "X1", "Z1"               single-site strings
//   "sumX"                   sum_i X_i
//   "energy_current_xxx"     sum_j X_j Y_{j+1} - Y_j X_{j+1}
//   "ising_energy"           sum_i 1.05 X_i X_{i+1} + Z_i
Operator initial_operator(const std::string& name, int n, Boundary b = Boundary::open);

// Builds a Hamiltonian from a JSON descriptor:
//   {"model": name, "N": n | "Lx": lx, "Ly": ly,
//    "boundary": "open"|"periodic", "params": {...},
//    "defects": [{"op": "X", "site": 4, "coeff": 1.0}],
//    "edges": [[i,j],...], "bond_terms": [...], "field_terms": [...]}
Operator model_from_json(const nlohmann::json& j);

// Total site count implied by a descriptor.
int model_sites(const nlohmann::json& j);

}  // namespace pauliops::models
