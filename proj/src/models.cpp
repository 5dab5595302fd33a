#include "pauliops/models.hpp"

#include <stdexcept>

namespace pauliops::models {

namespace {

void require_sites(int n, int min, const char* model) {
  if (n < min)
    throw std::invalid_argument(std::string(model) + " needs at least " + std::to_string(min) +
                                " sites");
}

int wrap(int site, int n) { return (site - 1) % n + 1; }

}  // namespace

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw std::invalid_argument("boundary must be 'open' or 'periodic', got '" + s + "'");
}

Operator xx_chain(int n, Boundary b) {
  require_sites(n, 2, "xx_chain");
  Operator h(n);
  const int bonds = b == Boundary::periodic ? n : n - 1;
  for (int j = 1; j <= bonds; ++j) {
    h.add(1.0, 'X', j, 'X', wrap(j + 1, n));
    h.add(1.0, 'Y', j, 'Y', wrap(j + 1, n));
  }
  h.compress();
  return h;
}

Operator xxx_chain(int n, Boundary b) {
  require_sites(n, 2, "xxx_chain");
  Operator h(n);
  const int bonds = b == Boundary::periodic ? n : n - 1;
  for (int j = 1; j <= bonds; ++j) {
    h.add(1.0, 'X', j, 'X', wrap(j + 1, n));
    h.add(1.0, 'Y', j, 'Y', wrap(j + 1, n));
    h.add(1.0, 'Z', j, 'Z', wrap(j + 1, n));
  }
  h.compress();
  return h;
}

Operator quantum_ising(int n, double h_x, Boundary b) {
  require_sites(n, 2, "quantum_ising");
  Operator h(n);
  const int bonds = b == Boundary::periodic ? n : n - 1;
  for (int j = 1; j <= bonds; ++j) h.add(1.0, 'X', j, 'X', wrap(j + 1, n));
  for (int j = 1; j <= n; ++j) {
    h.add(-1.05, 'Z', j);
    h.add(h_x, 'X', j);
  }
  h.compress();
  return h;
}

Operator ising_chain(int n, double J, double g, Boundary b) {
  require_sites(n, 2, "ising_chain");
  Operator h(n);
  const int bonds = b == Boundary::periodic ? n : n - 1;
  for (int j = 1; j <= bonds; ++j) h.add(-J, 'Z', j, 'Z', wrap(j + 1, n));
  for (int j = 1; j <= n; ++j) h.add(-J * g, 'X', j);
  h.compress();
  return h;
}

Operator xxz_nnn(int n, double delta, double gamma, Boundary b) {
  require_sites(n, 3, "xxz_nnn");
  Operator h(n);
  const int nn_bonds = b == Boundary::periodic ? n : n - 1;
  for (int j = 1; j <= nn_bonds; ++j) {
    const int k = wrap(j + 1, n);
    h.add(1.0, 'X', j, 'X', k);
    h.add(1.0, 'Y', j, 'Y', k);
    h.add(delta, 'Z', j, 'Z', k);
  }
  const int nnn_bonds = b == Boundary::periodic ? n : n - 2;
  for (int j = 1; j <= nnn_bonds; ++j) {
    const int k = wrap(j + 2, n);
    h.add(gamma, 'X', j, 'X', k);
    h.add(gamma, 'Y', j, 'Y', k);
    h.add(gamma * delta, 'Z', j, 'Z', k);
  }
  h.compress();
  return h;
}

int grid_site(int x, int y, int lx) { return (y - 1) * lx + x; }

Operator xzzx_2d(int lx, int ly, Boundary b) {
  if (lx < 2 || ly < 2) throw std::invalid_argument("xzzx_2d needs at least a 2x2 lattice");
  Operator h(lx * ly);
  const int xmax = b == Boundary::periodic ? lx : lx - 1;
  const int ymax = b == Boundary::periodic ? ly : ly - 1;
  for (int y = 1; y <= ly; ++y)
    for (int x = 1; x <= xmax; ++x)
      h.add(1.0, 'X', grid_site(x, y, lx), 'Z', grid_site(x % lx + 1, y, lx));
  for (int y = 1; y <= ymax; ++y)
    for (int x = 1; x <= lx; ++x)
      h.add(1.0, 'Z', grid_site(x, y, lx), 'X', grid_site(x, y % ly + 1, lx));
  h.compress();
  return h;
}

Operator xxz_2d(int lx, int ly, double delta, Boundary b) {
  if (lx < 2 || ly < 2) throw std::invalid_argument("xxz_2d needs at least a 2x2 lattice");
  Operator h(lx * ly);
  const auto add_edge = [&](int s1, int s2) {
    h.add(1.0, 'X', s1, 'X', s2);
    h.add(1.0, 'Y', s1, 'Y', s2);
    h.add(delta, 'Z', s1, 'Z', s2);
  };
  const int xmax = b == Boundary::periodic ? lx : lx - 1;
  const int ymax = b == Boundary::periodic ? ly : ly - 1;
  for (int y = 1; y <= ly; ++y)
    for (int x = 1; x <= xmax; ++x) add_edge(grid_site(x, y, lx), grid_site(x % lx + 1, y, lx));
  for (int y = 1; y <= ymax; ++y)
    for (int x = 1; x <= lx; ++x) add_edge(grid_site(x, y, lx), grid_site(x, y % ly + 1, lx));
  h.compress();
  return h;
}

Operator graph_model(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<BondTerm>& bond_terms,
                     const std::vector<FieldTerm>& field_terms) {
  require_sites(n, 1, "graph_model");
  Operator h(n);
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") out of range for " + std::to_string(n) + " sites");
    for (const auto& bt : bond_terms) h.add(bt.coeff, bt.op_a, a, bt.op_b, b);
  }
  for (int s = 1; s <= n; ++s)
    for (const auto& ft : field_terms) h.add(ft.coeff, ft.op, s);
  h.compress();
  return h;
}

Operator initial_operator(const std::string& name, int n, Boundary b) {
  Operator o(n);
  if (name == "X1") {
    o.add(1.0, 'X', 1);
  } else if (name == "Z1") {
    o.add(1.0, 'Z', 1);
  } else if (name == "sumX") {
    for (int j = 1; j <= n; ++j) o.add(1.0, 'X', j);
  } else if (name == "energy_current_xxx") {
    const int bonds = b == Boundary::periodic ? n : n - 1;
    for (int j = 1; j <= bonds; ++j) {
      o.add(1.0, 'X', j, 'Y', wrap(j + 1, n));
      o.add(-1.0, 'Y', j, 'X', wrap(j + 1, n));
    }
  } else if (name == "ising_energy") {
    const int bonds = b == Boundary::periodic ? n : n - 1;
    for (int j = 1; j <= bonds; ++j) o.add(1.05, 'X', j, 'X', wrap(j + 1, n));
    for (int j = 1; j <= n; ++j) o.add(1.0, 'Z', j);
  } else {
    throw std::invalid_argument("unknown initial operator '" + name + "'");
  }
  o.compress();
  return o;
}

namespace {

double param(const nlohmann::json& j, const std::string& key, double fallback) {
  if (!j.contains("params")) return fallback;
  return j.at("params").value(key, fallback);
}

}  // namespace

int model_sites(const nlohmann::json& j) {
  const std::string name = j.at("model").get<std::string>();
  if (name == "xzzx_2d" || name == "xxz_2d")
    return j.at("Lx").get<int>() * j.at("Ly").get<int>();
  return j.at("N").get<int>();
}

Operator model_from_json(const nlohmann::json& j) {
  const std::string name = j.at("model").get<std::string>();
  const Boundary b = boundary_from_string(
      j.value("boundary", (name == "xxz_nnn" || name == "ising_chain") ? "periodic" : "open"));

  Operator h = [&]() -> Operator {
    if (name == "xx_chain" || name == "xx") return xx_chain(j.at("N").get<int>(), b);
    if (name == "xxx_chain" || name == "xxx") return xxx_chain(j.at("N").get<int>(), b);
    if (name == "quantum_ising")
      return quantum_ising(j.at("N").get<int>(), param(j, "h_x", 0.5), b);
    if (name == "ising_chain")
      return ising_chain(j.at("N").get<int>(), param(j, "J", 1.0), param(j, "g", 1.0), b);
    if (name == "xxz_nnn")
      return xxz_nnn(j.at("N").get<int>(), param(j, "delta", 2.0), param(j, "gamma", 0.5), b);
    if (name == "xzzx_2d") return xzzx_2d(j.at("Lx").get<int>(), j.at("Ly").get<int>(), b);
    if (name == "xxz_2d")
      return xxz_2d(j.at("Lx").get<int>(), j.at("Ly").get<int>(), param(j, "delta", 0.5), b);
    if (name == "graph") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      std::vector<BondTerm> bonds;
      for (const auto& t : j.value("bond_terms", nlohmann::json::array())) {
        const auto ops = t.at("ops").get<std::string>();
        if (ops.size() != 2) throw std::invalid_argument("bond term needs two letters");
        bonds.push_back({t.value("coeff", 1.0), ops[0], ops[1]});
      }
      std::vector<FieldTerm> fields;
      for (const auto& t : j.value("field_terms", nlohmann::json::array()))
        fields.push_back({t.value("coeff", 1.0), t.at("op").get<std::string>().at(0)});
      return graph_model(j.at("N").get<int>(), edges, bonds, fields);
    }
    throw std::invalid_argument("unknown model '" + name + "'");
  }();

  for (const auto& d : j.value("defects", nlohmann::json::array()))
    h.add(d.value("coeff", 1.0), d.at("op").get<std::string>().at(0), d.at("site").get<int>());
  h.compress();
  return h;
}

}  // namespace pauliops::models
