#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pauliops/operator.hpp"

namespace pauliops {

struct EvolveConfig {
  double dt = 0.01;
  int steps = 100;              // samples taken at t = k*dt for k = 0..steps
  std::size_t max_terms = 0;    // strings kept per step; 0 = unlimited
  double noise = 0.0;           // depolarizing amplitude per unit time
  std::vector<PauliTerm> keep;  // protected strings; defaults to those of O0
  std::size_t term_budget = 0;  // graceful stop when an operator outgrows this

  void validate() const {
    if (dt <= 0.0) throw std::invalid_argument("dt must be > 0");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (noise < 0.0) throw std::invalid_argument("noise must be >= 0");
  }
};

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<Coeff> autocorr;           // S(t), normalized to S(0) = 1
  std::vector<double> loss;              // n(t) = exp(-noise * t)
  std::vector<std::size_t> term_counts;  // strings in O(t)
  std::vector<double> discarded;         // norm fraction dropped by the trim producing O(t)
  std::vector<int> separations;          // two-point runs: i - j per profile column
  std::vector<std::vector<double>> profile;  // per sample, one entry per separation
  bool budget_exceeded = false;

  std::size_t peak_terms() const {
    std::size_t peak = 0;
    for (const auto c : term_counts) peak = std::max(peak, c);
    return peak;
  }
};

// One classical RK4 step of dO/dt = i[H, O] (Heisenberg picture,
// O(t) = e^{iHt} O e^{-iHt}). Each stage commutator is trimmed to
// cfg.max_terms before entering the next stage.
Operator rk4_step(const Operator& h, const Operator& o, const EvolveConfig& cfg);

// Time series of S(t) = tr(O(t) O0^dag) / tr(O0 O0), advancing with
// rk4_step, then the depolarizing channel, then the trim.
EvolutionTrace evolve_autocorrelation(const Operator& h, const Operator& o0, EvolveConfig cfg);

// Evolves a single-site Z string Z_j and reads off tr(Z_j(t) Z_i) / 2^N for
// every requested site i in the same pass.
EvolutionTrace evolve_two_point(const Operator& h, const Operator& o0, EvolveConfig cfg,
                                const std::vector<int>& sites);

// Columns t,S_re,S_im,n,terms,discarded_norm, plus one s<separation> column
// per profile entry for two-point runs.
void write_csv(std::ostream& os, const EvolutionTrace& trace);

}  // namespace pauliops
