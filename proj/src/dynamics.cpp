#include "pauliops/dynamics.hpp"

#include <cmath>
#include <ostream>

#include "pauliops/io.hpp"

namespace pauliops {

namespace {

constexpr Coeff kImag{0.0, 1.0};

struct BudgetExceeded {};

// i[H, X], trimmed to the step policy so the k2..k4 stages cannot blow up
// the string count M-fold.
Operator stage_derivative(const Operator& h, const Operator& x, const EvolveConfig& cfg,
                          const TrimPolicy& policy) {
  Operator k = commutator(h, x);
  if (cfg.term_budget != 0 && k.size() > cfg.term_budget) throw BudgetExceeded{};
  k *= kImag;
  if (cfg.max_terms != 0) k.apply_trim(policy);
  return k;
}

TrimPolicy step_policy(const EvolveConfig& cfg) {
  TrimPolicy p;
  p.max_terms = cfg.max_terms;
  p.keep = cfg.keep;
  return p;
}

Operator rk4_step_impl(const Operator& h, const Operator& o, const EvolveConfig& cfg,
                       const TrimPolicy& policy) {
  const double dt = cfg.dt;
  const Operator k1 = stage_derivative(h, o, cfg, policy);
  Operator tmp = o;
  tmp.add_scaled(k1, dt / 2.0);
  const Operator k2 = stage_derivative(h, tmp, cfg, policy);
  tmp = o;
  tmp.add_scaled(k2, dt / 2.0);
  const Operator k3 = stage_derivative(h, tmp, cfg, policy);
  tmp = o;
  tmp.add_scaled(k3, dt);
  const Operator k4 = stage_derivative(h, tmp, cfg, policy);

  Operator next = o;
  next.add_scaled(k1, dt / 6.0);
  next.add_scaled(k2, dt / 3.0);
  next.add_scaled(k3, dt / 3.0);
  next.add_scaled(k4, dt / 6.0);
  next.compress();
  return next;
}

std::vector<PauliTerm> keys_of(const Operator& a) {
  std::vector<PauliTerm> keys;
  keys.reserve(a.size());
  for (const auto& [t, h] : a.terms()) keys.push_back(t);
  return keys;
}

}  // namespace

Operator rk4_step(const Operator& h, const Operator& o, const EvolveConfig& cfg) {
  h.check_sites(o);
  cfg.validate();
  return rk4_step_impl(h, o, cfg, step_policy(cfg));
}

namespace {

EvolutionTrace evolve_impl(const Operator& h, const Operator& o0, EvolveConfig cfg,
                           const std::vector<int>* sites, int source_site) {
  h.check_sites(o0);
  cfg.validate();
  if (cfg.keep.empty()) cfg.keep = keys_of(o0);
  const TrimPolicy policy = step_policy(cfg);

  const Coeff s0 = trace_product_normalized(o0, o0);
  if (std::abs(s0) < kZeroThreshold) throw std::invalid_argument("initial operator has zero norm");
  const Operator o0d = dagger(o0);

  EvolutionTrace trace;
  if (sites) {
    for (const int i : *sites) trace.separations.push_back(i - source_site);
  }

  Operator o = o0;
  double last_discard = 0.0;
  for (int k = 0; k <= cfg.steps; ++k) {
    const double t = k * cfg.dt;
    trace.times.push_back(t);
    trace.autocorr.push_back(trace_product_normalized(o, o0d) / s0);
    trace.loss.push_back(std::exp(-cfg.noise * t));
    trace.term_counts.push_back(o.size());
    trace.discarded.push_back(last_discard);
    if (sites) {
      std::vector<double> row;
      row.reserve(sites->size());
      for (const int i : *sites) {
        // Overlap with the weight-1 Z string on site i is just its stored
        // coefficient in O(t).
        const PauliTerm zi{Word64{1} << (i - 1), 0};
        row.push_back(o.coeff(zi).real());
      }
      trace.profile.push_back(std::move(row));
    }
    if (k == cfg.steps) break;

    try {
      o = rk4_step_impl(h, o, cfg, policy);
    } catch (const BudgetExceeded&) {
      trace.budget_exceeded = true;
      break;
    }
    if (cfg.noise > 0.0) o.apply_noise(cfg.noise * cfg.dt);
    last_discard = cfg.max_terms != 0 ? o.apply_trim(policy) : 0.0;
    if (cfg.term_budget != 0 && o.size() > cfg.term_budget) {
      trace.budget_exceeded = true;
      break;
    }
  }
  return trace;
}

}  // namespace

EvolutionTrace evolve_autocorrelation(const Operator& h, const Operator& o0, EvolveConfig cfg) {
  return evolve_impl(h, o0, std::move(cfg), nullptr, 0);
}

EvolutionTrace evolve_two_point(const Operator& h, const Operator& o0, EvolveConfig cfg,
                                const std::vector<int>& sites) {
  if (o0.size() != 1) throw std::invalid_argument("two-point evolution expects a single Z string");
  const auto& [t0, h0] = *o0.terms().begin();
  if (t0.w != 0 || t0.weight() != 1)
    throw std::invalid_argument("two-point evolution expects a single weight-1 Z string");
  int source = 1;
  for (int i = 0; i < o0.n_sites(); ++i)
    if ((t0.v >> i) & 1) source = i + 1;
  for (const int i : sites)
    if (i < 1 || i > o0.n_sites())
      throw std::invalid_argument("readout site " + std::to_string(i) + " out of range");
  return evolve_impl(h, o0, std::move(cfg), &sites, source);
}

void write_csv(std::ostream& os, const EvolutionTrace& trace) {
  os << "t,S_re,S_im,n,terms,discarded_norm";
  for (const int d : trace.separations) os << ",s" << d;
  os << '\n';
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    os << format_double(trace.times[k]) << ',' << format_double(trace.autocorr[k].real()) << ','
       << format_double(trace.autocorr[k].imag()) << ',' << format_double(trace.loss[k]) << ','
       << trace.term_counts[k] << ',' << format_double(trace.discarded[k]);
    if (!trace.profile.empty())
      for (const double p : trace.profile[k]) os << ',' << format_double(p);
    os << '\n';
  }
}

}  // namespace pauliops
