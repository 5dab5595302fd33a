#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pauliops/operator.hpp"
#include "pauliops/symmetric.hpp"

namespace pauliops {

struct LanczosOptions {
  TrimPolicy policy;            // applied to O_n after each normalization
  bool snapshots = false;       // keep O_0 .. O_n
  std::size_t term_budget = 0;  // stop early if an operator outgrows this
};

template <class Op>
struct LanczosRun {
  std::vector<double> b;                 // b_1 .. b_n, all > 0
  std::vector<std::size_t> term_counts;  // strings in O_n after the policy
  std::vector<Op> snapshots;             // O_0 (normalized), O_1, ... when requested
  bool natural_termination = false;      // hit b_n ~ 0
  bool budget_exceeded = false;
};

// Three-term recursion on the commutator superoperator [H, .] with the
// tr/2^N Frobenius norm. O0 is normalized internally. No re-orthogonalization
// is performed; the recursion is used as-is.
template <class Op>
LanczosRun<Op> lanczos(const Op& h, const Op& o0, int steps, const LanczosOptions& opt = {}) {
  h.check_sites(o0);
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  constexpr double kTermination = 1e-12;

  LanczosRun<Op> run;
  const double nrm = norm_lanczos(o0);
  if (nrm < kZeroThreshold) throw std::invalid_argument("initial operator has zero norm");
  Op prev = o0;
  prev *= 1.0 / nrm;
  if (opt.snapshots) run.snapshots.push_back(prev);

  Op cur = commutator(h, prev);
  double bn = norm_lanczos(cur);
  if (bn < kTermination) {
    run.natural_termination = true;
    return run;
  }
  cur *= 1.0 / bn;
  cur.apply_trim(opt.policy);
  run.b.push_back(bn);
  run.term_counts.push_back(cur.size());
  if (opt.snapshots) run.snapshots.push_back(cur);

  for (int n = 2; n <= steps; ++n) {
    Op next = commutator(h, cur);
    if (opt.term_budget != 0 && next.size() > opt.term_budget) {
      run.budget_exceeded = true;
      return run;
    }
    next.add_scaled(prev, -bn);
    const double bnext = norm_lanczos(next);
    if (bnext < kTermination) {
      run.natural_termination = true;
      return run;
    }
    next *= 1.0 / bnext;
    next.apply_trim(opt.policy);
    bn = bnext;
    run.b.push_back(bn);
    run.term_counts.push_back(next.size());
    if (opt.snapshots) run.snapshots.push_back(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return run;
}

// Runs the recursion with a magnitude cutoff and prints every operator,
// "step k" then one "(re + imim) LABEL" line per string in descending
// magnitude. Step 1 is the normalized initial operator.
LanczosRun<Operator> lanczos_verbose(const Operator& h, const Operator& o0, int steps,
                                     std::ostream& os, double cut = 1e-10);

void write_csv(std::ostream& os, const std::vector<double>& b,
               const std::vector<std::size_t>& term_counts);

}  // namespace pauliops
