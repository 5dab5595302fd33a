#include "pauliops/krylov.hpp"

#include <ostream>

#include "pauliops/io.hpp"

namespace pauliops {

LanczosRun<Operator> lanczos_verbose(const Operator& h, const Operator& o0, int steps,
                                     std::ostream& os, double cut) {
  LanczosOptions opt;
  opt.policy.cutoff = cut;
  opt.snapshots = true;
  // steps - 1 recursion steps produce printed operators O_0 .. O_{steps-1}.
  LanczosRun<Operator> run = lanczos(h, o0, std::max(1, steps - 1), opt);
  for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
    os << "step " << (k + 1) << '\n';
    os << to_string(run.snapshots[k]);
    os << '\n';
  }
  return run;
}

void write_csv(std::ostream& os, const std::vector<double>& b,
               const std::vector<std::size_t>& term_counts) {
  os << "n,b_n,terms_n\n";
  for (std::size_t i = 0; i < b.size(); ++i)
    os << (i + 1) << ',' << format_double(b[i]) << ','
       << (i < term_counts.size() ? term_counts[i] : 0) << '\n';
}

}  // namespace pauliops
