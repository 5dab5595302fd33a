#pragma once

#include "pauliops/operator.hpp"

namespace pauliops {

// Translation-invariant operator on a ring of N sites, stored through a
// representative rep so that the full operator is sum_k T_k(rep). Every
// non-identity key of rep is anchored on site 1 (shift_left fixed point);
// strings with a translation period p < N are stored with 1/(N/p) of their
// full coefficient so the k-sum reproduces them exactly, and the identity
// carries 1/N of its full coefficient.
class SymOperator1D {
 public:
  using Term = PauliTerm;

  explicit SymOperator1D(int n_sites) : rep_(n_sites) {}

  // Compresses a translation-invariant operator; rejects anything whose
  // coefficients are not constant along translation orbits.
  static SymOperator1D from_operator(const Operator& a, double tol = 1e-12);

  Operator to_operator() const;

  const Operator& rep() const noexcept { return rep_; }
  int n_sites() const noexcept { return rep_.n_sites(); }
  std::size_t size() const noexcept { return rep_.size(); }
  bool empty() const noexcept { return rep_.empty(); }

  // Adds c times a representative string (canonicalized here).
  void add(Coeff c, std::initializer_list<SiteLetter> letters);

  SymOperator1D& operator*=(Coeff c) {
    rep_ *= c;
    return *this;
  }
  void add_scaled(const SymOperator1D& o, Coeff c) { rep_.add_scaled(o.rep_, c); }
  void apply_noise(double g) { rep_.apply_noise(g); }
  void apply_cutoff(double eps) { rep_.apply_cutoff(eps); }
  double apply_trim(const TrimPolicy& p) { return rep_.apply_trim(p); }
  void apply_weight_cap(int lmax) { rep_.apply_weight_cap(lmax); }
  void compress() { rep_.compress(); }
  void check_sites(const SymOperator1D& o) const { rep_.check_sites(o.rep_); }

  // Internal: wraps an already-canonical representative.
  static SymOperator1D wrap(Operator rep) { return SymOperator1D(std::move(rep)); }

 private:
  explicit SymOperator1D(Operator rep) : rep_(std::move(rep)) {}

  Operator rep_;
};

SymOperator1D product(const SymOperator1D& a, const SymOperator1D& b);
SymOperator1D commutator(const SymOperator1D& a, const SymOperator1D& b);
SymOperator1D dagger(const SymOperator1D& a);
Coeff trace_normalized(const SymOperator1D& a);
Coeff trace_product_normalized(const SymOperator1D& a, const SymOperator1D& b);
double norm_lanczos(const SymOperator1D& a);
SymOperator1D add_noise(const SymOperator1D& a, double g);
SymOperator1D cutoff(const SymOperator1D& a, double eps);
SymOperator1D trim(const SymOperator1D& a, const TrimPolicy& p);

}  // namespace pauliops
