#include "pauliops/symmetric.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "pauliops/io.hpp"

namespace pauliops {

SymOperator1D SymOperator1D::from_operator(const Operator& a, double tol) {
  const int n = a.n_sites();
  Operator rep(n);
  std::unordered_set<PauliTerm, TermHash<Word64>> done;
  done.reserve(a.size());

  // Track the lexicographically smallest violating term so the error is
  // deterministic regardless of map order.
  bool violated = false;
  PauliTerm bad{};
  Coeff bad_have{}, bad_want{};

  for (const auto& [t, h] : a.terms()) {
    const PauliTerm canon = shift_left(t, n);
    if (done.count(canon)) continue;
    done.insert(canon);
    const Coeff ref = a.coeff(canon);
    const int period = translation_period(canon, n);
    for (int k = 0; k < period; ++k) {
      const PauliTerm shifted = translate(canon, k, n);
      const Coeff have = a.coeff(shifted);
      if (std::abs(have - ref) > tol * std::max(1.0, std::abs(ref))) {
        if (!violated || shifted < bad) {
          violated = true;
          bad = shifted;
          bad_have = have;
          bad_want = ref;
        }
      }
    }
    // The k-sum in to_operator hits each orbit member N/period times.
    rep.accumulate(canon, ref * (static_cast<double>(period) / static_cast<double>(n)));
  }
  if (violated)
    throw std::invalid_argument("operator is not translation invariant: term " +
                                to_label(bad, n) + " has coefficient " + format_coeff(bad_have) +
                                " but its orbit representative has " + format_coeff(bad_want));
  rep.compress();
  return SymOperator1D(std::move(rep));
}

Operator SymOperator1D::to_operator() const {
  const int n = n_sites();
  Operator full(n);
  full.reserve(rep_.size() * static_cast<std::size_t>(n));
  for (const auto& [t, h] : rep_.terms())
    for (int k = 0; k < n; ++k) full.accumulate(translate(t, k, n), h);
  full.compress();
  return full;
}

void SymOperator1D::add(Coeff c, std::initializer_list<SiteLetter> letters) {
  const auto [t, factor] =
      parse_term<Word64>(std::span<const SiteLetter>(letters.begin(), letters.size()), n_sites());
  rep_.accumulate(shift_left(t, n_sites()), c * factor);
}

namespace {

template <class PhaseFn>
SymOperator1D combine(const SymOperator1D& a, const SymOperator1D& b, PhaseFn phase) {
  a.check_sites(b);
  const int n = a.n_sites();
  Operator rep(n);
  rep.reserve(std::max(a.size(), b.size()));
  for (const auto& [ta, ha] : a.rep().terms())
    for (const auto& [tb, hb] : b.rep().terms())
      for (int k = 0; k < n; ++k) {
        const PauliTerm tbs = translate(tb, k, n);
        const int alpha = phase(ta, tbs);
        if (alpha == 0) continue;
        rep.accumulate(shift_left(term_bits(ta, tbs), n), ha * hb * static_cast<double>(alpha));
      }
  rep.compress();
  return SymOperator1D::wrap(std::move(rep));
}

}  // namespace

SymOperator1D product(const SymOperator1D& a, const SymOperator1D& b) {
  return combine(a, b, [](const PauliTerm& x, const PauliTerm& y) { return product_phase(x, y); });
}

SymOperator1D commutator(const SymOperator1D& a, const SymOperator1D& b) {
  return combine(a, b,
                 [](const PauliTerm& x, const PauliTerm& y) { return commutator_phase(x, y); });
}

SymOperator1D dagger(const SymOperator1D& a) {
  return SymOperator1D::wrap(dagger(a.rep()));
}

Coeff trace_normalized(const SymOperator1D& a) {
  return static_cast<double>(a.n_sites()) * trace_normalized(a.rep());
}

// tr(AB)/2^N for two symmetric operators: one representative pair per orbit
// and a single relative-shift loop, times N for the outer translation sum.
Coeff trace_product_normalized(const SymOperator1D& a, const SymOperator1D& b) {
  a.check_sites(b);
  const int n = a.n_sites();
  Coeff s{};
  for (const auto& [tb, hb] : b.rep().terms()) {
    for (int k = 0; k < n; ++k) {
      const PauliTerm shifted = translate(tb, k, n);
      const auto it = a.rep().terms().find(shifted);
      if (it == a.rep().terms().end()) continue;
      const double sign = (shifted.y_count() & 1) ? -1.0 : 1.0;
      s += it->second * hb * sign;
    }
  }
  return static_cast<double>(n) * s;
}

double norm_lanczos(const SymOperator1D& a) {
  const Coeff s = trace_product_normalized(dagger(a), a);
  return std::sqrt(std::max(0.0, s.real()));
}

SymOperator1D add_noise(const SymOperator1D& a, double g) {
  SymOperator1D c = a;
  c.apply_noise(g);
  return c;
}

SymOperator1D cutoff(const SymOperator1D& a, double eps) {
  SymOperator1D c = a;
  c.apply_cutoff(eps);
  return c;
}

SymOperator1D trim(const SymOperator1D& a, const TrimPolicy& p) {
  SymOperator1D c = a;
  c.apply_trim(p);
  return c;
}

}  // namespace pauliops
