#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pauliops/term.hpp"

namespace pauliops {

// Coefficients below this are dropped as zero by compress(); far below any
// tolerance used by the algorithms built on top.
inline constexpr double kZeroThreshold = 1e-20;

// Retention policy applied after a product/commutator or an evolution step.
// max_terms == 0 means unlimited. Terms listed in keep are never discarded
// and do not count against max_terms.
template <class W>
struct BasicTrimPolicy {
  std::size_t max_terms = 0;
  std::vector<BasicPauliTerm<W>> keep;
  std::optional<int> max_weight;
  double cutoff = 0.0;

  bool trivial() const noexcept {
    return max_terms == 0 && !max_weight && cutoff <= 0.0;
  }
};

using TrimPolicy = BasicTrimPolicy<Word64>;

// Weighted sum of Pauli strings over a fixed number of sites, stored as a
// hash map from bit pair to coefficient. Coefficients refer to the real
// string basis {1, X, Z, iY}; Pauli-letter coefficients differ by i per Y.
template <class W>
class BasicOperator {
 public:
  using Term = BasicPauliTerm<W>;
  using Map = std::unordered_map<Term, Coeff, TermHash<W>>;

  explicit BasicOperator(int n_sites) : n_(n_sites) {
    if (n_sites < 1 || n_sites > word_bits<W>())
      throw std::invalid_argument("site count must be in 1.." + std::to_string(word_bits<W>()));
  }

  int n_sites() const noexcept { return n_; }
  std::size_t size() const noexcept { return map_.size(); }
  bool empty() const noexcept { return map_.empty(); }
  const Map& terms() const noexcept { return map_; }

  Coeff coeff(const Term& t) const {
    const auto it = map_.find(t);
    return it == map_.end() ? Coeff{} : it->second;
  }

  // Raw accumulation in the stored basis.
  void accumulate(const Term& t, Coeff h) {
    check_term(t);
    map_[t] += h;
  }

  void set(const Term& t, Coeff h) {
    check_term(t);
    if (std::abs(h) < kZeroThreshold)
      map_.erase(t);
    else
      map_[t] = h;
  }

  // Adds c times a product of Pauli letters, e.g. add(0.5, {{'X',1},{'X',2}}).
  void add(Coeff c, std::initializer_list<SiteLetter> letters) {
    add(c, std::span<const SiteLetter>(letters.begin(), letters.size()));
  }

  void add(Coeff c, std::span<const SiteLetter> letters) {
    const auto [t, factor] = parse_term<W>(letters, n_);
    map_[t] += c * factor;
  }

  void add(Coeff c, char p, int site) { add(c, {SiteLetter{p, site}}); }

  void add(Coeff c, char p1, int s1, char p2, int s2) {
    add(c, {SiteLetter{p1, s1}, SiteLetter{p2, s2}});
  }

  BasicOperator& operator*=(Coeff c) {
    for (auto& [t, h] : map_) h *= c;
    return *this;
  }

  BasicOperator& operator+=(const BasicOperator& o) {
    add_scaled(o, Coeff{1.0, 0.0});
    return *this;
  }

  BasicOperator& operator-=(const BasicOperator& o) {
    add_scaled(o, Coeff{-1.0, 0.0});
    return *this;
  }

  void add_scaled(const BasicOperator& o, Coeff c) {
    check_sites(o);
    for (const auto& [t, h] : o.map_) map_[t] += h * c;
  }

  // Depolarizing damping: each coefficient shrinks by exp(-g * weight).
  void apply_noise(double g) {
    if (g < 0.0) throw std::invalid_argument("noise amplitude must be >= 0");
    for (auto& [t, h] : map_) h *= std::exp(-g * t.weight());
  }

  // Drops entries with |coefficient| < eps.
  void apply_cutoff(double eps) {
    if (eps < 0.0) throw std::invalid_argument("cutoff must be >= 0");
    if (eps == 0.0) return;
    for (auto it = map_.begin(); it != map_.end();) {
      if (std::abs(it->second) < eps)
        it = map_.erase(it);
      else
        ++it;
    }
  }

  // Drops entries whose string weight exceeds lmax.
  void apply_weight_cap(int lmax) {
    if (lmax < 0) throw std::invalid_argument("weight cap must be >= 0");
    for (auto it = map_.begin(); it != map_.end();) {
      if (it->first.weight() > lmax)
        it = map_.erase(it);
      else
        ++it;
    }
  }

  // Applies the policy and returns the fraction of the operator norm that
  // was discarded, sqrt(dropped / total); 0 when nothing was dropped.
  double apply_trim(const BasicTrimPolicy<W>& p) {
    const bool over = p.max_terms != 0 && map_.size() > p.max_terms;
    if (!over && !p.max_weight && p.cutoff <= 0.0) return 0.0;

    std::unordered_set<Term, TermHash<W>> keep_set(p.keep.begin(), p.keep.end());

    std::vector<std::pair<Term, Coeff>> kept_protected;
    std::vector<std::pair<Term, Coeff>> normal;
    normal.reserve(map_.size());
    double total_sq = 0.0;
    for (const auto& [t, h] : map_) {
      total_sq += std::norm(h);
      if (!keep_set.empty() && keep_set.count(t)) {
        kept_protected.emplace_back(t, h);
        continue;
      }
      if (p.max_weight && t.weight() > *p.max_weight) continue;
      if (p.cutoff > 0.0 && std::abs(h) < p.cutoff) continue;
      normal.emplace_back(t, h);
    }

    // Largest |h| first; ties broken by ascending (v, w) for determinism.
    const auto larger = [](const std::pair<Term, Coeff>& a, const std::pair<Term, Coeff>& b) {
      const double ma = std::norm(a.second), mb = std::norm(b.second);
      if (ma != mb) return ma > mb;
      return a.first < b.first;
    };
    if (p.max_terms != 0 && normal.size() > p.max_terms) {
      std::nth_element(normal.begin(), normal.begin() + p.max_terms, normal.end(), larger);
      normal.resize(p.max_terms);
    }

    Map next;
    next.reserve(kept_protected.size() + normal.size());
    double kept_sq = 0.0;
    for (const auto& [t, h] : kept_protected) {
      next.emplace(t, h);
      kept_sq += std::norm(h);
    }
    for (const auto& [t, h] : normal) {
      next.emplace(t, h);
      kept_sq += std::norm(h);
    }
    map_ = std::move(next);
    if (total_sq <= 0.0) return 0.0;
    const double dropped = std::max(0.0, total_sq - kept_sq);
    return std::sqrt(dropped / total_sq);
  }

  // Removes entries indistinguishable from zero. Keys are unique by
  // construction, so this is idempotent.
  void compress() {
    for (auto it = map_.begin(); it != map_.end();) {
      if (std::abs(it->second) < kZeroThreshold)
        it = map_.erase(it);
      else
        ++it;
    }
  }

  bool is_hermitian(double tol = 1e-12) const {
    for (const auto& [t, h] : map_) {
      const double sign = (t.y_count() & 1) ? -1.0 : 1.0;
      if (std::abs(h - std::conj(h) * sign) > tol) return false;
    }
    return true;
  }

  void check_sites(const BasicOperator& o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("operators act on different site counts (" +
                                  std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
  }

  void reserve(std::size_t n) { map_.reserve(n); }

 private:
  void check_term(const Term& t) const {
    const W m = low_mask<W>(n_);
    if ((t.v & ~m) != 0 || (t.w & ~m) != 0)
      throw std::invalid_argument("term has bits beyond site count " + std::to_string(n_));
  }

  int n_;
  Map map_;
};

using Operator = BasicOperator<Word64>;
using Operator128 = BasicOperator<Word128>;

template <class W>
BasicOperator<W> product(const BasicOperator<W>& a, const BasicOperator<W>& b) {
  a.check_sites(b);
  BasicOperator<W> c(a.n_sites());
  c.reserve(std::min(a.size() * b.size(), std::max(a.size(), b.size()) * 8));
  for (const auto& [ta, ha] : a.terms())
    for (const auto& [tb, hb] : b.terms()) {
      const int alpha = product_phase(ta, tb);
      c.accumulate(term_bits(ta, tb), ha * hb * static_cast<double>(alpha));
    }
  c.compress();
  return c;
}

template <class W>
BasicOperator<W> commutator(const BasicOperator<W>& a, const BasicOperator<W>& b) {
  a.check_sites(b);
  BasicOperator<W> c(a.n_sites());
  c.reserve(std::min(a.size() * b.size(), std::max(a.size(), b.size()) * 8));
  for (const auto& [ta, ha] : a.terms())
    for (const auto& [tb, hb] : b.terms()) {
      const int alpha = commutator_phase(ta, tb);
      if (alpha == 0) continue;
      c.accumulate(term_bits(ta, tb), ha * hb * static_cast<double>(alpha));
    }
  c.compress();
  return c;
}

// tr(A) / 2^N: only the identity string survives.
template <class W>
Coeff trace_normalized(const BasicOperator<W>& a) {
  return a.coeff(BasicPauliTerm<W>{});
}

// tr(A B) / 2^N without forming the product: strings are trace-orthogonal,
// and each self-product contributes (-1)^pop(v & w).
template <class W>
Coeff trace_product_normalized(const BasicOperator<W>& a, const BasicOperator<W>& b) {
  a.check_sites(b);
  const BasicOperator<W>& small = a.size() <= b.size() ? a : b;
  const BasicOperator<W>& large = a.size() <= b.size() ? b : a;
  Coeff s{};
  for (const auto& [t, h] : small.terms()) {
    const auto it = large.terms().find(t);
    if (it == large.terms().end()) continue;
    const double sign = (t.y_count() & 1) ? -1.0 : 1.0;
    s += h * it->second * sign;
  }
  return s;
}

// Adjoint: conjugate coefficients, with a sign for each anti-Hermitian iY.
template <class W>
BasicOperator<W> dagger(const BasicOperator<W>& a) {
  BasicOperator<W> d(a.n_sites());
  d.reserve(a.size());
  for (const auto& [t, h] : a.terms()) {
    const double sign = (t.y_count() & 1) ? -1.0 : 1.0;
    d.accumulate(t, std::conj(h) * sign);
  }
  return d;
}

// Frobenius norm with the tr/2^N normalization: sqrt(tr(A^dag A)/2^N),
// which in this basis is just the 2-norm of the coefficients.
template <class W>
double norm_lanczos(const BasicOperator<W>& a) {
  double s = 0.0;
  for (const auto& [t, h] : a.terms()) s += std::norm(h);
  return std::sqrt(s);
}

template <class W>
BasicOperator<W> trim(const BasicOperator<W>& a, const BasicTrimPolicy<W>& p) {
  BasicOperator<W> c = a;
  c.apply_trim(p);
  return c;
}

template <class W>
BasicOperator<W> trim(const BasicOperator<W>& a, std::size_t max_terms) {
  BasicTrimPolicy<W> p;
  p.max_terms = max_terms;
  BasicOperator<W> c = a;
  c.apply_trim(p);
  return c;
}

template <class W>
BasicOperator<W> cutoff(const BasicOperator<W>& a, double eps) {
  BasicOperator<W> c = a;
  c.apply_cutoff(eps);
  return c;
}

template <class W>
BasicOperator<W> add_noise(const BasicOperator<W>& a, double g) {
  BasicOperator<W> c = a;
  c.apply_noise(g);
  return c;
}

template <class W>
BasicOperator<W> truncate_weight(const BasicOperator<W>& a, int lmax) {
  BasicOperator<W> c = a;
  c.apply_weight_cap(lmax);
  return c;
}

template <class W>
BasicOperator<W> compress(const BasicOperator<W>& a) {
  BasicOperator<W> c = a;
  c.compress();
  return c;
}

template <class W>
BasicOperator<W> operator+(BasicOperator<W> a, const BasicOperator<W>& b) {
  a += b;
  return a;
}

template <class W>
BasicOperator<W> operator-(BasicOperator<W> a, const BasicOperator<W>& b) {
  a -= b;
  return a;
}

template <class W>
BasicOperator<W> operator*(Coeff c, BasicOperator<W> a) {
  a *= c;
  return a;
}

template <class W>
BasicOperator<W> operator*(BasicOperator<W> a, Coeff c) {
  a *= c;
  return a;
}

}  // namespace pauliops
