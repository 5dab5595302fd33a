#include "pauliops/dense.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pauliops {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw std::invalid_argument(std::string(what) + " supports at most " + std::to_string(cap) +
                                " sites, got " + std::to_string(n));
}

// Site 1 is the leftmost tensor factor, i.e. the most significant bit of the
// matrix index, so the low-bit site masks get bit-reversed once here.
struct ReversedTerm {
  Word64 v;
  Word64 w;
};

ReversedTerm reversed(const PauliTerm& t, int n) {
  return {reverse_low_bits(t.v, n), reverse_low_bits(t.w, n)};
}

}  // namespace

DenseMatrix to_dense(const Operator& a) {
  check_cap(a.n_sites(), kDenseMaxSites, "to_dense");
  const int n = a.n_sites();
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  // Every string is a monomial matrix: row r maps to column r ^ w with
  // entry (-1)^pop(r & v).
  for (const auto& [t, h] : a.terms()) {
    const auto [rv, rw] = reversed(t, n);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double sign = (popcount_word(static_cast<Word64>(r) & rv) & 1) ? -1.0 : 1.0;
      m(r, static_cast<Eigen::Index>(static_cast<Word64>(r) ^ rw)) += h * sign;
    }
  }
  return m;
}

Operator from_dense(const DenseMatrix& m, int n_sites) {
  check_cap(n_sites, kDenseLanczosMaxSites, "from_dense");
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("matrix dimension does not match site count");
  Operator a(n_sites);
  const double inv_dim = 1.0 / static_cast<double>(dim);
  for (Word64 v = 0; v < static_cast<Word64>(dim); ++v) {
    for (Word64 w = 0; w < static_cast<Word64>(dim); ++w) {
      const PauliTerm t{v, w};
      const auto [rv, rw] = reversed(t, n_sites);
      // tr(tau^dag M) / 2^N with tau monomial.
      Coeff s{};
      for (Eigen::Index r = 0; r < dim; ++r) {
        const double sign = (popcount_word(static_cast<Word64>(r) & rv) & 1) ? -1.0 : 1.0;
        s += sign * m(static_cast<Eigen::Index>(static_cast<Word64>(r) ^ rw), r);
      }
      const double adj = (t.y_count() & 1) ? -1.0 : 1.0;
      const Coeff h = adj * s * inv_dim;
      if (std::abs(h) >= kZeroThreshold) a.accumulate(t, h);
    }
  }
  return a;
}

Coeff dense_trace_normalized(const DenseMatrix& m) {
  return m.trace() / static_cast<double>(m.rows());
}

Coeff dense_trace_product_normalized(const DenseMatrix& a, const DenseMatrix& b) {
  // tr(AB) = sum_ij A_ij B_ji without the full product.
  return (a.transpose().cwiseProduct(b)).sum() / static_cast<double>(a.rows());
}

double dense_norm_lanczos(const DenseMatrix& a) {
  return std::sqrt(a.squaredNorm() / static_cast<double>(a.rows()));
}

namespace {

Eigen::SelfAdjointEigenSolver<DenseMatrix> diagonalize(const Operator& h) {
  const DenseMatrix hm = to_dense(h);
  if ((hm - hm.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + hm.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("dense evolution requires a Hermitian operator");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(hm);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return es;
}

}  // namespace

DenseMatrix dense_heisenberg(const Operator& h, const Operator& o, double t) {
  check_cap(h.n_sites(), kDenseEvolveMaxSites, "dense_heisenberg");
  h.check_sites(o);
  const auto es = diagonalize(h);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const DenseMatrix& vecs = es.eigenvectors();
  const Eigen::VectorXcd phases =
      (Coeff{0.0, 1.0} * t * lambda.cast<Coeff>().array()).exp().matrix();
  const DenseMatrix u = vecs * phases.asDiagonal() * vecs.adjoint();
  return u * to_dense(o) * u.adjoint();
}

std::vector<Coeff> dense_heisenberg_overlaps(const Operator& h, const Operator& o,
                                             const Operator& o0,
                                             const std::vector<double>& times) {
  check_cap(h.n_sites(), kDenseEvolveMaxSites, "dense_heisenberg_overlaps");
  h.check_sites(o);
  h.check_sites(o0);
  const auto es = diagonalize(h);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const DenseMatrix& vecs = es.eigenvectors();
  // In the eigenbasis O(t)_{jk} = O_{jk} e^{i(l_j - l_k)t}; the overlap with
  // O0^dag reduces to an elementwise sum.
  const DenseMatrix om = vecs.adjoint() * to_dense(o) * vecs;
  const DenseMatrix o0m = vecs.adjoint() * to_dense(o0) * vecs;
  const double inv_dim = 1.0 / static_cast<double>(om.rows());
  std::vector<Coeff> out;
  out.reserve(times.size());
  for (const double t : times) {
    Coeff s{};
    for (Eigen::Index j = 0; j < om.rows(); ++j)
      for (Eigen::Index k = 0; k < om.cols(); ++k) {
        const Coeff phase = std::exp(Coeff{0.0, 1.0} * ((lambda(j) - lambda(k)) * t));
        s += om(j, k) * phase * std::conj(o0m(j, k));
      }
    out.push_back(s * inv_dim);
  }
  return out;
}

std::vector<double> dense_lanczos(const Operator& h, const Operator& o0, int steps) {
  check_cap(h.n_sites(), kDenseLanczosMaxSites, "dense_lanczos");
  h.check_sites(o0);
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  const DenseMatrix hm = to_dense(h);
  const auto comm = [&hm](const DenseMatrix& x) -> DenseMatrix { return hm * x - x * hm; };

  DenseMatrix prev = to_dense(o0);
  const double nrm = dense_norm_lanczos(prev);
  if (nrm < kZeroThreshold) throw std::invalid_argument("initial operator has zero norm");
  prev /= nrm;

  std::vector<double> b;
  DenseMatrix cur = comm(prev);
  double bn = dense_norm_lanczos(cur);
  if (bn < 1e-12) return b;
  cur /= bn;
  b.push_back(bn);
  for (int n = 2; n <= steps; ++n) {
    DenseMatrix a = comm(cur) - bn * prev;
    const double bnext = dense_norm_lanczos(a);
    if (bnext < 1e-12) break;
    a /= bnext;
    prev = std::move(cur);
    cur = std::move(a);
    bn = bnext;
    b.push_back(bn);
  }
  return b;
}

}  // namespace pauliops
