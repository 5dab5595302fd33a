#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pauliops/operator.hpp"

namespace pauliops {

// Dense reference implementations for small systems. Everything here scales
// exponentially and exists to pin conventions and verify the string algebra;
// the site-count caps below are enforced.
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr int kDenseMaxSites = 12;       // 4096 x 4096 complex
inline constexpr int kDenseEvolveMaxSites = 10;
inline constexpr int kDenseLanczosMaxSites = 8;

// 2^N x 2^N matrix of the operator, site 1 as the leftmost tensor factor.
DenseMatrix to_dense(const Operator& a);

// Exact inverse of to_dense on the span of at most 4^N strings.
Operator from_dense(const DenseMatrix& m, int n_sites);

Coeff dense_trace_normalized(const DenseMatrix& m);
Coeff dense_trace_product_normalized(const DenseMatrix& a, const DenseMatrix& b);
double dense_norm_lanczos(const DenseMatrix& a);

// e^{iHt} O e^{-iHt} via eigendecomposition of the (Hermitian) H.
DenseMatrix dense_heisenberg(const Operator& h, const Operator& o, double t);

// tr(O(t) O0^dag) / 2^N for a whole time grid, sharing one diagonalization.
std::vector<Coeff> dense_heisenberg_overlaps(const Operator& h, const Operator& o,
                                             const Operator& o0, const std::vector<double>& times);

// Three-term recursion on the commutator superoperator with dense matrices;
// returns the normalization coefficients b_n.
std::vector<double> dense_lanczos(const Operator& h, const Operator& o0, int steps);

}  // namespace pauliops
