#pragma once

#include <random>

#include "bvlab/clifford.hpp"
#include "bvlab/types.hpp"

namespace bvlab::testing {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

inline cplx random_cplx(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline Eigen::MatrixXcd random_complex_matrix(std::mt19937_64& rng, int r,
                                              int c) {
  Eigen::MatrixXcd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = random_cplx(rng);
  return m;
}

inline Eigen::MatrixXd random_real_matrix(std::mt19937_64& rng, int r, int c) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = n(rng);
  return m;
}

// Haar-ish random special unitary 4x4: QR of a complex Gaussian matrix with
// column phases normalised, then the overall determinant phase removed.
inline Mat4 random_su4(std::mt19937_64& rng) {
  Eigen::MatrixXcd g = random_complex_matrix(rng, 4, 4);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) {
    cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  cplx det = q.determinant();
  q *= std::exp(cplx(0.0, -std::arg(det) / 4.0));
  return q;
}

// Random special orthogonal 6x6 via QR of a real Gaussian matrix.
inline Mat6d random_so6(std::mt19937_64& rng) {
  Eigen::MatrixXd g = random_real_matrix(rng, 6, 6);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 6; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (q.determinant() < 0) q.col(5) = -q.col(5);
  return q;
}

inline Eigen::MatrixXd random_antisym(std::mt19937_64& rng, int n,
                                      double scale = 1.0) {
  Eigen::MatrixXd m = random_real_matrix(rng, n, n);
  return scale * 0.5 * (m - m.transpose());
}

inline Eigen::MatrixXcd random_antisym_c(std::mt19937_64& rng, int n,
                                         double scale = 1.0) {
  Eigen::MatrixXcd m = random_complex_matrix(rng, n, n);
  return scale * 0.5 * (m - m.transpose());
}

inline const OperatorBasis& basis() {
  static const OperatorBasis b = build_operator_basis(build_gamma_set());
  return b;
}

}  // namespace bvlab::testing
