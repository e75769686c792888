#pragma once

#include <vector>

#include "bvlab/errors.hpp"
#include "bvlab/types.hpp"

namespace bvlab {

int binom(int n, int k);

// All k-element subsets of {0..n-1} in lexicographic order; this fixes the
// row/column indexing of every compound matrix below.
std::vector<std::vector<int>> ksubsets(int n, int k);

// Ascending complement of a subset within {0..n-1}, and the sign of the
// permutation (subset, complement) relative to the identity.
std::vector<int> subset_complement(const std::vector<int>& s, int n);
int subset_complement_sign(const std::vector<int>& s, int n);

// Determinant by recursive first-row minor expansion.  Deliberately avoids
// pivoting so results are bit-reproducible across runs and platforms.
double det_minor_expansion(const Eigen::MatrixXd& m);
cplx det_minor_expansion(const Eigen::MatrixXcd& m);

// k-th multiplicative compound: the matrix of all order-k minors, rows and
// columns indexed by k-subsets in lexicographic order.  Throws BadOrder when
// k is outside 0..n.
Eigen::MatrixXd compound(const Eigen::MatrixXd& m, int k);
Eigen::MatrixXcd compound(const Eigen::MatrixXcd& m, int k);

// Supplementary compound: the unique matrix with
//   compound(m, k) * supplementary_compound(m, k) = det(m) * identity,
// built from complementary minors with subset permutation signs (the k = 1
// case is the classical adjugate).
Eigen::MatrixXd supplementary_compound(const Eigen::MatrixXd& m, int k);
Eigen::MatrixXcd supplementary_compound(const Eigen::MatrixXcd& m, int k);

// Complement re-indexing of a compound-shaped matrix: given x indexed by
// k-subsets of {0..n-1}, returns y indexed by (n-k)-subsets with
//   y[P][Q] = sign(P) * sign(Q) * x[P^c][Q^c].
Eigen::MatrixXd star(const Eigen::MatrixXd& x, int n, int k);
Eigen::MatrixXcd star(const Eigen::MatrixXcd& x, int n, int k);

// Pfaffian of an antisymmetric matrix by recursive first-row expansion
// (equivalently the signed sum over perfect matchings).  Odd dimension gives
// zero; a non-antisymmetric input throws NotAntisymmetric.
double pfaffian(const Eigen::MatrixXd& a);
cplx pfaffian(const Eigen::MatrixXcd& a);

// Quadratic Pfaffian minor map on antisymmetric 6x6 matrices:
//   out(k, l) = -(1/8) * sum_{a,b,c,d} eps(k,l,a,b,c,d) t(a,b) t(c,d).
// It is the exterior-square companion of t: t * out = out * t = Pf(t) * id.
Mat6d pfaffian_compound(const Mat6d& t);
Mat6c pfaffian_compound(const Mat6c& t);

}  // namespace bvlab
