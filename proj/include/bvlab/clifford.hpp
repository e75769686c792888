#pragma once

#include <vector>

#include "bvlab/errors.hpp"
#include "bvlab/types.hpp"

namespace bvlab {

// The six antisymmetric 4x4 spin matrices (in their two chirality variants)
// that carry the defining representation of the generator algebra; slots
// follow the paravector labels (-1, 0, 1, 2, 3, 4).
struct GammaSet {
  std::array<Mat4, 6> plus;
  std::array<Mat4, 6> minus;
};

// Explicit spin matrices.  The minus set is generated from the plus set by
// complementary-index contraction, which also serves as a consistency check.
GammaSet build_gamma_set();

// Everything the rest of the library needs about the fixed 4x4 representation
// of the two-mode fermion algebra.
struct OperatorBasis {
  GammaSet gamma;

  Mat4 unit;                    // identity matrix
  std::array<Mat4, 6> para;     // generator images c_m, paravector slots
  std::array<Mat4, 15> bip;     // antisymmetrised pair products, kBipPairs order
  std::array<Mat4, 15> bip_dag; // their Hermitian conjugates

  Mat4 a1, a1d, a2, a2d;        // mode annihilation / creation operators
  Mat4 n1, n2;                  // occupation-number operators

  std::array<Mat4, 16> monomial;  // fermion monomials, kMonomialLabels order
  Eigen::FullPivLU<Eigen::Matrix<cplx, 16, 16>> monomial_solver;

  Vec4 vacuum;                  // normalised kernel of both annihilators
  std::array<Vec4, 4> state;    // number states indexed (-1, 0, 1, 2) -> 0..3
};

// Assembles the representation from the spin matrices and verifies the
// defining pairing identity; throws GammaInvariantViolation on failure.
OperatorBasis build_operator_basis(const GammaSet& gamma);

// Coefficients of a product of two biparavector basis elements re-expanded
// over the unit and the fifteen biparavectors.
struct BipExpansion {
  cplx scalar;
  std::array<cplx, 15> bip;
};

// Structure constants of the biparavector product c_P c_Q, computed from the
// index-contraction closed form (positions refer to kBipPairs).
BipExpansion bip_product_structure(int p, int q);

// Same data for the commutator [c_P, c_Q] (purely biparavector, coefficients
// real multiples of 2) and the anticommutator {c_P, c_Q}.
BipExpansion bip_commutator_structure(int p, int q);
BipExpansion bip_anticommutator_structure(int p, int q);

// Trace of an alternating word in daggered / undaggered generators, evaluated
// from the closed combinatorial formulas (no matrix arithmetic).  Entry i of
// `labels` is a paravector label; `daggered[i]` marks a Hermitian conjugate.
// Supported patterns: even-length words alternating dagger / plain starting
// with a dagger, and odd-length words starting with a plain generator whose
// remainder alternates.  Anything else throws UnsupportedPattern.
cplx closed_trace(const std::vector<int>& labels,
                  const std::vector<bool>& daggered);

// A pair of commuting quaternion units inside the algebra.
struct QuaternionPair {
  std::array<Mat4, 3> set1;  // I, J, K acting on the first plane
  std::array<Mat4, 3> set2;  // I, J, K acting on the second plane
};

enum class QuaternionVariant {
  symmetric,  // balanced combinations of generators and their triples
  gamma,      // the representation-adapted variant
};

QuaternionPair quaternion_pair(const OperatorBasis& basis, QuaternionVariant v);

// Orthogonality-based coefficient extraction on the fixed representation.
cplx unit_coefficient(const Mat4& x);                       // tr(x) / 4
std::array<cplx, 15> bip_coefficients(const OperatorBasis& basis,
                                      const Mat4& x);       // tr(c_N^dag x) / 4
std::array<cplx, 16> monomial_coefficients(const OperatorBasis& basis,
                                           const Mat4& x);  // exact projection

}  // namespace bvlab
