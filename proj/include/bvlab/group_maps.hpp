#pragma once

#include <vector>

#include "bvlab/clifford.hpp"
#include "bvlab/errors.hpp"
#include "bvlab/exterior.hpp"
#include "bvlab/types.hpp"

namespace bvlab {

// Scalar-plus-biparavector parameters of a special unitary 4x4 matrix,
//   U = t0 * identity + sum over ordered pairs M of t_M c_M,
// with the components t_M stored as an antisymmetric complex 6x6 matrix in
// paravector slot order.
struct SU4Params {
  cplx t0;
  Mat6c t;
};

using SO6Matrix = Mat6d;
using Chi15 = Mat15d;

// Unitary matrix written in the number-state basis, rows and columns
// labelled (-1, 0, 1, 2) at slots 0..3.
struct OstlundX {
  Mat4 x;
};

// Packing between antisymmetric 6x6 matrices and their fifteen independent
// upper-triangle components in kBipPairs order.
std::array<cplx, 15> antisym_components(const Mat6c& t);
std::array<double, 15> antisym_components(const Mat6d& t);
Mat6c antisym_from_components(const std::array<cplx, 15>& c);
Mat6d antisym_from_components_real(const std::array<double, 15>& c);

// Trace projections of a unitary onto the unit and the fifteen
// biparavectors; throws NotSpecialUnitary unless u is in SU(4).
SU4Params params_from_matrix(const Mat4& u, const OperatorBasis& basis);

// Reassembles the matrix and checks the two closure constraints the
// parameters must satisfy (unit norm and vanishing vector part of the
// mixed quadratic form); throws ParamConstraintViolation otherwise.
Mat4 matrix_from_params(const SU4Params& p, const OperatorBasis& basis);

// Residuals of the parameter constraints (norm condition and the fifteen
// component conditions), for reporting.
struct ParamConstraintResiduals {
  double norm;
  double vector;
};
ParamConstraintResiduals param_constraint_residuals(const SU4Params& p);

// The rotation carried by a special unitary on the six paravector
// directions, computed from spin-matrix traces; the companion closed form
// evaluates the same rotation polynomially in the parameters.
SO6Matrix so6_from_su4(const Mat4& u, const OperatorBasis& basis);
Mat6c so6_closed_form(const SU4Params& p);

// Cayley transform between a rotation and an antisymmetric matrix:
//   L = (1 + A) / (1 - A),   A = (L - 1) / (L + 1).
// The backward direction has a pole when L has eigenvalue -1.
Mat6d cayley_A_from_L(const SO6Matrix& l);
SO6Matrix cayley_L_from_A(const Mat6d& a);
// Inverse-free polynomial form of the same map (single scalar division).
SO6Matrix cayley_L_from_A_polynomial(const Mat6d& a);

// Splits a real antisymmetric 6x6 matrix into at most three mutually
// annihilating rank-two pieces (planes), ordered by descending rotation
// speed; the pieces sum to the input.
std::vector<Mat6d> plane_decompose(const Mat6d& a);

// Special unitary lifted from a Cayley parameter; `sign` (+1/-1) selects
// one of the two preimages.
SU4Params su4_from_A(const Mat6d& a, int sign);

// Trace-based lift of a rotation to the special unitary group.  Returns the
// four phase candidates; exactly two are valid preimages (they differ by an
// overall sign).  Throws DegenerateT0 when the scalar part vanishes and the
// method breaks down.
struct KlotzCandidate {
  SU4Params params;
  bool valid;
  double residual;
};
std::vector<KlotzCandidate> su4_from_L_klotz(const SO6Matrix& l,
                                             const OperatorBasis& basis);

// Determinant of the parametrised unitary from traces and the Pfaffian of
// its component matrix (no 4x4 arithmetic).
cplx det_su4(const SU4Params& p);

// Order-two compound of the rotation, acting on the fifteen biparavector
// directions; throws NotOrthogonal unless l is special orthogonal.
Chi15 chi_from_L(const SO6Matrix& l);

// Reconstructs the rotation from its order-two compound, returning the
// representative with positive (0,0) entry; throws ZeroL00 when that entry
// vanishes and the reconstruction is ill-posed.
SO6Matrix L_from_chi(const Chi15& chi);

// Conjugation action of a special unitary on the biparavector basis,
//   out(n, m) = tr(c_n^dag u c_m u^dag) / 4.
Chi15 adjoint_rep(const Mat4& u, const OperatorBasis& basis);

// Linear dictionary between the parameters and the number-state matrix
// elements (both directions).
OstlundX ostlund_convert(const SU4Params& p);
SU4Params ostlund_convert(const OstlundX& x);

// Number-state route evaluated with explicit state projectors, used to
// cross-check the linear dictionary.
OstlundX ostlund_from_su4_matrix(const Mat4& u, const OperatorBasis& basis);
Mat4 matrix_from_ostlund(const OstlundX& x, const OperatorBasis& basis);

// Exponential of a real antisymmetric component matrix inside the algebra:
//   U = exp(sum over ordered pairs M of v_M c_M).
Mat4 exp_biparavector(const Mat6d& v, const OperatorBasis& basis);

// Principal antisymmetric logarithm of a rotation (real Schur based; the
// -1 eigenvalue pairs are resolved into half-turn planes).
Mat6d so6_log(const SO6Matrix& l);

// Lift of a rotation to the special unitary group through the exponential
// map; smooth in l, no Cayley pole.
Mat4 su4_from_so6_exp(const SO6Matrix& l, const OperatorBasis& basis);

}  // namespace bvlab
