#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string_view>

namespace bvlab {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using Mat6d = Eigen::Matrix<double, 6, 6>;
using Mat6c = Eigen::Matrix<cplx, 6, 6>;
using Vec6d = Eigen::Matrix<double, 6, 1>;
using Mat15d = Eigen::Matrix<double, 15, 15>;

inline constexpr cplx kImag{0.0, 1.0};

// Paravector labels run over m = -1, 0, 1, 2, 3, 4; array storage puts label m
// at slot m + 1 so that the two exceptional directions (the volume element and
// the unit) sit in front of the four generator directions.
inline constexpr int kParaCount = 6;
constexpr int para_slot(int m) { return m + 1; }
constexpr int para_label(int slot) { return slot - 1; }
inline constexpr std::array<int, 6> kParaLabels{-1, 0, 1, 2, 3, 4};

// Biparavector labels are ordered pairs (m1 < m2) of paravector labels,
// enumerated lexicographically.
struct BipPair {
  int m1;
  int m2;
};
inline constexpr std::array<BipPair, 15> kBipPairs{{{-1, 0},
                                                    {-1, 1},
                                                    {-1, 2},
                                                    {-1, 3},
                                                    {-1, 4},
                                                    {0, 1},
                                                    {0, 2},
                                                    {0, 3},
                                                    {0, 4},
                                                    {1, 2},
                                                    {1, 3},
                                                    {1, 4},
                                                    {2, 3},
                                                    {2, 4},
                                                    {3, 4}}};

// Position of the ordered pair (m1, m2) with m1 < m2 in kBipPairs.
int bip_position(int m1, int m2);

// Antisymmetrised lookup: position of the ordering of (m1, m2) together with
// the sign picked up by sorting; sign = 0 flags a repeated label.
struct SignedBip {
  int position;
  double sign;
};
SignedBip bip_lookup(int m1, int m2);

// Totally antisymmetric symbol on six paravector labels, normalised so that
// the naturally ordered sextuple (-1, 0, 1, 2, 3, 4) gives +1.
int eps6(int m1, int m2, int m3, int m4, int m5, int m6);

// Totally antisymmetric symbol on the four generator labels 1..4 with
// eps4(1, 2, 3, 4) = +1.
int eps4(int a, int b, int c, int d);

// The sixteen fermion monomial labels "creators|annihilators" in canonical
// order: unit, linear, then quadratic through quartic products.
inline constexpr std::array<std::string_view, 16> kMonomialLabels{
    "0|0", "1|0",   "2|0",   "0|1",   "0|2",   "1,2|0",   "1|1",     "1|2",
    "2|1", "2|2",   "0|1,2", "1,2|1", "1,2|2", "1|1,2",   "2|1,2",   "1,2|1,2"};

// Index of a monomial label in kMonomialLabels; -1 when unknown.
int monomial_position(std::string_view label);

// Default numerical tolerances.  Algebraic identities on the fixed 4x4
// representation hold to machine precision; tolerances widen as computations
// chain more floating-point steps.
namespace tol {
inline constexpr double algebra = 1e-12;
inline constexpr double group = 1e-10;
inline constexpr double cayley = 1e-8;
inline constexpr double recovery = 1e-6;
inline constexpr double car = 1e-10;
inline constexpr double diag = 1e-9;
}  // namespace tol

}  // namespace bvlab
