#include "bvlab/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bvlab {

namespace {

// Sign of the permutation sorting `v` ascending (inversion-count parity);
// 0 on repeated entries.
template <std::size_t N>
int perm_sign(const std::array<int, N>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) sign = -sign;
    }
  return sign;
}

Mat4 zero4() { return Mat4::Zero(); }

}  // namespace

int bip_position(int m1, int m2) {
  for (int p = 0; p < 15; ++p)
    if (kBipPairs[p].m1 == m1 && kBipPairs[p].m2 == m2) return p;
  return -1;
}

SignedBip bip_lookup(int m1, int m2) {
  if (m1 == m2) return {-1, 0.0};
  if (m1 < m2) return {bip_position(m1, m2), 1.0};
  return {bip_position(m2, m1), -1.0};
}

int eps6(int m1, int m2, int m3, int m4, int m5, int m6) {
  return perm_sign<6>({m1, m2, m3, m4, m5, m6});
}

int eps4(int a, int b, int c, int d) { return perm_sign<4>({a, b, c, d}); }

int monomial_position(std::string_view label) {
  for (int i = 0; i < 16; ++i)
    if (kMonomialLabels[i] == label) return i;
  return -1;
}

GammaSet build_gamma_set() {
  GammaSet g;
  for (auto& m : g.plus) m = zero4();

  auto& p = g.plus;
  // Slot order (-1, 0, 1, 2, 3, 4); entries are written 0-indexed.
  p[para_slot(-1)](0, 3) = -1.0;
  p[para_slot(-1)](1, 2) = -1.0;
  p[para_slot(-1)](2, 1) = 1.0;
  p[para_slot(-1)](3, 0) = 1.0;

  p[para_slot(0)](0, 3) = kImag;
  p[para_slot(0)](1, 2) = -kImag;
  p[para_slot(0)](2, 1) = kImag;
  p[para_slot(0)](3, 0) = -kImag;

  p[para_slot(1)](0, 1) = kImag;
  p[para_slot(1)](1, 0) = -kImag;
  p[para_slot(1)](2, 3) = -kImag;
  p[para_slot(1)](3, 2) = kImag;

  p[para_slot(2)](0, 2) = kImag;
  p[para_slot(2)](1, 3) = kImag;
  p[para_slot(2)](2, 0) = -kImag;
  p[para_slot(2)](3, 1) = -kImag;

  p[para_slot(3)](0, 1) = -1.0;
  p[para_slot(3)](1, 0) = 1.0;
  p[para_slot(3)](2, 3) = -1.0;
  p[para_slot(3)](3, 2) = 1.0;

  p[para_slot(4)](0, 2) = -1.0;
  p[para_slot(4)](1, 3) = 1.0;
  p[para_slot(4)](2, 0) = 1.0;
  p[para_slot(4)](3, 1) = -1.0;

  // The partner set is the complementary-index contraction of the first:
  // each entry pairs with the co-factor entry carrying the permutation sign.
  for (int k = 0; k < 6; ++k) {
    Mat4 m = zero4();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        cplx acc = 0.0;
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            int s = eps4(a + 1, b + 1, c + 1, d + 1);
            if (s != 0) acc += static_cast<double>(s) * g.plus[k](c, d);
          }
        m(a, b) = -0.5 * acc;
      }
    g.minus[k] = m;
  }
  return g;
}

OperatorBasis build_operator_basis(const GammaSet& gamma) {
  OperatorBasis b;
  b.gamma = gamma;
  b.unit = Mat4::Identity();

  // Defining pairing: the mixed products of the two spin-matrix sets close on
  // the identity, and the sets are Hermitian conjugates of each other.
  for (int k = 0; k < 6; ++k) {
    for (int l = 0; l < 6; ++l) {
      Mat4 anti = gamma.plus[k] * gamma.minus[l] + gamma.plus[l] * gamma.minus[k];
      Mat4 expect = (k == l) ? Mat4(2.0 * Mat4::Identity()) : Mat4(Mat4::Zero());
      if ((anti - expect).cwiseAbs().maxCoeff() > tol::algebra) {
        std::ostringstream os;
        os << "spin-matrix pairing fails at slots (" << k << ", " << l << ")";
        throw GammaInvariantViolation(os.str());
      }
    }
    if ((gamma.plus[k].adjoint() - gamma.minus[k]).cwiseAbs().maxCoeff() >
        tol::algebra)
      throw GammaInvariantViolation("spin-matrix sets are not mutual adjoints");
  }

  for (int k = 0; k < 6; ++k) b.para[k] = -gamma.plus[para_slot(0)] * gamma.minus[k];

  for (int m = 0; m < 15; ++m) {
    const auto [m1, m2] = kBipPairs[m];
    const Mat4& c1 = b.para[para_slot(m1)];
    const Mat4& c2 = b.para[para_slot(m2)];
    b.bip[m] = 0.5 * (c1.adjoint() * c2 - c2.adjoint() * c1);
    b.bip_dag[m] = b.bip[m].adjoint();
  }

  const Mat4& c1 = b.para[para_slot(1)];
  const Mat4& c2 = b.para[para_slot(2)];
  const Mat4& c3 = b.para[para_slot(3)];
  const Mat4& c4 = b.para[para_slot(4)];
  b.a1 = 0.5 * (c2 - kImag * c1);
  b.a1d = -0.5 * (c2 + kImag * c1);
  b.a2 = 0.5 * (c4 - kImag * c3);
  b.a2d = -0.5 * (c4 + kImag * c3);
  b.n1 = b.a1d * b.a1;
  b.n2 = b.a2d * b.a2;

  const Mat4& i4 = b.unit;
  b.monomial[0] = i4;
  b.monomial[1] = b.a1d;
  b.monomial[2] = b.a2d;
  b.monomial[3] = b.a1;
  b.monomial[4] = b.a2;
  b.monomial[5] = b.a1d * b.a2d;
  b.monomial[6] = b.a1d * b.a1;
  b.monomial[7] = b.a1d * b.a2;
  b.monomial[8] = b.a2d * b.a1;
  b.monomial[9] = b.a2d * b.a2;
  b.monomial[10] = b.a1 * b.a2;
  b.monomial[11] = b.a1d * b.a2d * b.a1;
  b.monomial[12] = b.a1d * b.a2d * b.a2;
  b.monomial[13] = b.a1d * b.a1 * b.a2;
  b.monomial[14] = b.a2d * b.a1 * b.a2;
  b.monomial[15] = b.a1d * b.a2d * b.a1 * b.a2;

  Eigen::Matrix<cplx, 16, 16> span;
  for (int j = 0; j < 16; ++j)
    span.col(j) = Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(
        b.monomial[j].data());
  b.monomial_solver.compute(span);
  if (b.monomial_solver.rank() != 16)
    throw GammaInvariantViolation("fermion monomials fail to span 4x4 space");

  // Vacuum: the common kernel of both annihilators, with a deterministic
  // phase convention (largest component made real positive).
  Eigen::Matrix<cplx, 8, 4> stack;
  stack.topRows<4>() = b.a1;
  stack.bottomRows<4>() = b.a2;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(stack);
  lu.setThreshold(1e-10);
  Eigen::MatrixXcd kernel = lu.kernel();
  if (kernel.cols() != 1)
    throw GammaInvariantViolation("annihilator kernel is not one-dimensional");
  Vec4 vac = kernel.col(0);
  int top = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(vac(i)) > std::abs(vac(top))) top = i;
  vac /= (vac(top) / std::abs(vac(top)));
  vac.normalize();
  b.vacuum = vac;

  b.state[para_slot(-1)] = b.a2d * b.a1d * vac;
  b.state[para_slot(0)] = vac;
  b.state[para_slot(1)] = b.a1d * vac;
  b.state[para_slot(2)] = b.a2d * vac;
  return b;
}

BipExpansion bip_product_structure(int p, int q) {
  const auto [p1, p2] = kBipPairs[p];
  const auto [q1, q2] = kBipPairs[q];
  BipExpansion out;
  out.scalar = 0.0;
  out.bip.fill(0.0);

  if (p == q) out.scalar += -1.0;
  if (p1 == q2 && p2 == q1) out.scalar += 1.0;

  auto add_pair = [&out](int a, int bb, double coeff) {
    SignedBip sb = bip_lookup(a, bb);
    if (sb.sign != 0.0) out.bip[sb.position] += coeff * sb.sign;
  };
  if (p1 == q1) add_pair(p2, q2, -1.0);
  if (p2 == q2) add_pair(p1, q1, -1.0);
  if (p1 == q2) add_pair(p2, q1, 1.0);
  if (p2 == q1) add_pair(p1, q2, 1.0);

  for (int n = 0; n < 15; ++n) {
    const auto [n1, n2] = kBipPairs[n];
    int s = eps6(p1, p2, q1, q2, n1, n2);
    if (s != 0) out.bip[n] += -kImag * static_cast<double>(s);
  }
  return out;
}

BipExpansion bip_commutator_structure(int p, int q) {
  const auto [p1, p2] = kBipPairs[p];
  const auto [q1, q2] = kBipPairs[q];
  BipExpansion out;
  out.scalar = 0.0;
  out.bip.fill(0.0);
  auto add_pair = [&out](int a, int bb, double coeff) {
    SignedBip sb = bip_lookup(a, bb);
    if (sb.sign != 0.0) out.bip[sb.position] += coeff * sb.sign;
  };
  if (p1 == q1) add_pair(p2, q2, -2.0);
  if (p2 == q2) add_pair(p1, q1, -2.0);
  if (p1 == q2) add_pair(p2, q1, 2.0);
  if (p2 == q1) add_pair(p1, q2, 2.0);
  return out;
}

BipExpansion bip_anticommutator_structure(int p, int q) {
  const auto [p1, p2] = kBipPairs[p];
  const auto [q1, q2] = kBipPairs[q];
  BipExpansion out;
  out.scalar = 0.0;
  out.bip.fill(0.0);
  if (p == q) out.scalar += -2.0;
  if (p1 == q2 && p2 == q1) out.scalar += 2.0;
  for (int n = 0; n < 15; ++n) {
    const auto [n1, n2] = kBipPairs[n];
    int s = eps6(p1, p2, q1, q2, n1, n2);
    if (s != 0) out.bip[n] += -2.0 * kImag * static_cast<double>(s);
  }
  return out;
}

namespace {

// Trace of the even alternating word c_{k1}^dag c_{k2} c_{k3}^dag ... / 4,
// from the pairing combinatorics: sum over perfect matchings that pair a
// daggered slot with a plain slot, Kronecker delta per pair, alternating
// signs; six letters add the totally antisymmetric volume term.
cplx even_trace_quarter(const std::vector<int>& k) {
  if (k.size() == 2) return k[0] == k[1] ? 1.0 : 0.0;
  if (k.size() == 4) {
    auto d = [&](int i, int j) { return k[i] == k[j] ? 1.0 : 0.0; };
    return d(0, 1) * d(2, 3) - d(0, 2) * d(1, 3) + d(0, 3) * d(1, 2);
  }
  if (k.size() == 6) {
    auto d = [&](int i, int j) { return k[i] == k[j] ? 1.0 : 0.0; };
    cplx delta3 =
        d(0, 1) * d(2, 3) * d(4, 5) - d(0, 1) * d(2, 4) * d(3, 5) +
        d(0, 1) * d(2, 5) * d(3, 4) - d(0, 2) * d(1, 3) * d(4, 5) +
        d(0, 2) * d(1, 4) * d(3, 5) - d(0, 2) * d(1, 5) * d(3, 4) +
        d(0, 3) * d(1, 2) * d(4, 5) - d(0, 3) * d(1, 4) * d(2, 5) +
        d(0, 3) * d(1, 5) * d(2, 4) - d(0, 4) * d(1, 2) * d(3, 5) +
        d(0, 4) * d(1, 3) * d(2, 5) - d(0, 4) * d(1, 5) * d(2, 3) +
        d(0, 5) * d(1, 2) * d(3, 4) - d(0, 5) * d(1, 3) * d(2, 4) +
        d(0, 5) * d(1, 4) * d(2, 3);
    cplx vol = kImag * static_cast<double>(
                           eps6(k[0], k[1], k[2], k[3], k[4], k[5]));
    return vol + delta3;
  }
  throw UnsupportedPattern("even word length must be 2, 4 or 6");
}

}  // namespace

cplx closed_trace(const std::vector<int>& labels,
                  const std::vector<bool>& daggered) {
  if (labels.size() != daggered.size())
    throw UnsupportedPattern("label and dagger lists differ in length");
  if (labels.empty() || labels.size() > 6)
    throw UnsupportedPattern("word length must be between 1 and 6");
  for (int m : labels)
    if (m < -1 || m > 4)
      throw UnsupportedPattern("labels must lie in -1..4");

  const bool even = labels.size() % 2 == 0;
  for (std::size_t i = 0; i < daggered.size(); ++i) {
    bool want = even ? (i % 2 == 0) : (i % 2 == 1);
    if (daggered[i] != want)
      throw UnsupportedPattern(
          "word must alternate conjugation, daggered first when even, "
          "plain first when odd");
  }

  if (even) return 4.0 * even_trace_quarter(labels);

  // An odd word starting plain equals minus the even word obtained by
  // prepending the unit direction, because c_0^dag = -1.
  std::vector<int> extended;
  extended.reserve(labels.size() + 1);
  extended.push_back(0);
  extended.insert(extended.end(), labels.begin(), labels.end());
  return -4.0 * even_trace_quarter(extended);
}

QuaternionPair quaternion_pair(const OperatorBasis& b, QuaternionVariant v) {
  const Mat4& c1 = b.para[para_slot(1)];
  const Mat4& c2 = b.para[para_slot(2)];
  const Mat4& c3 = b.para[para_slot(3)];
  const Mat4& c4 = b.para[para_slot(4)];
  const double r = 1.0 / std::sqrt(2.0);
  QuaternionPair q;
  if (v == QuaternionVariant::symmetric) {
    q.set1 = {Mat4(r * (c1 + kImag * c2 * c3 * c4)),
              Mat4(r * (c2 - kImag * c1 * c3 * c4)), Mat4(c1 * c2)};
    q.set2 = {Mat4(r * (c3 - kImag * c1 * c2 * c4)),
              Mat4(r * (c4 + kImag * c1 * c2 * c3)), Mat4(c3 * c4)};
  } else {
    q.set1 = {c1, c2, Mat4(c1 * c2)};
    q.set2 = {Mat4(kImag * c1 * c2 * c3), Mat4(kImag * c1 * c2 * c4),
              Mat4(c3 * c4)};
  }
  return q;
}

cplx unit_coefficient(const Mat4& x) { return x.trace() / 4.0; }

std::array<cplx, 15> bip_coefficients(const OperatorBasis& basis,
                                      const Mat4& x) {
  std::array<cplx, 15> out;
  for (int n = 0; n < 15; ++n) out[n] = (basis.bip_dag[n] * x).trace() / 4.0;
  return out;
}

std::array<cplx, 16> monomial_coefficients(const OperatorBasis& basis,
                                           const Mat4& x) {
  Eigen::Matrix<cplx, 16, 1> rhs =
      Eigen::Map<const Eigen::Matrix<cplx, 16, 1>>(x.data());
  Eigen::Matrix<cplx, 16, 1> sol = basis.monomial_solver.solve(rhs);
  std::array<cplx, 16> out;
  for (int i = 0; i < 16; ++i) out[i] = sol(i);
  return out;
}

}  // namespace bvlab
