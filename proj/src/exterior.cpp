#include "bvlab/exterior.hpp"

#include <algorithm>
#include <cmath>

namespace bvlab {

namespace {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
Scalar det_rec(const MatX<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar acc(0);
  double sign = 1.0;
  for (int j = 0; j < n; ++j, sign = -sign) {
    MatX<Scalar> sub(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    acc += Scalar(sign) * m(0, j) * det_rec<Scalar>(sub);
  }
  return acc;
}

template <typename Scalar>
MatX<Scalar> submatrix(const MatX<Scalar>& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  MatX<Scalar> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = m(rows[i], cols[j]);
  return out;
}

template <typename Scalar>
MatX<Scalar> compound_impl(const MatX<Scalar>& m, int k) {
  if (m.rows() != m.cols()) throw BadOrder("compound needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (k < 0 || k > n) throw BadOrder("compound order must lie in 0..n");
  auto subsets = ksubsets(n, k);
  const int r = static_cast<int>(subsets.size());
  MatX<Scalar> out(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out(i, j) = det_rec<Scalar>(submatrix(m, subsets[i], subsets[j]));
  return out;
}

template <typename Scalar>
MatX<Scalar> supplementary_impl(const MatX<Scalar>& m, int k) {
  if (m.rows() != m.cols())
    throw BadOrder("supplementary compound needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (k < 0 || k > n)
    throw BadOrder("supplementary compound order must lie in 0..n");
  auto subsets = ksubsets(n, k);
  const int r = static_cast<int>(subsets.size());
  MatX<Scalar> out(r, r);
  for (int i = 0; i < r; ++i) {
    const auto& row_set = subsets[i];
    const int si = subset_complement_sign(row_set, n);
    const auto row_comp = subset_complement(row_set, n);
    for (int j = 0; j < r; ++j) {
      const auto& col_set = subsets[j];
      const int sj = subset_complement_sign(col_set, n);
      const auto col_comp = subset_complement(col_set, n);
      // Entry (row_set, col_set) carries the complementary minor with the
      // roles of rows and columns exchanged, so that the product with the
      // plain compound telescopes into Laplace expansions of det(m).
      out(i, j) = Scalar(static_cast<double>(si * sj)) *
                  det_rec<Scalar>(submatrix(m, col_comp, row_comp));
    }
  }
  return out;
}

template <typename Scalar>
MatX<Scalar> star_impl(const MatX<Scalar>& x, int n, int k) {
  auto subsets = ksubsets(n, k);
  if (x.rows() != x.cols() ||
      x.rows() != static_cast<Eigen::Index>(subsets.size()))
    throw BadOrder("matrix shape does not match the subset count for (n, k)");
  auto dual_subsets = ksubsets(n, n - k);
  const int r = static_cast<int>(dual_subsets.size());

  auto position = [&subsets](const std::vector<int>& s) {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
    return static_cast<int>(it - subsets.begin());
  };

  MatX<Scalar> out(r, r);
  for (int i = 0; i < r; ++i) {
    const auto pi = subset_complement(dual_subsets[i], n);
    const int si = subset_complement_sign(dual_subsets[i], n);
    for (int j = 0; j < r; ++j) {
      const auto pj = subset_complement(dual_subsets[j], n);
      const int sj = subset_complement_sign(dual_subsets[j], n);
      out(i, j) =
          Scalar(static_cast<double>(si * sj)) * x(position(pi), position(pj));
    }
  }
  return out;
}

template <typename Scalar>
Scalar pf_rec(const MatX<Scalar>& a) {
  const int n = static_cast<int>(a.rows());
  if (n % 2 == 1) return Scalar(0);
  if (n == 0) return Scalar(1);
  if (n == 2) return a(0, 1);
  Scalar acc(0);
  double sign = 1.0;
  for (int j = 1; j < n; ++j, sign = -sign) {
    std::vector<int> keep;
    keep.reserve(n - 2);
    for (int t = 1; t < n; ++t)
      if (t != j) keep.push_back(t);
    acc += Scalar(sign) * a(0, j) * pf_rec<Scalar>(submatrix(a, keep, keep));
  }
  return acc;
}

template <typename Scalar>
void require_antisymmetric(const MatX<Scalar>& a) {
  if (a.rows() != a.cols())
    throw NotAntisymmetric("matrix is not square");
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw NotAntisymmetric("matrix is not antisymmetric");
}

template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> pfaffian_compound_impl(
    const Eigen::Matrix<Scalar, 6, 6>& t) {
  MatX<Scalar> dyn = t;
  require_antisymmetric<Scalar>(dyn);
  Eigen::Matrix<Scalar, 6, 6> out;
  out.setZero();
  for (int k = 0; k < 6; ++k)
    for (int l = 0; l < 6; ++l) {
      Scalar acc(0);
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          for (int c = 0; c < 6; ++c)
            for (int d = 0; d < 6; ++d) {
              int s = eps6(para_label(k), para_label(l), para_label(a),
                           para_label(b), para_label(c), para_label(d));
              if (s != 0)
                acc += Scalar(static_cast<double>(s)) * t(a, b) * t(c, d);
            }
      out(k, l) = Scalar(-0.125) * acc;
    }
  return out;
}

}  // namespace

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return static_cast<int>(acc);
}

std::vector<std::vector<int>> ksubsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {std::vector<int>{}};
  return out;
}

std::vector<int> subset_complement(const std::vector<int>& s, int n) {
  std::vector<int> out;
  out.reserve(n - s.size());
  std::size_t pos = 0;
  for (int v = 0; v < n; ++v) {
    if (pos < s.size() && s[pos] == v) {
      ++pos;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

int subset_complement_sign(const std::vector<int>& s, int n) {
  std::vector<int> arranged(s);
  const auto comp = subset_complement(s, n);
  arranged.insert(arranged.end(), comp.begin(), comp.end());
  int sign = 1;
  for (std::size_t i = 0; i < arranged.size(); ++i)
    for (std::size_t j = i + 1; j < arranged.size(); ++j)
      if (arranged[i] > arranged[j]) sign = -sign;
  return sign;
}

double det_minor_expansion(const Eigen::MatrixXd& m) {
  return det_rec<double>(m);
}
cplx det_minor_expansion(const Eigen::MatrixXcd& m) { return det_rec<cplx>(m); }

Eigen::MatrixXd compound(const Eigen::MatrixXd& m, int k) {
  return compound_impl<double>(m, k);
}
Eigen::MatrixXcd compound(const Eigen::MatrixXcd& m, int k) {
  return compound_impl<cplx>(m, k);
}

Eigen::MatrixXd supplementary_compound(const Eigen::MatrixXd& m, int k) {
  return supplementary_impl<double>(m, k);
}
Eigen::MatrixXcd supplementary_compound(const Eigen::MatrixXcd& m, int k) {
  return supplementary_impl<cplx>(m, k);
}

Eigen::MatrixXd star(const Eigen::MatrixXd& x, int n, int k) {
  return star_impl<double>(x, n, k);
}
Eigen::MatrixXcd star(const Eigen::MatrixXcd& x, int n, int k) {
  return star_impl<cplx>(x, n, k);
}

double pfaffian(const Eigen::MatrixXd& a) {
  require_antisymmetric<double>(a);
  return pf_rec<double>(a);
}
cplx pfaffian(const Eigen::MatrixXcd& a) {
  require_antisymmetric<cplx>(a);
  return pf_rec<cplx>(a);
}

Mat6d pfaffian_compound(const Mat6d& t) {
  return pfaffian_compound_impl<double>(t);
}
Mat6c pfaffian_compound(const Mat6c& t) {
  return pfaffian_compound_impl<cplx>(t);
}

}  // namespace bvlab
