#include "unitposet/cxla.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "unitposet/errors.hpp"

namespace unitposet {

CMatrix SvdResult::sigma_matrix() const {
  CMatrix s = CMatrix::Zero(u.cols(), v.rows());
  for (std::size_t i = 0; i < sigma.size(); ++i) s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = sigma[i];
  return s;
}

SvdResult svd(const CMatrix& m) {
  SvdResult r;
  const auto rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) {
    r.u = CMatrix::Identity(rows, rows);
    r.v = CMatrix::Identity(cols, cols);
    return r;
  }
  if (!m.allFinite()) throw ConvergenceFailure("matrix has non-finite entries");
  Eigen::JacobiSVD<CMatrix> jacobi(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (jacobi.info() != Eigen::Success) throw ConvergenceFailure("Jacobi SVD did not converge");
  r.u = jacobi.matrixU();
  r.v = jacobi.matrixV().adjoint();
  const auto& s = jacobi.singularValues();
  r.sigma.assign(s.data(), s.data() + s.size());
  if (!r.u.allFinite() || !r.v.allFinite() || !s.allFinite())
    throw ConvergenceFailure("SVD produced non-finite factors");
  return r;
}

int rank_above(const std::vector<double>& sigma, double threshold) {
  return static_cast<int>(std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > threshold; }));
}

int rank_tol(const CMatrix& m, double tol) {
  const auto sigma = singular_values(m);
  if (sigma.empty() || sigma.front() == 0.0) return rank_above(sigma, 1e-12);
  return rank_above(sigma, tol * sigma.front());
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw NonSquare("is_unitary needs a square matrix");
  return (m * m.adjoint() - CMatrix::Identity(m.rows(), m.rows())).norm() <= tol;
}

CMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  return g;
}

CMatrix random_unitary(int n, std::mt19937_64& rng) {
  if (n == 0) return CMatrix(0, 0);
  CMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    cplx d = r(i, i);
    cplx phase = std::abs(d) > 0 ? d / std::abs(d) : cplx(1.0);
    q.col(i) *= phase;
  }
  return q;
}

CMatrix random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_unitary(n, rng);
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix range_basis(const CMatrix& m, double threshold) {
  auto d = svd(m);
  return d.u.leftCols(rank_above(d.sigma, threshold));
}

CMatrix complement_basis(const CMatrix& m, double threshold) {
  auto d = svd(m);
  const int r = rank_above(d.sigma, threshold);
  return d.u.rightCols(m.rows() - r);
}

double spectral_norm(const CMatrix& m) {
  auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

}  // namespace unitposet
