#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace unitposet {

using cplx = std::complex<double>;
/// Dense complex matrix. 0 x n and n x 0 shapes are valid values.
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kDefaultSigmaTol = 1e-6;

/// M = u * diag(sigma) * v with u, v unitary and v applied on the right as
/// is (not its adjoint). sigma is non-increasing, length min(rows, cols).
struct SvdResult {
  CMatrix u;
  std::vector<double> sigma;
  CMatrix v;

  /// The rectangular rows x cols matrix diag(sigma) + 0.
  CMatrix sigma_matrix() const;
};

/// Full SVD. Throws ConvergenceFailure on non-finite input or output.
SvdResult svd(const CMatrix& m);

inline std::vector<double> singular_values(const CMatrix& m) { return svd(m).sigma; }

/// Number of singular values above tol * sigma_1; when sigma_1 == 0 the
/// absolute floor 1e-12 applies (so the rank is 0).
int rank_tol(const CMatrix& m, double tol = kDefaultRankTol);

/// Number of singular values strictly above an absolute threshold.
int rank_above(const std::vector<double>& sigma, double threshold);

/// ||M M^* - I||_F <= tol. Throws NonSquare on rectangular input.
bool is_unitary(const CMatrix& m, double tol);

/// Haar-distributed unitary: complex Gaussian matrix, Householder QR, and
/// the phase of diag(R) moved into Q. Bit-identical per seed.
CMatrix random_unitary(int n, std::uint64_t seed);
CMatrix random_unitary(int n, std::mt19937_64& rng);

/// Matrix with i.i.d. standard complex Gaussian entries.
CMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng);

/// Block-diagonal a (+) b.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// Orthonormal basis (as columns) of the column space of m, rank decided by
/// an absolute singular-value threshold.
CMatrix range_basis(const CMatrix& m, double threshold);
/// Orthonormal basis of the orthogonal complement of the column space.
CMatrix complement_basis(const CMatrix& m, double threshold);

/// Spectral norm (largest singular value; 0 for empty matrices).
double spectral_norm(const CMatrix& m);

}  // namespace unitposet
