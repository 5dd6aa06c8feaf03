#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitposet/poset.hpp"

namespace unitposet {

/// Integral quadratic form q(z) = z^T G z in variables x_0, ..., x_{n-1}.
///
/// G is held exactly as integer numerators over a common denominator
/// d in {1, 2}: G = numerators / d. Tits-type forms have half-integer
/// off-diagonal entries, but q(z) is an integer on every integer vector.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(int n_vars, std::vector<std::int64_t> numerators, std::int64_t denominator);

  int n_vars() const { return n_; }
  std::int64_t denominator() const { return den_; }
  std::int64_t numerator(int i, int j) const { return num_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const std::int64_t> numerators() const { return num_; }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/// u_P(x) = x_0^2 + 2(sum x_i^2 + sum_{p_i<p_j} x_i x_j - x_0 sum x_i).
QuadraticForm u_form(const Poset& p);
/// q_P(x) = x_0^2 + sum x_i^2 + sum_{p_i<p_j} x_i x_j - x_0 sum x_i.
QuadraticForm q_form(const Poset& p);

/// Exact z^T G z. Throws DimensionMismatch on a length mismatch and
/// std::overflow_error if the value leaves the 64-bit range.
std::int64_t evaluate(const QuadraticForm& f, std::span<const std::int64_t> z);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };
std::string to_string(Definiteness d);

/// Coefficients e_0 = 1, e_1, ..., e_n of det(xI + N) for the integer
/// numerator matrix N = d*G (e_k is the sum of the k x k principal minors),
/// computed division-free (Berkowitz) in arbitrary precision. Returned as
/// decimal strings since they may exceed 64 bits.
std::vector<std::string> principal_minor_sums(const QuadraticForm& f);

/// Exact classification of the Gram matrix. A real symmetric matrix is PSD
/// iff every e_k >= 0 and PD iff every e_k > 0. For a rational Gram matrix
/// this coincides with the integer-lattice notion: a negative direction is
/// negative on an open cone, which contains integer points, and the kernel
/// is a rational subspace, so it carries nonzero integer null vectors.
/// A form that is not PSD is reported Indefinite (this includes negative
/// (semi)definite forms, which never arise from posets).
Definiteness definiteness(const QuadraticForm& f);

/// Lexicographically first nonzero z in {0..bound}^n (last coordinate
/// varying fastest) with f(z) <= 0. Absence does not certify weak
/// positivity; it only rules out the box.
std::optional<std::vector<std::int64_t>> weak_counterexample(const QuadraticForm& f, int bound);

/// u_P(z) == q_{P+P}(z_0, z_1..z_t, z_1..z_t). Always true; kept as a
/// self-test of both constructions.
bool doubling_identity_check(const Poset& p, std::span<const std::int64_t> z);

/// m^2 + 2 sum n_i^2 + 2 sum_{p_i<p_j} n_i n_j - 2 m sum n_i, the difference
/// between the real parameter counts of (R, S) and of A for a block matrix
/// of size m x (n_1..n_t). Cross-checked against evaluate(u_form(P), ...);
/// throws std::logic_error if they disagree.
std::int64_t param_balance(const Poset& p, std::int64_t m, std::span<const std::int64_t> widths);

}  // namespace unitposet
