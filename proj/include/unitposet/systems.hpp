#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitposet/blockmat.hpp"
#include "unitposet/canon.hpp"
#include "unitposet/cxla.hpp"
#include "unitposet/poset.hpp"

namespace unitposet {

/// A P-system (U_1, ..., U_t) of subspaces of C^m. U_i is the column space
/// of spans[i], an arbitrary (possibly redundant) spanning set.
class SubspaceSystem {
 public:
  SubspaceSystem() = default;
  /// Checks shapes only; see check_inclusions() for the order condition.
  SubspaceSystem(Poset poset, int ambient_dim, std::vector<CMatrix> spans);

  const Poset& poset() const { return poset_; }
  int ambient_dim() const { return m_; }
  const CMatrix& span(int i) const { return spans_[static_cast<std::size_t>(i)]; }
  const std::vector<CMatrix>& spans() const { return spans_; }

  /// dim U_i, decided by rank_tol.
  int dim(int i, double tol = kDefaultRankTol) const;

  /// Throws InclusionViolation unless p_i < p_j implies
  /// ||(I - P_j) spans[i]|| <= tol * ||spans[i]||, P_j the projector onto U_j.
  void check_inclusions(double tol = kDefaultRankTol) const;

  /// The system Q U = (Q U_1, ..., Q U_t) for an m x m matrix Q.
  SubspaceSystem rotated(const CMatrix& q) const;

 private:
  Poset poset_;
  int m_ = 0;
  std::vector<CMatrix> spans_;
};

/// f(A): U_i is spanned by the strips A_j with p_j <= p_i, inside C^m.
SubspaceSystem f_of(const BlockMatrix& a);

/// A block matrix A with f(A) isometric to the system: strip i is an
/// orthonormal basis of the orthogonal complement, inside U_i, of the sum of
/// the U_j with p_j < p_i. Throws InclusionViolation.
BlockMatrix matrix_of(const SubspaceSystem& u, double tol = kDefaultRankTol);

/// U (+) V in C^{m + m'}. Throws PosetMismatch.
SubspaceSystem orth_direct_sum(const SubspaceSystem& u, const SubspaceSystem& v);

/// Indecomposable systems over a semichain. k is 0-based.
struct SystemSummand {
  enum class Kind { Fk, F, Gks, Gk };
  Kind kind = Kind::F;
  int k = 0;
  double sigma = 0.0;

  friend bool operator==(const SystemSummand&, const SystemSummand&) = default;
};

std::string to_string(const SystemSummand& s);

/// F_k = (0..0, C..C) and G_k = (0..0, C, 0, C..C) in C^1, F = (0..0) in
/// C^1, G_{k,sigma} = (0..0, C(1,0), C(sigma,1), C^2..C^2) in C^2.
/// Throws InvalidSummand (non-semichain poset, bad index, or a G variant
/// with p_k < p_{k+1}).
SubspaceSystem system_summand(const SystemSummand& s, const Poset& p);

/// The system summand f(C) of a matrix summand C; L_k has none.
std::optional<SystemSummand> to_system_summand(const Summand& s, const Poset& p);
std::vector<SystemSummand> to_system_summands(const Decomposition& d, const Poset& p);

struct IsometryResult {
  bool isometric = false;
  Decomposition first, second;
  std::vector<SystemSummand> first_summands, second_summands;
};

/// Decides isometry by decomposing matrix_of of both systems and comparing
/// the multisets without L_k terms. Throws PosetMismatch or WildPoset.
IsometryResult isometric(const SubspaceSystem& u, const SubspaceSystem& v,
                         double rank_tol = kDefaultRankTol, double sigma_tol = kDefaultSigmaTol);

}  // namespace unitposet
