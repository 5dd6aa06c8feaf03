#pragma once

#include <utility>
#include <vector>

#include "unitposet/blockmat.hpp"
#include "unitposet/cxla.hpp"
#include "unitposet/poset.hpp"

namespace unitposet {

/// Multiset of indecomposable summands of a block matrix over a semichain
/// with t elements. Per-k vectors have length t (0-based k).
struct Decomposition {
  std::vector<int> e, h, l;
  int f = 0;
  /// (k, sigma) pairs, sorted by k, sigma non-increasing within each k.
  std::vector<std::pair<int, double>> g;

  static Decomposition zero(int t);

  int t() const { return static_cast<int>(e.size()); }
  /// Sum of the summands' row counts.
  int rows() const;
  /// Sum of the summands' widths, strip by strip.
  std::vector<int> widths() const;
  /// The summands, each repeated by its multiplicity.
  std::vector<Summand> summands() const;
  /// Restores the G ordering invariant.
  void normalize();
};

/// Chain reduction: per stage, SVD of the current strip gives r copies of
/// E_k and (width - r) copies of L_k; the rows orthogonal to the strip's
/// column space carry the rest. Leftover rows are F. Throws NotAChain.
Decomposition canonicalize_chain(const BlockMatrix& a, double tol = kDefaultRankTol);

/// Semichain reduction, one block at a time. Throws NotASemichain.
///
/// Rank decisions for a strip use `tol` times the spectral norm of that
/// strip in the input. The singular values of the corner block (the only
/// continuous invariants) are dimensionless; a value counts as nonzero when
/// it exceeds tol * max(1, largest corner singular value).
Decomposition canonicalize_semichain(const BlockMatrix& a, double tol = kDefaultRankTol);

/// Dispatches on the poset. Throws WildPoset for non-semichains.
Decomposition decompose(const BlockMatrix& a, double tol = kDefaultRankTol);

/// Block direct sum of the reported summands.
BlockMatrix rebuild(const Decomposition& d, const Poset& p);

/// Multiset equality. G lists are compared pairwise after sorting (greedy
/// matching) with an absolute sigma tolerance. L counts are ignored unless
/// `strict`.
bool same_decomposition(const Decomposition& a, const Decomposition& b,
                        double sigma_tol = kDefaultSigmaTol, bool strict = false);

/// Weak unitary P-equivalence (strict equivalence when `strict`, which also
/// requires equal widths). Throws PosetMismatch or WildPoset.
bool is_equivalent(const BlockMatrix& a, const BlockMatrix& b, double rank_tol = kDefaultRankTol,
                   double sigma_tol = kDefaultSigmaTol, bool strict = false);

}  // namespace unitposet
