#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitposet/cxla.hpp"
#include "unitposet/poset.hpp"

namespace unitposet {

/// Block matrix [A_1 | ... | A_t] of size m x (n_1, ..., n_t) over a poset.
/// Zero-width strips and zero-row matrices are ordinary values.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  /// Throws DimensionMismatch unless there is one strip per element and all
  /// strips have `rows` rows.
  BlockMatrix(Poset poset, int rows, std::vector<CMatrix> strips);

  /// The m x 0 matrix with all strips empty.
  static BlockMatrix empty(Poset poset, int rows = 0);
  /// Splits a full m x sum(n_i) matrix into strips.
  static BlockMatrix from_full(Poset poset, const CMatrix& full, std::span<const int> widths);

  const Poset& poset() const { return poset_; }
  int rows() const { return rows_; }
  int strip_count() const { return static_cast<int>(strips_.size()); }
  const CMatrix& strip(int i) const { return strips_[static_cast<std::size_t>(i)]; }
  const std::vector<CMatrix>& strips() const { return strips_; }
  std::vector<int> widths() const;
  int total_width() const;
  /// Column offset of strip i inside full().
  int offset(int i) const;
  CMatrix full() const;

 private:
  Poset poset_;
  int rows_ = 0;
  std::vector<CMatrix> strips_;
};

/// Indecomposable block matrices over a semichain. k is 0-based.
struct Summand {
  enum class Kind { E, F, G, H, L };
  Kind kind = Kind::F;
  int k = 0;
  double sigma = 0.0;  // G only

  static Summand E(int k) { return {Kind::E, k, 0.0}; }
  static Summand F() { return {Kind::F, 0, 0.0}; }
  static Summand G(int k, double sigma) { return {Kind::G, k, sigma}; }
  static Summand H(int k) { return {Kind::H, k, 0.0}; }
  static Summand L(int k) { return {Kind::L, k, 0.0}; }

  int rows() const;
  friend bool operator==(const Summand&, const Summand&) = default;
};

std::string to_string(const Summand& s);

/// Throws InvalidSummand unless s makes sense over p (index range; G and H
/// need p_k not below p_{k+1}; sigma > 0).
void validate_summand(const Summand& s, const Poset& p);

BlockMatrix summand_matrix(const Summand& s, const Poset& p);

/// Strip-wise diagonal concatenation. Throws PosetMismatch.
BlockMatrix block_direct_sum(const BlockMatrix& a, const BlockMatrix& b);
/// Block direct sum of a list of summands (the empty sum is 0 x (0..0)).
BlockMatrix assemble(std::span<const Summand> summands, const Poset& p);

/// R * A * S, re-split into strips. R must be unitary (1e-9), S square of
/// size sum(n_i), nonsingular, and its block (i, j) must be exactly zero
/// whenever i != j and p_i is not below p_j. Throws NotUnitary,
/// NotAdmissible, Singular or DimensionMismatch.
BlockMatrix admissible_transform(const BlockMatrix& a, const CMatrix& r, const CMatrix& s);

/// True iff s has the exact zero pattern of an admissible column transform
/// for the given widths.
bool has_admissible_pattern(const Poset& p, std::span<const int> widths, const CMatrix& s);

struct AdmissiblePair {
  CMatrix r;
  CMatrix s;
};

/// Haar R plus a random admissible S: each diagonal block is
/// U diag(d) V with Haar U, V and d uniform in [0.5, 2]; each allowed
/// off-diagonal block is complex Gaussian scaled by 0.3.
AdmissiblePair random_admissible(const Poset& p, int rows, std::span<const int> widths,
                                 std::uint64_t seed);

}  // namespace unitposet
