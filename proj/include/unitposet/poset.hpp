#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unitposet {

/// A finite poset {p_0, ..., p_{t-1}} stored as its strict order relation.
///
/// Every value satisfies three invariants: the relation is irreflexive,
/// transitive, and admissibly enumerated (p_i < p_j implies i < j). All
/// indices in the C++ API are 0-based; the JSON and CLI layers use 1-based
/// indices.
class Poset {
 public:
  Poset() = default;

  static Poset chain(int t);
  static Poset antichain(int t);

  /// Builds a poset from a full strict-order matrix that already satisfies
  /// the invariants. Throws CycleError / std::invalid_argument otherwise.
  static Poset from_order_matrix(int t, std::vector<std::uint8_t> strict);

  int size() const { return t_; }
  bool precedes(int i, int j) const { return order_[static_cast<std::size_t>(i * t_ + j)] != 0; }
  bool precedes_or_equal(int i, int j) const { return i == j || precedes(i, j); }
  bool comparable(int i, int j) const { return i == j || precedes(i, j) || precedes(j, i); }

  /// All strict pairs (i, j) with p_i < p_j in lexicographic order.
  std::vector<std::pair<int, int>> relations() const;
  /// Covering pairs only (Hasse diagram edges).
  std::vector<std::pair<int, int>> cover_relations() const;

  /// The subposet induced on `elements` (kept in the given order, which must
  /// itself be admissible, e.g. increasing).
  Poset induced(std::span<const int> elements) const;
  /// Drops the first `count` elements.
  Poset drop_front(int count) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int t_ = 0;
  std::vector<std::uint8_t> order_;
};

/// Result of ingesting arbitrary relations: the poset plus the relabeling
/// that made the enumeration admissible. `new_index[old] = new`.
struct IngestedPoset {
  Poset poset;
  std::vector<int> new_index;
  bool reindexed = false;
};

/// Transitive closure of `pairs` (0-based, meaning p_i < p_j). When the
/// closure violates i < j, the elements are renumbered by a stable
/// topological sort (smallest available original index first).
IngestedPoset from_relations(int t, std::span<const std::pair<int, int>> pairs);

bool is_chain(const Poset& p);

/// Blocks P_1 < P_2 < ... < P_s of a semichain; each block has one or two
/// incomparable elements (sorted increasingly).
struct SemichainBlocks {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const SemichainBlocks&, const SemichainBlocks&) = default;
};

std::optional<SemichainBlocks> semichain_blocks(const Poset& p);
/// Rebuilds the unique order described by a block sequence.
Poset poset_from_blocks(const SemichainBlocks& b);

Poset disjoint_union(const Poset& a, const Poset& b);

/// Injective map from q's elements into p's that preserves and reflects the
/// strict order, found by backtracking. `embedding[x]` is the image of q_x.
std::optional<std::vector<int>> find_full_subposet(const Poset& p, const Poset& q);
inline bool contains_full_subposet(const Poset& p, const Poset& q) {
  return find_full_subposet(p, q).has_value();
}

/// Lexicographically first (i, j, k) with i < k and p_j incomparable to both
/// p_i and p_k. Exists iff p is not a semichain.
std::optional<std::array<int, 3>> find_nonsemichain_triple(const Poset& p);

enum class RepType { RepresentationFinite, Tame, Wild };
std::string to_string(RepType t);

struct UnitaryClass {
  RepType type = RepType::RepresentationFinite;
  std::optional<SemichainBlocks> blocks;      // set unless Wild
  std::optional<std::array<int, 3>> triple;   // set iff Wild
};

UnitaryClass classify_unitary(const Poset& p);

/// All posets on t elements whose enumeration is admissible (every
/// isomorphism class appears at least once). 2^(t(t-1)/2) candidates.
std::vector<Poset> enumerate_natural_posets(int t);

/// All strict partial orders on t labeled elements, each relabeled through
/// from_relations. Returns the (possibly reindexed) ingests. 3^(t(t-1)/2)
/// candidates, so keep t small.
std::vector<IngestedPoset> enumerate_labeled_posets(int t);

}  // namespace unitposet
