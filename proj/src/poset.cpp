#include "unitposet/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "unitposet/errors.hpp"

namespace unitposet {

namespace {

std::size_t at(int t, int i, int j) { return static_cast<std::size_t>(i * t + j); }

// Warshall closure in place.
void close_transitively(int t, std::vector<std::uint8_t>& r) {
  for (int k = 0; k < t; ++k)
    for (int i = 0; i < t; ++i)
      if (r[at(t, i, k)])
        for (int j = 0; j < t; ++j)
          if (r[at(t, k, j)]) r[at(t, i, j)] = 1;
}

}  // namespace

Poset Poset::chain(int t) {
  std::vector<std::uint8_t> r(static_cast<std::size_t>(t * t), 0);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) r[at(t, i, j)] = 1;
  return from_order_matrix(t, std::move(r));
}

Poset Poset::antichain(int t) {
  return from_order_matrix(t, std::vector<std::uint8_t>(static_cast<std::size_t>(t * t), 0));
}

Poset Poset::from_order_matrix(int t, std::vector<std::uint8_t> strict) {
  if (t < 0 || strict.size() != static_cast<std::size_t>(t * t))
    throw std::invalid_argument("order matrix has wrong size");
  for (auto& v : strict) v = v ? 1 : 0;
  for (int i = 0; i < t; ++i) {
    if (strict[at(t, i, i)]) throw CycleError("p_" + std::to_string(i + 1) + " precedes itself");
    for (int j = 0; j < i; ++j)
      if (strict[at(t, i, j)])
        throw std::invalid_argument("enumeration is not admissible");
  }
  for (int i = 0; i < t; ++i)
    for (int k = 0; k < t; ++k)
      if (strict[at(t, i, k)])
        for (int j = 0; j < t; ++j)
          if (strict[at(t, k, j)] && !strict[at(t, i, j)])
            throw std::invalid_argument("order relation is not transitive");
  Poset p;
  p.t_ = t;
  p.order_ = std::move(strict);
  return p;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < t_; ++i)
    for (int j = i + 1; j < t_; ++j)
      if (precedes(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : relations()) {
    bool covered = true;
    for (int k = i + 1; k < j && covered; ++k)
      if (precedes(i, k) && precedes(k, j)) covered = false;
    if (covered) out.emplace_back(i, j);
  }
  return out;
}

Poset Poset::induced(std::span<const int> elements) const {
  const int n = static_cast<int>(elements.size());
  std::vector<std::uint8_t> r(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (precedes(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]))
        r[at(n, a, b)] = 1;
  return from_order_matrix(n, std::move(r));
}

Poset Poset::drop_front(int count) const {
  std::vector<int> keep;
  for (int i = count; i < t_; ++i) keep.push_back(i);
  return induced(keep);
}

IngestedPoset from_relations(int t, std::span<const std::pair<int, int>> pairs) {
  if (t < 0) throw std::invalid_argument("negative element count");
  std::vector<std::uint8_t> r(static_cast<std::size_t>(t * t), 0);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= t || j >= t)
      throw std::out_of_range("relation index out of range");
    r[at(t, i, j)] = 1;
  }
  close_transitively(t, r);
  for (int i = 0; i < t; ++i)
    if (r[at(t, i, i)])
      throw CycleError("relations force p_" + std::to_string(i + 1) + " < p_" +
                       std::to_string(i + 1));

  // Kahn's algorithm, smallest original index first, keeps already
  // admissible enumerations fixed.
  std::vector<int> indegree(static_cast<std::size_t>(t), 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (r[at(t, i, j)]) ++indegree[static_cast<std::size_t>(j)];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < t; ++i)
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push(i);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int j = 0; j < t; ++j)
      if (r[at(t, v, j)] && --indegree[static_cast<std::size_t>(j)] == 0) ready.push(j);
  }

  IngestedPoset out;
  out.new_index.resize(static_cast<std::size_t>(t));
  for (int pos = 0; pos < t; ++pos) {
    out.new_index[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    if (order[static_cast<std::size_t>(pos)] != pos) out.reindexed = true;
  }
  std::vector<std::uint8_t> relabeled(static_cast<std::size_t>(t * t), 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (r[at(t, i, j)])
        relabeled[at(t, out.new_index[static_cast<std::size_t>(i)],
                     out.new_index[static_cast<std::size_t>(j)])] = 1;
  out.poset = Poset::from_order_matrix(t, std::move(relabeled));
  return out;
}

bool is_chain(const Poset& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (!p.precedes(i, i + 1)) return false;
  return true;
}

std::optional<SemichainBlocks> semichain_blocks(const Poset& p) {
  const int t = p.size();
  // Components of the incomparability graph must have at most two vertices.
  std::vector<int> partner(static_cast<std::size_t>(t), -1);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j || p.comparable(i, j)) continue;
      auto& slot = partner[static_cast<std::size_t>(i)];
      if (slot != -1 && slot != j) return std::nullopt;
      slot = j;
    }
  SemichainBlocks sb;
  for (int i = 0; i < t; ++i) {
    int q = partner[static_cast<std::size_t>(i)];
    if (q == -1) sb.blocks.push_back({i});
    else if (q > i) sb.blocks.push_back({i, q});
  }
  // Blocks sorted by their least element; consecutive blocks must be
  // totally ordered element-wise.
  for (std::size_t b = 0; b + 1 < sb.blocks.size(); ++b)
    for (int a : sb.blocks[b])
      for (int c : sb.blocks[b + 1])
        if (!p.precedes(a, c)) return std::nullopt;
  return sb;
}

Poset poset_from_blocks(const SemichainBlocks& b) {
  int t = 0;
  std::vector<int> block_of;
  for (std::size_t k = 0; k < b.blocks.size(); ++k)
    for (int e : b.blocks[k]) {
      t = std::max(t, e + 1);
      if (static_cast<int>(block_of.size()) <= e) block_of.resize(static_cast<std::size_t>(e + 1), -1);
      block_of[static_cast<std::size_t>(e)] = static_cast<int>(k);
    }
  std::vector<std::uint8_t> r(static_cast<std::size_t>(t * t), 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (block_of[static_cast<std::size_t>(i)] < block_of[static_cast<std::size_t>(j)])
        r[at(t, i, j)] = 1;
  return Poset::from_order_matrix(t, std::move(r));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  const int ta = a.size(), t = a.size() + b.size();
  std::vector<std::uint8_t> r(static_cast<std::size_t>(t * t), 0);
  for (auto [i, j] : a.relations()) r[at(t, i, j)] = 1;
  for (auto [i, j] : b.relations()) r[at(t, ta + i, ta + j)] = 1;
  return Poset::from_order_matrix(t, std::move(r));
}

std::optional<std::vector<int>> find_full_subposet(const Poset& p, const Poset& q) {
  const int n = q.size(), t = p.size();
  if (n > t) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(t), 0);

  std::function<bool(int)> place = [&](int x) -> bool {
    if (x == n) return true;
    for (int v = 0; v < t; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        int w = image[static_cast<std::size_t>(y)];
        ok = q.precedes(x, y) == p.precedes(v, w) && q.precedes(y, x) == p.precedes(w, v);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(x)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      if (place(x + 1)) return true;
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

std::optional<std::array<int, 3>> find_nonsemichain_triple(const Poset& p) {
  const int t = p.size();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (j == i || p.comparable(i, j)) continue;
      for (int k = i + 1; k < t; ++k)
        if (k != j && !p.comparable(j, k)) return std::array<int, 3>{i, j, k};
    }
  return std::nullopt;
}

std::string to_string(RepType t) {
  switch (t) {
    case RepType::RepresentationFinite: return "FINITE";
    case RepType::Tame: return "TAME";
    case RepType::Wild: return "WILD";
  }
  return "?";
}

UnitaryClass classify_unitary(const Poset& p) {
  UnitaryClass c;
  c.blocks = semichain_blocks(p);
  if (!c.blocks) {
    c.type = RepType::Wild;
    c.triple = find_nonsemichain_triple(p);
  } else {
    c.type = is_chain(p) ? RepType::RepresentationFinite : RepType::Tame;
  }
  return c;
}

std::vector<Poset> enumerate_natural_posets(int t) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint8_t> r(static_cast<std::size_t>(t * t));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(r.begin(), r.end(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) r[at(t, slots[s].first, slots[s].second)] = 1;
    bool transitive = true;
    for (int i = 0; i < t && transitive; ++i)
      for (int k = i + 1; k < t && transitive; ++k)
        if (r[at(t, i, k)])
          for (int j = k + 1; j < t; ++j)
            if (r[at(t, k, j)] && !r[at(t, i, j)]) { transitive = false; break; }
    if (transitive) out.push_back(Poset::from_order_matrix(t, r));
  }
  return out;
}

std::vector<IngestedPoset> enumerate_labeled_posets(int t) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) slots.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) total *= 3;

  std::vector<IngestedPoset> out;
  std::vector<std::uint8_t> r(static_cast<std::size_t>(t * t));
  std::vector<std::pair<int, int>> pairs;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(r.begin(), r.end(), 0);
    pairs.clear();
    std::uint64_t c = code;
    for (auto [i, j] : slots) {
      auto digit = c % 3;
      c /= 3;
      if (digit == 1) { r[at(t, i, j)] = 1; pairs.emplace_back(i, j); }
      if (digit == 2) { r[at(t, j, i)] = 1; pairs.emplace_back(j, i); }
    }
    bool transitive = true;
    for (int i = 0; i < t && transitive; ++i)
      for (int k = 0; k < t && transitive; ++k)
        if (r[at(t, i, k)])
          for (int j = 0; j < t; ++j)
            if (r[at(t, k, j)] && !r[at(t, i, j)]) { transitive = false; break; }
    if (transitive) out.push_back(from_relations(t, pairs));
  }
  return out;
}

}  // namespace unitposet
