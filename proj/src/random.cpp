#include "unitposet/random.hpp"

namespace unitposet {

Poset random_poset(int t, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return from_relations(t, pairs).poset;
}

Poset random_semichain(int t, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  SemichainBlocks sb;
  for (int i = 0; i < t;) {
    if (i + 1 < t && coin(rng)) {
      sb.blocks.push_back({i, i + 1});
      i += 2;
    } else {
      sb.blocks.push_back({i});
      i += 1;
    }
  }
  return poset_from_blocks(sb);
}

std::vector<Summand> random_summands(const Poset& p, int max_count, double sigma_lo, double sigma_hi,
                                     std::mt19937_64& rng) {
  const int t = p.size();
  std::vector<Summand> pool{Summand::F()};
  std::vector<int> pair_heads;
  for (int k = 0; k < t; ++k) {
    pool.push_back(Summand::E(k));
    pool.push_back(Summand::L(k));
    if (k + 1 < t && !p.precedes(k, k + 1)) {
      pool.push_back(Summand::H(k));
      pair_heads.push_back(k);
    }
  }
  std::uniform_int_distribution<int> count(max_count > 0 ? 1 : 0, max_count);
  std::uniform_real_distribution<double> sigma(sigma_lo, sigma_hi);
  // One slot in four is a G summand when the poset has pair blocks.
  std::uniform_int_distribution<int> kind(0, 3);
  const int n = count(rng);
  std::vector<Summand> out;
  for (int i = 0; i < n; ++i) {
    if (!pair_heads.empty() && kind(rng) == 0) {
      std::uniform_int_distribution<std::size_t> head(0, pair_heads.size() - 1);
      out.push_back(Summand::G(pair_heads[head(rng)], sigma(rng)));
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      out.push_back(pool[pick(rng)]);
    }
  }
  return out;
}

BlockMatrix random_block_matrix(const Poset& p, int rows, const std::vector<int>& widths,
                                std::mt19937_64& rng) {
  std::vector<CMatrix> strips;
  for (int w : widths) strips.push_back(random_gaussian(rows, w, rng));
  return BlockMatrix(p, rows, std::move(strips));
}

PlantedInstance plant(const Poset& p, std::vector<Summand> summands, std::mt19937_64& rng) {
  PlantedInstance inst;
  inst.summands = std::move(summands);
  inst.canonical = assemble(inst.summands, p);
  const auto widths = inst.canonical.widths();
  inst.transform = random_admissible(p, inst.canonical.rows(), widths, rng());
  inst.disguised = admissible_transform(inst.canonical, inst.transform.r, inst.transform.s);
  return inst;
}

SubspaceSystem random_system(const Poset& p, int ambient_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> width(0, std::max(1, ambient_dim / 2));
  std::vector<int> widths;
  for (int i = 0; i < p.size(); ++i) widths.push_back(width(rng));
  const SubspaceSystem base = f_of(random_block_matrix(p, ambient_dim, widths, rng));
  std::vector<CMatrix> spans;
  for (const auto& s : base.spans()) {
    // Extra columns are combinations of the existing ones.
    const auto extra = s.cols() > 0 ? 1 : 0;
    CMatrix mix = random_gaussian(static_cast<int>(s.cols()), static_cast<int>(s.cols() + extra), rng);
    spans.push_back(s * mix);
  }
  return SubspaceSystem(p, ambient_dim, std::move(spans));
}

}  // namespace unitposet
