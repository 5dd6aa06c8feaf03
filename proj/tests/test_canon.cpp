#include <gtest/gtest.h>

#include <random>

#include "unitposet/canon.hpp"
#include "unitposet/errors.hpp"
#include "unitposet/random.hpp"

using namespace unitposet;

namespace {

Decomposition tally(const std::vector<Summand>& s, int t) {
  auto d = Decomposition::zero(t);
  for (const auto& x : s) {
    switch (x.kind) {
      case Summand::Kind::E: ++d.e[x.k]; break;
      case Summand::Kind::H: ++d.h[x.k]; break;
      case Summand::Kind::L: ++d.l[x.k]; break;
      case Summand::Kind::F: ++d.f; break;
      case Summand::Kind::G: d.g.emplace_back(x.k, x.sigma); break;
    }
  }
  d.normalize();
  return d;
}

Poset semichain(std::vector<std::vector<int>> blocks) { return poset_from_blocks({std::move(blocks)}); }

}  // namespace

TEST(Canon, SingleSummands) {
  auto p = semichain({{0, 1}, {2}, {3, 4}});
  std::vector<Summand> all{Summand::E(0), Summand::E(2), Summand::E(4), Summand::F(), Summand::L(1),
                           Summand::H(0), Summand::H(3), Summand::G(0, 0.7), Summand::G(3, 4.0)};
  for (const auto& s : all) {
    std::vector<Summand> one{s};
    auto d = decompose(assemble(one, p));
    EXPECT_TRUE(same_decomposition(d, tally(one, 5), 1e-12, true)) << to_string(s);
  }
}

TEST(Canon, ChainCounts) {
  auto p = Poset::chain(3);
  std::vector<Summand> s{Summand::E(0), Summand::E(0), Summand::E(2), Summand::L(1), Summand::F()};
  std::mt19937_64 rng(1);
  auto inst = plant(p, s, rng);
  auto d = canonicalize_chain(inst.disguised);
  EXPECT_TRUE(same_decomposition(d, tally(s, 3), 1e-9, true));
  EXPECT_THROW(canonicalize_chain(BlockMatrix::empty(Poset::antichain(2))), NotAChain);
}

TEST(Canon, ChainRankOfGenericStrip) {
  // A generic 4 x (2, 3) matrix over a 2-chain: E1 twice, then E2 twice
  // and L2 once.
  std::mt19937_64 rng(5);
  auto a = random_block_matrix(Poset::chain(2), 4, {2, 3}, rng);
  auto d = decompose(a);
  EXPECT_EQ(d.e, (std::vector<int>{2, 2}));
  EXPECT_EQ(d.l, (std::vector<int>{0, 1}));
  EXPECT_EQ(d.f, 0);
}

TEST(Canon, GSigmaIsRecovered) {
  auto p = Poset::antichain(2);
  std::vector<Summand> s{Summand::G(0, 2.0), Summand::G(0, 0.25), Summand::H(0), Summand::E(1)};
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = plant(p, s, rng);
    auto d = decompose(inst.disguised);
    ASSERT_EQ(d.g.size(), 2u);
    EXPECT_NEAR(d.g[0].second, 2.0, 1e-9);
    EXPECT_NEAR(d.g[1].second, 0.25, 1e-9);
    EXPECT_EQ(d.h, (std::vector<int>{1, 0}));
    EXPECT_EQ(d.e, (std::vector<int>{0, 1}));
  }
}

TEST(Canon, PlantedRandom) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_semichain(1 + static_cast<int>(rng() % 6), rng);
    auto s = random_summands(p, 6, 0.1, 10.0, rng);
    auto inst = plant(p, s, rng);
    auto d = decompose(inst.disguised);
    EXPECT_TRUE(same_decomposition(d, tally(s, p.size()), 1e-6, true)) << trial;
    EXPECT_EQ(d.rows(), inst.disguised.rows());
    EXPECT_EQ(d.widths(), inst.disguised.widths());
  }
}

TEST(Canon, InvarianceAndIdempotence) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_semichain(1 + static_cast<int>(rng() % 5), rng);
    std::vector<int> w(p.size());
    for (auto& x : w) x = static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % 5);
    auto a = random_block_matrix(p, m, w, rng);
    auto d = decompose(a);
    auto t = random_admissible(p, m, w, rng());
    EXPECT_TRUE(same_decomposition(d, decompose(admissible_transform(a, t.r, t.s)), 1e-6, true));
    auto again = decompose(rebuild(d, p));
    EXPECT_TRUE(same_decomposition(d, again, 1e-9, true));
    EXPECT_TRUE(is_equivalent(a, rebuild(d, p), 1e-9, 1e-6, true));
  }
}

TEST(Canon, ZeroAndEmpty) {
  auto p = Poset::antichain(2);
  auto d = decompose(BlockMatrix(p, 3, {CMatrix::Zero(3, 2), CMatrix::Zero(3, 1)}));
  EXPECT_EQ(d.f, 3);
  EXPECT_EQ(d.l, (std::vector<int>{2, 1}));
  auto e = decompose(BlockMatrix::empty(p));
  EXPECT_EQ(e.rows(), 0);
  EXPECT_TRUE(e.summands().empty());
}

TEST(Canon, WeakEquivalenceIgnoresZeroColumns) {
  auto p = Poset::chain(2);
  BlockMatrix a(p, 1, {CMatrix::Ones(1, 1), CMatrix::Zero(1, 0)});
  BlockMatrix b(p, 1, {CMatrix::Ones(1, 1), CMatrix::Zero(1, 2)});
  EXPECT_TRUE(is_equivalent(a, b));
  EXPECT_FALSE(is_equivalent(a, b, 1e-9, 1e-6, true));
}

TEST(Canon, DistinctSigmasAreInequivalent) {
  auto p = Poset::antichain(2);
  std::vector<Summand> x{Summand::G(0, 1.0)}, y{Summand::G(0, 2.0)};
  EXPECT_FALSE(is_equivalent(assemble(x, p), assemble(y, p)));
  EXPECT_TRUE(is_equivalent(assemble(x, p), assemble(x, p)));
}

TEST(Canon, Errors) {
  auto w = BlockMatrix::empty(Poset::antichain(3), 1);
  EXPECT_THROW(decompose(w), WildPoset);
  EXPECT_THROW(canonicalize_semichain(w), NotASemichain);
  EXPECT_THROW(is_equivalent(BlockMatrix::empty(Poset::chain(2)), BlockMatrix::empty(Poset::antichain(2))),
               PosetMismatch);
}

TEST(Canon, PlantedLarge) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_semichain(4 + static_cast<int>(rng() % 5), rng);
    auto s = random_summands(p, 24, 0.1, 10.0, rng);
    auto inst = plant(p, s, rng);
    EXPECT_TRUE(same_decomposition(decompose(inst.disguised), tally(s, p.size()), 1e-6, true)) << trial;
  }
}

TEST(Canon, RepeatedSigma) {
  auto p = Poset::antichain(2);
  std::vector<Summand> s{Summand::G(0, 1.5), Summand::G(0, 1.5), Summand::G(0, 1.5), Summand::E(0), Summand::E(1)};
  std::mt19937_64 rng(9);
  auto d = decompose(plant(p, s, rng).disguised);
  EXPECT_TRUE(same_decomposition(d, tally(s, 2), 1e-8, true));
}
