#include <gtest/gtest.h>

#include <random>

#include "unitposet/errors.hpp"
#include "unitposet/parallel.hpp"
#include "unitposet/random.hpp"

using namespace unitposet;

TEST(Parallel, SweepMatchesSerial) {
  auto posets = enumerate_natural_posets(6);
  auto a = par::sweep_posets(posets);
  auto b = par::sweep_posets_serial(posets);
  EXPECT_EQ(a, b);
  EXPECT_GE(par::max_threads(), 1);
}

TEST(Parallel, DecomposeBatchMatchesSerial) {
  std::mt19937_64 rng(1);
  std::vector<BlockMatrix> batch;
  for (int i = 0; i < 40; ++i) {
    auto p = random_semichain(1 + static_cast<int>(rng() % 5), rng);
    batch.push_back(plant(p, random_summands(p, 6, 0.1, 10.0, rng), rng).disguised);
  }
  auto a = par::decompose_batch(batch);
  auto b = par::decompose_batch_serial(batch);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].e, b[i].e);
    EXPECT_EQ(a[i].h, b[i].h);
    EXPECT_EQ(a[i].l, b[i].l);
    EXPECT_EQ(a[i].f, b[i].f);
    EXPECT_EQ(a[i].g, b[i].g);
  }
}

TEST(Parallel, DecomposeBatchRethrows) {
  std::vector<BlockMatrix> batch{BlockMatrix::empty(Poset::chain(2)), BlockMatrix::empty(Poset::antichain(3))};
  EXPECT_THROW(par::decompose_batch(batch), WildPoset);
}

TEST(Parallel, WeakCounterexampleMatchesSerial) {
  for (int t = 0; t <= 4; ++t)
    for (const auto& p : enumerate_natural_posets(t))
      for (const auto& f : {u_form(p), q_form(p)}) EXPECT_EQ(par::weak_counterexample(f, 3), weak_counterexample(f, 3));
  EXPECT_THROW(par::weak_counterexample(u_form(Poset::chain(1)), 0), std::invalid_argument);
}
