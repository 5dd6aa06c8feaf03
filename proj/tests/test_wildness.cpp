#include <gtest/gtest.h>

#include <random>

#include "unitposet/errors.hpp"
#include "unitposet/qform.hpp"
#include "unitposet/random.hpp"
#include "unitposet/wildness.hpp"

using namespace unitposet;

namespace {

Poset poset20() {
  return from_relations(5, std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}).poset;
}

// A(M) entries written out by hand for n = 1.
CMatrix gadget_by_hand(cplx x) {
  CMatrix a = CMatrix::Zero(8, 10);
  for (int i = 0; i < 4; ++i) {
    a(i, i) = 1.0;              // I_4 in strip i
    a(i, 4 + i) = double(i + 1);  // Sigma in strip j
    a(4 + i, 4 + i) = 1.0;        // I_4 in strip j
  }
  // M = [1 0; 0 1; 1 1; 1 x] in strip k
  a(4, 8) = 1.0;
  a(5, 9) = 1.0;
  a(6, 8) = 1.0;
  a(6, 9) = 1.0;
  a(7, 8) = 1.0;
  a(7, 9) = x;
  return a;
}

}  // namespace

TEST(Wildness, Triple) {
  EXPECT_EQ(nonsemichain_triple(Poset::antichain(3)), (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(nonsemichain_triple(poset20()), (std::array<int, 3>{2, 3, 4}));
  EXPECT_THROW(nonsemichain_triple(Poset::antichain(2)), IsSemichain);
}

TEST(Wildness, GadgetMatchesHandAssembly) {
  for (cplx x : {cplx(0.0), cplx(2.5, -1.0)}) {
    CMatrix xm(1, 1);
    xm(0, 0) = x;
    auto w = wild_witness(Poset::antichain(3), xm);
    EXPECT_EQ(w.n, 1);
    EXPECT_EQ(w.matrix.widths(), (std::vector<int>{4, 4, 2}));
    EXPECT_EQ(w.matrix.full(), gadget_by_hand(x));
  }
}

TEST(Wildness, OtherStripsAreEmpty) {
  CMatrix x = CMatrix::Identity(2, 2);
  auto p = disjoint_union(Poset::chain(1), Poset::antichain(3));
  auto w = wild_witness(p, x);
  EXPECT_EQ(w.triple, (std::array<int, 3>{0, 1, 2}));
  auto w2 = wild_witness(p, {1, 2, 3}, x);
  EXPECT_EQ(w2.matrix.widths(), (std::vector<int>{0, 8, 8, 4}));
  EXPECT_EQ(w2.matrix.rows(), 16);
  EXPECT_THROW(wild_witness(Poset::antichain(2), x), IsSemichain);
  EXPECT_THROW(wild_witness(Poset::antichain(3), CMatrix(2, 3)), NonSquare);
}

TEST(Wildness, Transport) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      CMatrix x = random_gaussian(n, n, rng);
      CMatrix v = random_unitary(n, rng);
      CMatrix y = v * x * v.adjoint();
      auto p = poset20();
      auto a = wild_witness(p, x), b = wild_witness(p, y);
      auto rs = embedding_transport(v);
      EXPECT_LE((rs.r * a.matrix.full() * rs.s - b.matrix.full()).norm(), 1e-10);
      EXPECT_TRUE(has_admissible_pattern(p, a.matrix.widths(), rs.s));
    }
  auto id = embedding_transport(CMatrix::Identity(2, 2));
  EXPECT_EQ(id.r, CMatrix::Identity(16, 16));
  EXPECT_EQ(id.s, CMatrix::Identity(20, 20));
  EXPECT_THROW(embedding_transport(2.0 * CMatrix::Identity(2, 2)), NotUnitary);
}

TEST(Wildness, ScalarPhaseFixesGadget) {
  CMatrix v(1, 1);
  v(0, 0) = std::polar(1.0, 0.7);
  CMatrix x(1, 1);
  x(0, 0) = cplx(1.5, 0.5);
  auto a = wild_witness(Poset::antichain(3), x);
  auto rs = embedding_transport(v);
  EXPECT_LE((rs.r * a.matrix.full() * rs.s - a.matrix.full()).norm(), 1e-14);
}

TEST(Wildness, Obstruction) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    CMatrix x = random_gaussian(n, n, rng);
    CMatrix v = random_unitary(n, rng);
    EXPECT_FALSE(similarity_obstruction(x, x));
    EXPECT_FALSE(similarity_obstruction(x, v * x * v.adjoint()));
    EXPECT_TRUE(similarity_obstruction(x, x + CMatrix::Identity(n, n)));
  }
  CMatrix one = CMatrix::Identity(1, 1), two = 2.0 * one;
  EXPECT_TRUE(similarity_obstruction(one, two));
  EXPECT_THROW(similarity_obstruction(one, CMatrix::Identity(2, 2)), SizeMismatch);
  EXPECT_THROW(similarity_obstruction(CMatrix(1, 2), CMatrix(1, 2)), NonSquare);
}

TEST(Wildness, ObstructionSeesBeyondSpectrum) {
  // Same eigenvalues, similar but not unitarily similar.
  CMatrix j = CMatrix::Zero(2, 2), k = CMatrix::Zero(2, 2);
  j(0, 1) = 1.0;
  k(0, 1) = 2.0;
  EXPECT_TRUE(similarity_obstruction(j, k));
  // A defective matrix against a unitary conjugate of itself.
  CMatrix v = random_unitary(2, 9);
  EXPECT_FALSE(similarity_obstruction(j, v * j * v.adjoint()));
}

TEST(Wildness, CriticalPosetShapes) {
  auto n = critical_poset("N");
  EXPECT_EQ(n.size(), 4);
  EXPECT_EQ(n.relations().size(), 3u);
  EXPECT_EQ(critical_poset("1,2,5").size(), 8);
  EXPECT_EQ(critical_poset("N,5").size(), 9);
  EXPECT_EQ(finite_critical_names().size(), 5u);
  EXPECT_EQ(tame_critical_names().size(), 6u);
  EXPECT_THROW(critical_poset("0"), std::invalid_argument);
}

TEST(Wildness, CriticalListsAreMinimal) {
  // Each critical poset fails its condition, and deleting any element
  // restores it.
  auto drop = [](const Poset& p, int x) {
    std::vector<int> keep;
    for (int i = 0; i < p.size(); ++i)
      if (i != x) keep.push_back(i);
    return p.induced(keep);
  };
  for (const auto& name : finite_critical_names()) {
    auto p = critical_poset(name);
    EXPECT_EQ(classical_type(p).type, RepType::Tame) << name;
    for (int x = 0; x < p.size(); ++x)
      EXPECT_EQ(classical_type(drop(p, x)).type, RepType::RepresentationFinite) << name << " - " << x;
  }
  for (const auto& name : tame_critical_names()) {
    auto p = critical_poset(name);
    EXPECT_EQ(classical_type(p).type, RepType::Wild) << name;
    for (int x = 0; x < p.size(); ++x) EXPECT_NE(classical_type(drop(p, x)).type, RepType::Wild) << name;
  }
}

TEST(Wildness, CriticalPosetsHaveTitsFormNullRoots) {
  // The Tits form of a minimal non-finite poset is zero on a positive
  // vector; for the minimal wild ones it goes negative.
  for (const auto& name : {"1,1,1,1", "2,2,2"}) {
    auto hit = weak_counterexample(q_form(critical_poset(name)), 3);
    ASSERT_TRUE(hit) << name;
    EXPECT_EQ(evaluate(q_form(critical_poset(name)), *hit), 0);
  }
  std::vector<std::int64_t> z{2, 1, 1, 1, 1, 1};
  EXPECT_LT(evaluate(q_form(critical_poset("1,1,1,1,1")), z), 0);
}

TEST(Wildness, ClassicalTypeAgreesWithTitsFormOnSmallPosets) {
  // Finite iff q_P > 0 on the nonnegative box; tame iff q_P >= 0 there.
  for (int t = 0; t <= 5; ++t)
    for (const auto& p : enumerate_natural_posets(t)) {
      auto f = q_form(p);
      bool nonpositive = false, negative = false;
      const int n = f.n_vars();
      std::vector<std::int64_t> z(n, 0);
      const int bound = 4;
      while (true) {
        int pos = n - 1;
        while (pos >= 0 && z[pos] == bound) z[pos--] = 0;
        if (pos < 0) break;
        ++z[pos];
        const auto v = evaluate(f, z);
        nonpositive = nonpositive || v <= 0;
        negative = negative || v < 0;
      }
      const auto type = classical_type(p).type;
      EXPECT_EQ(type == RepType::RepresentationFinite, !nonpositive);
      EXPECT_EQ(type == RepType::Wild, negative);
    }
}

TEST(Wildness, ClassicalWitnessEmbeds) {
  auto c = classical_type(Poset::antichain(5));
  EXPECT_EQ(c.type, RepType::Wild);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->name, "1,1,1,1,1");
  auto t = classical_type(Poset::antichain(4));
  EXPECT_EQ(t.type, RepType::Tame);
  ASSERT_TRUE(t.witness);
  EXPECT_EQ(t.witness->name, "1,1,1,1");
  EXPECT_EQ(classical_type(Poset::antichain(3)).type, RepType::RepresentationFinite);
  EXPECT_FALSE(classical_type(Poset::antichain(3)).witness);
}

TEST(Wildness, UnitaryAndClassicalHierarchy) {
  for (int t = 0; t <= 5; ++t)
    for (const auto& p : enumerate_natural_posets(t))
      if (classify_unitary(p).type == RepType::RepresentationFinite)
        EXPECT_EQ(classical_type(p).type, RepType::RepresentationFinite);
  EXPECT_EQ(classify_unitary(Poset::antichain(3)).type, RepType::Wild);
  EXPECT_EQ(classical_type(Poset::antichain(3)).type, RepType::RepresentationFinite);
}
