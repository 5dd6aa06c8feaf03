// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "unitposet/canon.hpp"
#include "unitposet/qform.hpp"
#include "unitposet/random.hpp"
#include "unitposet/systems.hpp"
#include "unitposet/wildness.hpp"

using namespace unitposet;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

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

double condition_number(const CMatrix& s) {
  if (s.size() == 0) return 1.0;
  auto sv = singular_values(s);
  return sv.front() / sv.back();
}

// Random admissible pair with cond(S) <= 1e3.
AdmissiblePair bounded_admissible(const Poset& p, int rows, const std::vector<int>& widths, std::mt19937_64& rng) {
  while (true) {
    auto t = random_admissible(p, rows, widths, rng());
    if (condition_number(t.s) <= 1e3) return t;
  }
}

std::vector<std::int64_t> random_ints(int n, std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::vector<std::int64_t> z(static_cast<std::size_t>(n));
  for (auto& x : z) x = d(rng);
  return z;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (int t = 0; t <= 5; ++t)
    for (const auto& in : enumerate_labeled_posets(t)) {
      const auto d = definiteness(u_form(in.poset));
      const bool chain = is_chain(in.poset);
      const bool semi = semichain_blocks(in.poset).has_value();
      if (chain != (d == Definiteness::PositiveDefinite)) ++bad;
      if (semi != (d != Definiteness::Indefinite)) ++bad;
      if (chain != oracle::is_chain(in.poset) || semi != oracle::is_semichain(in.poset)) ++bad;
      ++checked;
    }
  const double secs = seconds_since(t0);
  return {bad == 0 && checked == 4474 && secs < 60.0,
          std::to_string(checked) + " labeled posets, " + std::to_string(bad) + " mismatches, " +
              std::to_string(secs) + " s"};
}

Outcome criterion2() {
  std::mt19937_64 rng(2);
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    auto p = random_poset(static_cast<int>(rng() % 7), 0.45, rng);
    auto u = u_form(p);
    auto q = q_form(disjoint_union(p, p));
    for (int j = 0; j < 100; ++j) {
      auto z = random_ints(p.size() + 1, -5, 5, rng);
      std::vector<std::int64_t> zz(z);
      zz.insert(zz.end(), z.begin() + 1, z.end());
      if (evaluate(u, z) != evaluate(q, zz) || !doubling_identity_check(p, z)) ++bad;
    }
  }
  return {bad == 0, "5000 vectors, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion3() {
  auto rel = [](int t, std::vector<std::pair<int, int>> r) { return from_relations(t, r).poset; };
  const std::int64_t a = evaluate(u_form(Poset::antichain(2)), std::vector<std::int64_t>{2, 1, 1});
  const std::int64_t b = evaluate(u_form(rel(3, {{1, 2}})), std::vector<std::int64_t>{3, 1, 1, 1});
  const std::int64_t c = evaluate(u_form(Poset::antichain(3)), std::vector<std::int64_t>{3, 1, 1, 1});
  const std::int64_t d = evaluate(q_form(rel(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}})),
                                  std::vector<std::int64_t>{-1, 2, 2, -2, -2, -2});
  char buf[128];
  std::snprintf(buf, sizeof buf, "values %lld %lld %lld %lld (want 0 -1 -3 -1)", (long long)a, (long long)b,
                (long long)c, (long long)d);
  return {a == 0 && b == -1 && c == -3 && d == -1, buf};
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4);
  int bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_semichain(1 + static_cast<int>(rng() % 6), rng);
    auto s = random_summands(p, 6, 0.1, 10.0, rng);
    auto canonical = assemble(s, p);
    auto t = bounded_admissible(p, canonical.rows(), canonical.widths(), rng);
    auto d = decompose(admissible_transform(canonical, t.r, t.s));
    auto want = tally(s, p.size());
    if (!same_decomposition(d, want, 1e-6, true)) ++bad;
    if (d.g.size() == want.g.size())
      for (std::size_t i = 0; i < d.g.size(); ++i) worst = std::max(worst, std::abs(d.g[i].second - want.g[i].second));
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "200 trials, %d failures, max sigma error %.2e, %.2f s", bad, worst, secs);
  return {bad == 0 && secs < 30.0, buf};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_semichain(1 + static_cast<int>(rng() % 6), rng);
    BlockMatrix a;
    if (trial % 2 == 0) {
      std::vector<int> w(static_cast<std::size_t>(p.size()));
      for (auto& x : w) x = static_cast<int>(rng() % 3);
      a = random_block_matrix(p, static_cast<int>(rng() % 6), w, rng);
    } else {
      a = plant(p, random_summands(p, 6, 0.1, 10.0, rng), rng).disguised;
    }
    auto d = decompose(a);
    auto t = bounded_admissible(p, a.rows(), a.widths(), rng);
    if (!same_decomposition(d, decompose(admissible_transform(a, t.r, t.s)), 1e-6, true)) ++bad;
    if (!same_decomposition(decompose(rebuild(d, p)), d, 1e-6, true)) ++bad;
  }
  return {bad == 0, "200 instances, " + std::to_string(bad) + " failures"};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_semichain(1 + static_cast<int>(rng() % 6), rng);
    const int m = 1 + static_cast<int>(rng() % 6);
    auto u = random_system(p, m, rng);
    if (!isometric(u, u.rotated(random_unitary(m, rng))).isometric) ++bad;
  }
  auto p = Poset::antichain(2);
  using K = SystemSummand::Kind;
  const bool distinct = !isometric(system_summand({K::Gks, 0, 1.0}, p), system_summand({K::Gks, 0, 2.0}, p)).isometric;
  return {bad == 0 && distinct, "100 rotations, " + std::to_string(bad) + " failures; G_{1,1} vs G_{1,2} " +
                                    (distinct ? "distinguished" : "NOT distinguished")};
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  auto p = Poset::antichain(3);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      CMatrix x = random_gaussian(n, n, rng);
      CMatrix v = random_unitary(n, rng);
      auto a = wild_witness(p, x), b = wild_witness(p, v * x * v.adjoint());
      auto rs = embedding_transport(v);
      worst = std::max(worst, (rs.r * a.matrix.full() * rs.s - b.matrix.full()).norm());
    }
  int missed = 0;
  std::uniform_real_distribution<double> shift(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    CMatrix w = random_gaussian(n, n, rng);
    Eigen::VectorXcd d(n);
    for (int i = 0; i < n; ++i) d(i) = cplx(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng));
    Eigen::VectorXcd d2 = d;
    // Move two eigenvalues in opposite directions so the trace is unchanged.
    const double s = shift(rng);
    d2(0) += s;
    d2(1) -= s;
    CMatrix x = w * d.asDiagonal() * w.inverse();
    CMatrix v = random_unitary(n, rng);
    CMatrix y = v * (w * d2.asDiagonal() * w.inverse()) * v.adjoint();
    if (!similarity_obstruction(x, y)) ++missed;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max transport residual %.2e (<= 1e-10); obstruction missed %d of 50", worst, missed);
  return {worst <= 1e-10 && missed == 0, buf};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = random_poset(static_cast<int>(rng() % 7), 0.5, rng);
    const std::int64_t m = static_cast<std::int64_t>(rng() % 11);
    auto w = random_ints(p.size(), 0, 10, rng);
    // Real dimensions: U(m) is m^2, the admissible S group 2 sum n_i^2 +
    // 2 sum_{i<j} n_i n_j, and C^{m x n} is 2 m n.
    std::int64_t group = m * m, space = 0;
    for (int i = 0; i < p.size(); ++i) {
      group += 2 * w[i] * w[i];
      space += 2 * m * w[i];
      for (int j = 0; j < p.size(); ++j)
        if (p.precedes(i, j)) group += 2 * w[i] * w[j];
    }
    std::vector<std::int64_t> z{m};
    z.insert(z.end(), w.begin(), w.end());
    const auto pb = param_balance(p, m, w);
    if (pb != evaluate(u_form(p), z) || pb != group - space) ++bad;
  }
  return {bad == 0, "1000 instances, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion9() {
  bool ok = true;
  ok = ok && classical_type(Poset::antichain(4)).type == RepType::Tame;
  ok = ok && classify_unitary(Poset::antichain(4)).type == RepType::Wild;
  ok = ok && classical_type(Poset::antichain(3)).type == RepType::RepresentationFinite;
  ok = ok && classify_unitary(Poset::antichain(3)).type == RepType::Wild;
  int chains = 0;
  for (int t = 0; t <= 12; ++t) {
    auto c = Poset::chain(t);
    if (classical_type(c).type == RepType::RepresentationFinite &&
        classify_unitary(c).type == RepType::RepresentationFinite)
      ++chains;
  }
  ok = ok && chains == 13;
  return {ok, "antichains 3 and 4 checked; chains of length 0..12 finite in both senses: " + std::to_string(chains)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exhaustive chain/semichain vs definiteness of u_P, t <= 5", criterion1},
      {"u_P(z) = q_{P+P}(z0, z, z)", criterion2},
      {"spot values of u_P and q_P", criterion3},
      {"planted decomposition recovery", criterion4},
      {"invariance and idempotence of decompose", criterion5},
      {"isometry under ambient rotation", criterion6},
      {"wildness transport and similarity obstruction", criterion7},
      {"parameter balance equals u_P", criterion8},
      {"classical vs unitary type sanity", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
