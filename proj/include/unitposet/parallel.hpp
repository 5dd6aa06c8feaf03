#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unitposet/blockmat.hpp"
#include "unitposet/canon.hpp"
#include "unitposet/poset.hpp"
#include "unitposet/qform.hpp"

// OpenMP batch kernels. Each has a `_serial` twin that computes the same
// thing with a plain loop; the tests require bit-identical results and the
// benchmarks compare the two. Without OpenMP both run serially.
namespace unitposet::par {

int max_threads();

/// Structural and form-based verdicts for one poset.
struct PosetVerdict {
  bool chain = false;
  bool semichain = false;
  Definiteness u_definiteness = Definiteness::Indefinite;

  friend bool operator==(const PosetVerdict&, const PosetVerdict&) = default;
};

std::vector<PosetVerdict> sweep_posets(std::span<const Poset> posets);
std::vector<PosetVerdict> sweep_posets_serial(std::span<const Poset> posets);

/// decompose() over a batch. The first exception (lowest index) is
/// rethrown after the loop.
std::vector<Decomposition> decompose_batch(std::span<const BlockMatrix> batch, double tol = kDefaultRankTol);
std::vector<Decomposition> decompose_batch_serial(std::span<const BlockMatrix> batch,
                                                  double tol = kDefaultRankTol);

/// Same contract as weak_counterexample (lexicographically first hit in the
/// box), with the box split across threads and a min-reduction on the
/// linear index.
std::optional<std::vector<std::int64_t>> weak_counterexample(const QuadraticForm& f, int bound);

}  // namespace unitposet::par
