#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "unitposet/blockmat.hpp"
#include "unitposet/poset.hpp"
#include "unitposet/systems.hpp"

namespace unitposet {

// Random instance generators shared by the tests, the benchmarks and the
// `random` CLI command. All draw from a caller-owned engine.

/// Each pair i < j becomes a relation with probability `density`, then the
/// transitive closure is taken.
Poset random_poset(int t, double density, std::mt19937_64& rng);

/// A semichain on t elements with each block a pair with probability 1/2.
Poset random_semichain(int t, std::mt19937_64& rng);

/// Up to max_count summands valid over the semichain p (at least one when
/// max_count > 0), sigma uniform in [sigma_lo, sigma_hi].
std::vector<Summand> random_summands(const Poset& p, int max_count, double sigma_lo, double sigma_hi,
                                     std::mt19937_64& rng);

/// Gaussian block matrix of the given size.
BlockMatrix random_block_matrix(const Poset& p, int rows, const std::vector<int>& widths,
                                std::mt19937_64& rng);

struct PlantedInstance {
  std::vector<Summand> summands;
  BlockMatrix canonical;  // block direct sum of the summands
  BlockMatrix disguised;  // R * canonical * S
  AdmissiblePair transform;
};

/// Block direct sum of `summands`, then a random admissible transform.
PlantedInstance plant(const Poset& p, std::vector<Summand> summands, std::mt19937_64& rng);

/// f(A) of a random block matrix, re-spanned by a random redundant
/// generating set so that the spans are not orthonormal.
SubspaceSystem random_system(const Poset& p, int ambient_dim, std::mt19937_64& rng);

}  // namespace unitposet
