#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "unitposet/blockmat.hpp"
#include "unitposet/cxla.hpp"
#include "unitposet/poset.hpp"

namespace unitposet {

/// Lexicographically first (i, j, k), i < k, with p_j incomparable to p_i
/// and p_k. Throws IsSemichain when none exists.
std::array<int, 3> nonsemichain_triple(const Poset& p);

/// The 4n x 2n matrix [I 0; 0 I; I I; I X] for an n x n X.
CMatrix gadget_m(const CMatrix& x);

/// Block matrix A(M) embedding unitary similarity of n x n matrices into
/// P-systems of a non-semichain P. Strips i, j, k of the triple are
///
///   [ I_4n  Sigma  0 ]
///   [ 0     I_4n   M ],   Sigma = I_n + 2 I_n + 3 I_n + 4 I_n,
///
/// every other strip is 8n x 0.
struct WildWitness {
  std::array<int, 3> triple{};
  int n = 0;
  BlockMatrix matrix;
};

/// Throws IsSemichain or NonSquare.
WildWitness wild_witness(const Poset& p, const CMatrix& x);
/// Same gadget on an explicit triple (no search).
WildWitness wild_witness(const Poset& p, const std::array<int, 3>& triple, const CMatrix& x);

/// R = V (+) ... (+) V (8 copies) and S = V^-1 (+) ... (+) V^-1 (10 copies),
/// so that R A(M) S = A(N) when N is built from V X V^-1. Throws NotUnitary.
AdmissiblePair embedding_transport(const CMatrix& v);

/// One-sided test: true when some invariant of unitary similarity differs
/// beyond tol (eigenvalue multisets, singular values, or traces of the words
/// in X and X^* up to length 6), so X and Y are certainly not unitarily
/// similar. False is inconclusive. Throws SizeMismatch / NonSquare.
bool similarity_obstruction(const CMatrix& x, const CMatrix& y, double tol = 1e-8);

/// A named critical poset from the classical lists, and where it sits.
struct CriticalWitness {
  std::string name;
  Poset poset;
  std::vector<int> embedding;  // embedding[x] = element of P playing q_x
};

struct ClassicalClass {
  RepType type = RepType::RepresentationFinite;
  std::optional<CriticalWitness> witness;
};

/// Disjoint union of chains of the given lengths, with "N" denoting the
/// four-element poset a<c, b<c, b<d (for example "N,4" or "1,2,5").
Poset critical_poset(const std::string& name);

/// The five posets whose absence characterizes representation-finite
/// posets, and the six whose absence characterizes tame ones.
const std::vector<std::string>& finite_critical_names();
const std::vector<std::string>& tame_critical_names();

/// Classical (non-unitary) representation type, with the offending critical
/// subposet as witness when P is not representation-finite.
ClassicalClass classical_type(const Poset& p);

}  // namespace unitposet
