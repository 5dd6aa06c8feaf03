#include "unitposet/wildness.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "unitposet/errors.hpp"

namespace unitposet {

std::array<int, 3> nonsemichain_triple(const Poset& p) {
  auto triple = find_nonsemichain_triple(p);
  if (!triple) throw IsSemichain("every element is incomparable to at most one other");
  return *triple;
}

CMatrix gadget_m(const CMatrix& x) {
  if (x.rows() != x.cols()) throw NonSquare("X must be square");
  const auto n = x.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix m = CMatrix::Zero(4 * n, 2 * n);
  m.block(0, 0, n, n) = id;
  m.block(n, n, n, n) = id;
  m.block(2 * n, 0, n, n) = id;
  m.block(2 * n, n, n, n) = id;
  m.block(3 * n, 0, n, n) = id;
  m.block(3 * n, n, n, n) = x;
  return m;
}

WildWitness wild_witness(const Poset& p, const std::array<int, 3>& triple, const CMatrix& x) {
  if (x.rows() != x.cols()) throw NonSquare("X must be square");
  const int n = static_cast<int>(x.rows());
  CMatrix sigma = CMatrix::Zero(4 * n, 4 * n);
  for (int b = 0; b < 4; ++b) sigma.block(b * n, b * n, n, n) = CMatrix::Identity(n, n) * double(b + 1);

  std::vector<CMatrix> strips(static_cast<std::size_t>(p.size()), CMatrix(8 * n, 0));
  CMatrix si = CMatrix::Zero(8 * n, 4 * n);
  si.topRows(4 * n) = CMatrix::Identity(4 * n, 4 * n);
  CMatrix sj(8 * n, 4 * n);
  sj << sigma, CMatrix::Identity(4 * n, 4 * n);
  CMatrix sk = CMatrix::Zero(8 * n, 2 * n);
  sk.bottomRows(4 * n) = gadget_m(x);
  strips[static_cast<std::size_t>(triple[0])] = si;
  strips[static_cast<std::size_t>(triple[1])] = sj;
  strips[static_cast<std::size_t>(triple[2])] = sk;
  return {triple, n, BlockMatrix(p, 8 * n, std::move(strips))};
}

WildWitness wild_witness(const Poset& p, const CMatrix& x) {
  if (x.rows() != x.cols()) throw NonSquare("X must be square");
  return wild_witness(p, nonsemichain_triple(p), x);
}

AdmissiblePair embedding_transport(const CMatrix& v) {
  if (v.rows() != v.cols()) throw NotUnitary("V is not square");
  if (!is_unitary(v, 1e-9)) throw NotUnitary("V is not unitary");
  const auto n = v.rows();
  const CMatrix inv = v.adjoint();
  AdmissiblePair out{CMatrix::Zero(8 * n, 8 * n), CMatrix::Zero(10 * n, 10 * n)};
  for (int b = 0; b < 8; ++b) out.r.block(b * n, b * n, n, n) = v;
  for (int b = 0; b < 10; ++b) out.s.block(b * n, b * n, n, n) = inv;
  return out;
}

namespace {

std::vector<cplx> eigenvalues(const CMatrix& a) {
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<CMatrix> es(a, false);
  if (es.info() != Eigen::Success) throw ConvergenceFailure("eigenvalue iteration did not converge");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Greedy nearest matching of two multisets.
bool multisets_match(std::vector<cplx> a, std::vector<cplx> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    std::size_t best = b.size();
    double dist = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(x - b[i]);
      if (best == b.size() || d < dist) { best = i; dist = d; }
    }
    if (best == b.size() || dist > tol) return false;
    used[best] = 1;
  }
  return true;
}

// Traces of all words of length 1..max_len in (X, X^*), compared pairwise.
bool word_traces_differ(const CMatrix& x, const CMatrix& y, int max_len, double tol, double scale) {
  const CMatrix xs = x.adjoint(), ys = y.adjoint();
  struct Frame {
    CMatrix wx, wy;
    int len;
  };
  std::vector<Frame> stack{{CMatrix::Identity(x.rows(), x.rows()), CMatrix::Identity(y.rows(), y.rows()), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.len > 0) {
      const double bound = tol * std::pow(scale, f.len) * static_cast<double>(x.rows());
      if (std::abs(f.wx.trace() - f.wy.trace()) > bound) return true;
    }
    if (f.len == max_len) continue;
    stack.push_back({f.wx * x, f.wy * y, f.len + 1});
    stack.push_back({f.wx * xs, f.wy * ys, f.len + 1});
  }
  return false;
}

}  // namespace

bool similarity_obstruction(const CMatrix& x, const CMatrix& y, double tol) {
  if (x.rows() != x.cols() || y.rows() != y.cols()) throw NonSquare("X and Y must be square");
  if (x.rows() != y.rows()) throw SizeMismatch("X and Y have different sizes");
  const double scale = std::max({1.0, spectral_norm(x), spectral_norm(y)});

  auto sx = singular_values(x), sy = singular_values(y);
  for (std::size_t i = 0; i < sx.size(); ++i)
    if (std::abs(sx[i] - sy[i]) > tol * scale) return true;
  // Eigenvalues at sqrt(tol).
  if (!multisets_match(eigenvalues(x), eigenvalues(y), std::sqrt(tol) * scale)) return true;
  return word_traces_differ(x, y, 6, tol, scale);
}

Poset critical_poset(const std::string& name) {
  Poset acc;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Poset piece;
    if (part == "N") {
      // a=0, b=1 at the bottom; c=2 above both, d=3 above b only.
      std::vector<std::pair<int, int>> rel{{0, 2}, {1, 2}, {1, 3}};
      piece = from_relations(4, rel).poset;
    } else {
      const int len = std::stoi(part);
      if (len < 1) throw std::invalid_argument("chain length must be positive");
      piece = Poset::chain(len);
    }
    acc = disjoint_union(acc, piece);
  }
  return acc;
}

const std::vector<std::string>& finite_critical_names() {
  static const std::vector<std::string> names{"1,1,1,1", "2,2,2", "1,3,3", "N,4", "1,2,5"};
  return names;
}

const std::vector<std::string>& tame_critical_names() {
  static const std::vector<std::string> names{"1,1,1,1,1", "1,1,1,2", "2,2,3",
                                              "1,3,4",     "N,5",     "1,2,6"};
  return names;
}

namespace {

std::optional<CriticalWitness> first_contained(const Poset& p, const std::vector<std::string>& names) {
  for (const auto& name : names) {
    Poset q = critical_poset(name);
    if (auto emb = find_full_subposet(p, q)) return CriticalWitness{name, q, *emb};
  }
  return std::nullopt;
}

}  // namespace

ClassicalClass classical_type(const Poset& p) {
  ClassicalClass c;
  auto finite_obstruction = first_contained(p, finite_critical_names());
  if (!finite_obstruction) return c;
  if (auto tame_obstruction = first_contained(p, tame_critical_names())) {
    c.type = RepType::Wild;
    c.witness = std::move(tame_obstruction);
  } else {
    c.type = RepType::Tame;
    c.witness = std::move(finite_obstruction);
  }
  return c;
}

}  // namespace unitposet
