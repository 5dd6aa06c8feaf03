#include "unitposet/canon.hpp"

#include <algorithm>
#include <cmath>

#include "unitposet/errors.hpp"

namespace unitposet {

Decomposition Decomposition::zero(int t) {
  Decomposition d;
  d.e.assign(static_cast<std::size_t>(t), 0);
  d.h.assign(static_cast<std::size_t>(t), 0);
  d.l.assign(static_cast<std::size_t>(t), 0);
  return d;
}

int Decomposition::rows() const {
  int m = f + 2 * static_cast<int>(g.size());
  for (int k = 0; k < t(); ++k) m += e[static_cast<std::size_t>(k)] + h[static_cast<std::size_t>(k)];
  return m;
}

std::vector<int> Decomposition::widths() const {
  std::vector<int> w(static_cast<std::size_t>(t()), 0);
  for (int k = 0; k < t(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    w[uk] += e[uk] + l[uk] + h[uk];
    if (k + 1 < t()) w[uk + 1] += h[uk];
  }
  for (auto [k, sigma] : g) {
    w[static_cast<std::size_t>(k)] += 1;
    w[static_cast<std::size_t>(k + 1)] += 1;
  }
  return w;
}

std::vector<Summand> Decomposition::summands() const {
  std::vector<Summand> out;
  for (int k = 0; k < t(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    out.insert(out.end(), static_cast<std::size_t>(e[uk]), Summand::E(k));
    out.insert(out.end(), static_cast<std::size_t>(h[uk]), Summand::H(k));
    out.insert(out.end(), static_cast<std::size_t>(l[uk]), Summand::L(k));
  }
  for (auto [k, sigma] : g) out.push_back(Summand::G(k, sigma));
  out.insert(out.end(), static_cast<std::size_t>(f), Summand::F());
  return out;
}

void Decomposition::normalize() {
  std::sort(g.begin(), g.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
}

namespace {

// Working state of the reduction: the strips still to be processed,
// expressed in the coordinates of the rows not yet consumed.
struct Reduction {
  std::vector<CMatrix> strips;
  std::vector<double> scale;  // spectral norm of each input strip
  double tol;
  int rows;  // rows not yet consumed
  Decomposition out;

  double threshold(int i) const { return tol * scale[static_cast<std::size_t>(i)]; }

  void project_later(int first, const CMatrix& basis) {
    for (std::size_t j = static_cast<std::size_t>(first); j < strips.size(); ++j)
      strips[j] = basis.adjoint() * strips[j];
  }

  // Element k below every later element.
  void singleton_step(int k) {
    const CMatrix& a = strips[static_cast<std::size_t>(k)];
    const auto n = static_cast<int>(a.cols());
    const int m = rows;
    auto sv = svd(a);
    const int r = rank_above(sv.sigma, threshold(k));
    out.e[static_cast<std::size_t>(k)] += r;
    out.l[static_cast<std::size_t>(k)] += n - r;
    project_later(k + 1, sv.u.rightCols(m - r));
    rows -= r;
  }

  // Incomparable k, k+1, both below every later element.
  void pair_step(int k) {
    const CMatrix& a1 = strips[static_cast<std::size_t>(k)];
    const CMatrix& a2 = strips[static_cast<std::size_t>(k + 1)];
    const int m = rows;
    const auto n1 = static_cast<int>(a1.cols());
    const auto n2 = static_cast<int>(a2.cols());

    // A_1 -> I_r + 0.
    auto sv1 = svd(a1);
    const int r = rank_above(sv1.sigma, threshold(k));
    const CMatrix top = sv1.u.leftCols(r);
    const CMatrix rest = sv1.u.rightCols(m - r);
    const CMatrix a21 = top.adjoint() * a2;
    const CMatrix a22 = rest.adjoint() * a2;

    // A_22 -> I_l + 0 by unitary rows of the lower part and columns of strip 2.
    auto sv2 = svd(a22);
    const int l = rank_above(sv2.sigma, threshold(k + 1));
    const CMatrix w = sv2.v.adjoint();
    Eigen::VectorXcd inv_d(l);
    for (int i = 0; i < l; ++i) inv_d(i) = 1.0 / sv2.sigma[static_cast<std::size_t>(i)];
    const CMatrix b1 = a21 * w.leftCols(l) * inv_d.asDiagonal();
    const CMatrix b2 = a21 * w.rightCols(n2 - l);

    // B_2 -> I_s + 0 by unitary rows of the top part; B_11 is then cleared
    // by the I_s columns and only the corner B_21 remains.
    auto sv3 = svd(b2);
    const int s = rank_above(sv3.sigma, threshold(k + 1));
    const CMatrix corner = sv3.u.rightCols(r - s).adjoint() * b1;

    // The corner admits unitary transforms on both sides only.
    auto sv4 = svd(corner);
    const double largest = sv4.sigma.empty() ? 0.0 : sv4.sigma.front();
    const int q = rank_above(sv4.sigma, tol * std::max(1.0, largest));

    const auto uk = static_cast<std::size_t>(k);
    for (int i = 0; i < q; ++i) out.g.emplace_back(k, sv4.sigma[static_cast<std::size_t>(i)]);
    out.h[uk] += s;
    out.e[uk] += r - s - q;
    out.e[uk + 1] += l - q;
    out.l[uk] += n1 - r;
    out.l[uk + 1] += n2 - l - s;

    // Rows orthogonal to col(A_1) + col(A_2).
    project_later(k + 2, rest * sv2.u.rightCols(m - r - l));
    rows -= r + l;
  }
};

Reduction start(const BlockMatrix& a, double tol) {
  Reduction red;
  red.strips = a.strips();
  red.tol = tol;
  red.rows = a.rows();
  for (const auto& s : red.strips) red.scale.push_back(spectral_norm(s));
  red.out = Decomposition::zero(a.strip_count());
  return red;
}

}  // namespace

Decomposition canonicalize_chain(const BlockMatrix& a, double tol) {
  if (!is_chain(a.poset())) throw NotAChain("poset is not a chain");
  auto red = start(a, tol);
  for (int k = 0; k < a.strip_count(); ++k) red.singleton_step(k);
  red.out.f = red.rows;
  red.out.normalize();
  return red.out;
}

Decomposition canonicalize_semichain(const BlockMatrix& a, double tol) {
  auto blocks = semichain_blocks(a.poset());
  if (!blocks) throw NotASemichain("poset is not a semichain");
  auto red = start(a, tol);
  for (const auto& block : blocks->blocks) {
    if (block.size() == 1) red.singleton_step(block.front());
    else red.pair_step(block.front());
  }
  red.out.f = red.rows;
  red.out.normalize();
  return red.out;
}

Decomposition decompose(const BlockMatrix& a, double tol) {
  if (!semichain_blocks(a.poset())) throw WildPoset("poset is not a semichain; no canonical form");
  if (is_chain(a.poset())) return canonicalize_chain(a, tol);
  return canonicalize_semichain(a, tol);
}

BlockMatrix rebuild(const Decomposition& d, const Poset& p) {
  const auto summands = d.summands();
  return assemble(summands, p);
}

bool same_decomposition(const Decomposition& a, const Decomposition& b, double sigma_tol, bool strict) {
  if (a.t() != b.t() || a.e != b.e || a.h != b.h || a.f != b.f) return false;
  if (strict && a.l != b.l) return false;
  if (a.g.size() != b.g.size()) return false;
  auto ga = a.g, gb = b.g;
  auto order = [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  };
  std::sort(ga.begin(), ga.end(), order);
  std::sort(gb.begin(), gb.end(), order);
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i].first != gb[i].first || std::abs(ga[i].second - gb[i].second) > sigma_tol) return false;
  return true;
}

bool is_equivalent(const BlockMatrix& a, const BlockMatrix& b, double rank_tol, double sigma_tol,
                   bool strict) {
  if (!(a.poset() == b.poset())) throw PosetMismatch("block matrices over different posets");
  if (strict && (a.rows() != b.rows() || a.widths() != b.widths())) return false;
  return same_decomposition(decompose(a, rank_tol), decompose(b, rank_tol), sigma_tol, strict);
}

}  // namespace unitposet
