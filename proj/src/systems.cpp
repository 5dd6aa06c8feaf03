#include "unitposet/systems.hpp"

#include <sstream>

#include "unitposet/errors.hpp"

namespace unitposet {

namespace {

CMatrix hcat(const std::vector<const CMatrix*>& parts, int rows) {
  Eigen::Index cols = 0;
  for (const auto* p : parts) cols += p->cols();
  CMatrix out(rows, cols);
  Eigen::Index c = 0;
  for (const auto* p : parts) {
    out.middleCols(c, p->cols()) = *p;
    c += p->cols();
  }
  return out;
}

CMatrix orthonormal_span(const CMatrix& m, double tol) {
  return range_basis(m, tol * spectral_norm(m));
}

}  // namespace

SubspaceSystem::SubspaceSystem(Poset poset, int ambient_dim, std::vector<CMatrix> spans)
    : poset_(std::move(poset)), m_(ambient_dim), spans_(std::move(spans)) {
  if (m_ < 0) throw DimensionMismatch("negative ambient dimension");
  if (static_cast<int>(spans_.size()) != poset_.size())
    throw DimensionMismatch("expected one spanning set per poset element");
  for (std::size_t i = 0; i < spans_.size(); ++i)
    if (spans_[i].rows() != m_)
      throw DimensionMismatch("spanning set " + std::to_string(i + 1) + " does not live in C^" +
                              std::to_string(m_));
}

int SubspaceSystem::dim(int i, double tol) const { return rank_tol(span(i), tol); }

void SubspaceSystem::check_inclusions(double tol) const {
  for (auto [i, j] : poset_.relations()) {
    const CMatrix& a = span(i);
    if (a.cols() == 0) continue;
    const double norm = spectral_norm(a);
    if (norm == 0.0) continue;
    const CMatrix basis = orthonormal_span(span(j), tol);
    const CMatrix residual = a - basis * (basis.adjoint() * a);
    if (spectral_norm(residual) > tol * norm)
      throw InclusionViolation("U_" + std::to_string(i + 1) + " is not inside U_" +
                               std::to_string(j + 1));
  }
}

SubspaceSystem SubspaceSystem::rotated(const CMatrix& q) const {
  std::vector<CMatrix> spans;
  for (const auto& s : spans_) spans.emplace_back(q * s);
  return SubspaceSystem(poset_, m_, std::move(spans));
}

SubspaceSystem f_of(const BlockMatrix& a) {
  const Poset& p = a.poset();
  std::vector<CMatrix> spans;
  for (int i = 0; i < p.size(); ++i) {
    std::vector<const CMatrix*> parts;
    for (int j = 0; j < p.size(); ++j)
      if (p.precedes_or_equal(j, i)) parts.push_back(&a.strip(j));
    spans.push_back(hcat(parts, a.rows()));
  }
  return SubspaceSystem(p, a.rows(), std::move(spans));
}

BlockMatrix matrix_of(const SubspaceSystem& u, double tol) {
  u.check_inclusions(tol);
  const Poset& p = u.poset();
  const int m = u.ambient_dim();
  std::vector<CMatrix> strips;
  for (int i = 0; i < p.size(); ++i) {
    std::vector<const CMatrix*> below;
    for (int j = 0; j < i; ++j)
      if (p.precedes(j, i)) below.push_back(&u.span(j));
    const CMatrix lower = orthonormal_span(hcat(below, m), tol);
    const CMatrix own = orthonormal_span(u.span(i), tol);
    // Both bases are orthonormal, so the residual is on the unit scale.
    const CMatrix fresh = own - lower * (lower.adjoint() * own);
    strips.push_back(range_basis(fresh, tol));
  }
  return BlockMatrix(p, m, std::move(strips));
}

SubspaceSystem orth_direct_sum(const SubspaceSystem& u, const SubspaceSystem& v) {
  if (!(u.poset() == v.poset())) throw PosetMismatch("orthogonal sum over different posets");
  std::vector<CMatrix> spans;
  for (int i = 0; i < u.poset().size(); ++i) spans.push_back(direct_sum(u.span(i), v.span(i)));
  return SubspaceSystem(u.poset(), u.ambient_dim() + v.ambient_dim(), std::move(spans));
}

std::string to_string(const SystemSummand& s) {
  std::ostringstream os;
  switch (s.kind) {
    case SystemSummand::Kind::Fk: os << "F_" << s.k + 1; break;
    case SystemSummand::Kind::F: os << "F"; break;
    case SystemSummand::Kind::Gks: os << "G_" << s.k + 1 << "(" << s.sigma << ")"; break;
    case SystemSummand::Kind::Gk: os << "G_" << s.k + 1; break;
  }
  return os.str();
}

SubspaceSystem system_summand(const SystemSummand& s, const Poset& p) {
  if (!semichain_blocks(p)) throw InvalidSummand("system summands need a semichain");
  const int t = p.size();
  const bool is_g = s.kind == SystemSummand::Kind::Gks || s.kind == SystemSummand::Kind::Gk;
  if (s.kind != SystemSummand::Kind::F) {
    if (s.k < 0 || s.k >= t || (is_g && s.k + 1 >= t))
      throw InvalidSummand(to_string(s) + " index out of range");
    if (is_g && p.precedes(s.k, s.k + 1))
      throw InvalidSummand(to_string(s) + " needs p_k not below p_{k+1}");
    if (s.kind == SystemSummand::Kind::Gks && !(s.sigma > 0.0))
      throw InvalidSummand("G_{k,sigma} needs sigma > 0");
  }
  const CMatrix line = CMatrix::Ones(1, 1);
  std::vector<CMatrix> spans;
  switch (s.kind) {
    case SystemSummand::Kind::F:
      spans.assign(static_cast<std::size_t>(t), CMatrix(1, 0));
      return SubspaceSystem(p, 1, std::move(spans));
    case SystemSummand::Kind::Fk:
    case SystemSummand::Kind::Gk:
      for (int i = 0; i < t; ++i) {
        const bool zero = i < s.k || (s.kind == SystemSummand::Kind::Gk && i == s.k + 1);
        spans.push_back(zero ? CMatrix(1, 0) : line);
      }
      return SubspaceSystem(p, 1, std::move(spans));
    case SystemSummand::Kind::Gks:
      for (int i = 0; i < t; ++i) {
        if (i < s.k) {
          spans.emplace_back(2, 0);
        } else if (i == s.k) {
          CMatrix v(2, 1);
          v << 1.0, 0.0;
          spans.push_back(v);
        } else if (i == s.k + 1) {
          CMatrix v(2, 1);
          v << s.sigma, 1.0;
          spans.push_back(v);
        } else {
          spans.push_back(CMatrix::Identity(2, 2));
        }
      }
      return SubspaceSystem(p, 2, std::move(spans));
  }
  throw InvalidSummand("unknown summand kind");
}

std::optional<SystemSummand> to_system_summand(const Summand& s, const Poset& p) {
  using K = SystemSummand::Kind;
  switch (s.kind) {
    case Summand::Kind::E: {
      const bool pair_head = s.k + 1 < p.size() && !p.precedes(s.k, s.k + 1);
      return SystemSummand{pair_head ? K::Gk : K::Fk, s.k, 0.0};
    }
    case Summand::Kind::F: return SystemSummand{K::F, 0, 0.0};
    case Summand::Kind::G: return SystemSummand{K::Gks, s.k, s.sigma};
    case Summand::Kind::H: return SystemSummand{K::Fk, s.k, 0.0};
    case Summand::Kind::L: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<SystemSummand> to_system_summands(const Decomposition& d, const Poset& p) {
  std::vector<SystemSummand> out;
  for (const auto& s : d.summands())
    if (auto x = to_system_summand(s, p)) out.push_back(*x);
  return out;
}

IsometryResult isometric(const SubspaceSystem& u, const SubspaceSystem& v, double rank_tol,
                         double sigma_tol) {
  if (!(u.poset() == v.poset())) throw PosetMismatch("systems over different posets");
  if (!semichain_blocks(u.poset())) throw WildPoset("poset is not a semichain; isometry undecided");
  IsometryResult res;
  res.first = decompose(matrix_of(u, rank_tol), rank_tol);
  res.second = decompose(matrix_of(v, rank_tol), rank_tol);
  res.isometric = same_decomposition(res.first, res.second, sigma_tol, false);
  res.first_summands = to_system_summands(res.first, u.poset());
  res.second_summands = to_system_summands(res.second, v.poset());
  return res;
}

}  // namespace unitposet
