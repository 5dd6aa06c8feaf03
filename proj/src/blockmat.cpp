#include "unitposet/blockmat.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "unitposet/errors.hpp"

namespace unitposet {

BlockMatrix::BlockMatrix(Poset poset, int rows, std::vector<CMatrix> strips)
    : poset_(std::move(poset)), rows_(rows), strips_(std::move(strips)) {
  if (rows_ < 0) throw DimensionMismatch("negative row count");
  if (static_cast<int>(strips_.size()) != poset_.size())
    throw DimensionMismatch("expected " + std::to_string(poset_.size()) + " strips, got " +
                            std::to_string(strips_.size()));
  for (std::size_t i = 0; i < strips_.size(); ++i)
    if (strips_[i].rows() != rows_)
      throw DimensionMismatch("strip " + std::to_string(i + 1) + " has " +
                              std::to_string(strips_[i].rows()) + " rows, expected " +
                              std::to_string(rows_));
}

BlockMatrix BlockMatrix::empty(Poset poset, int rows) {
  std::vector<CMatrix> strips(static_cast<std::size_t>(poset.size()), CMatrix(rows, 0));
  return BlockMatrix(std::move(poset), rows, std::move(strips));
}

BlockMatrix BlockMatrix::from_full(Poset poset, const CMatrix& full, std::span<const int> widths) {
  if (widths.size() != static_cast<std::size_t>(poset.size()))
    throw DimensionMismatch("width vector must have one entry per element");
  if (std::accumulate(widths.begin(), widths.end(), 0) != full.cols())
    throw DimensionMismatch("widths do not add up to the column count");
  std::vector<CMatrix> strips;
  int col = 0;
  for (int w : widths) {
    strips.emplace_back(full.middleCols(col, w));
    col += w;
  }
  return BlockMatrix(std::move(poset), static_cast<int>(full.rows()), std::move(strips));
}

std::vector<int> BlockMatrix::widths() const {
  std::vector<int> w;
  for (const auto& s : strips_) w.push_back(static_cast<int>(s.cols()));
  return w;
}

int BlockMatrix::total_width() const {
  int n = 0;
  for (const auto& s : strips_) n += static_cast<int>(s.cols());
  return n;
}

int BlockMatrix::offset(int i) const {
  int n = 0;
  for (int j = 0; j < i; ++j) n += static_cast<int>(strips_[static_cast<std::size_t>(j)].cols());
  return n;
}

CMatrix BlockMatrix::full() const {
  CMatrix out(rows_, total_width());
  int col = 0;
  for (const auto& s : strips_) {
    out.middleCols(col, s.cols()) = s;
    col += static_cast<int>(s.cols());
  }
  return out;
}

int Summand::rows() const {
  switch (kind) {
    case Kind::E: case Kind::F: case Kind::H: return 1;
    case Kind::G: return 2;
    case Kind::L: return 0;
  }
  return 0;
}

std::string to_string(const Summand& s) {
  std::ostringstream os;
  switch (s.kind) {
    case Summand::Kind::E: os << "E" << s.k + 1; break;
    case Summand::Kind::F: os << "F"; break;
    case Summand::Kind::G: os << "G" << s.k + 1 << "(" << s.sigma << ")"; break;
    case Summand::Kind::H: os << "H" << s.k + 1; break;
    case Summand::Kind::L: os << "L" << s.k + 1; break;
  }
  return os.str();
}

void validate_summand(const Summand& s, const Poset& p) {
  const int t = p.size();
  switch (s.kind) {
    case Summand::Kind::F: return;
    case Summand::Kind::E:
    case Summand::Kind::L:
      if (s.k < 0 || s.k >= t) throw InvalidSummand(to_string(s) + " index out of range");
      return;
    case Summand::Kind::G:
      if (!(s.sigma > 0.0)) throw InvalidSummand("G needs sigma > 0");
      [[fallthrough]];
    case Summand::Kind::H:
      if (s.k < 0 || s.k + 1 >= t) throw InvalidSummand(to_string(s) + " index out of range");
      if (p.precedes(s.k, s.k + 1))
        throw InvalidSummand(to_string(s) + " needs p_" + std::to_string(s.k + 1) +
                             " not below p_" + std::to_string(s.k + 2));
      return;
  }
}

BlockMatrix summand_matrix(const Summand& s, const Poset& p) {
  validate_summand(s, p);
  const int rows = s.rows();
  std::vector<CMatrix> strips(static_cast<std::size_t>(p.size()), CMatrix(rows, 0));
  auto strip = [&](int i) -> CMatrix& { return strips[static_cast<std::size_t>(i)]; };
  switch (s.kind) {
    case Summand::Kind::F: break;
    case Summand::Kind::E: strip(s.k) = CMatrix::Ones(1, 1); break;
    case Summand::Kind::L: strip(s.k) = CMatrix(0, 1); break;
    case Summand::Kind::H:
      strip(s.k) = CMatrix::Ones(1, 1);
      strip(s.k + 1) = CMatrix::Ones(1, 1);
      break;
    case Summand::Kind::G:
      strip(s.k) = CMatrix(2, 1);
      strip(s.k) << 1.0, 0.0;
      strip(s.k + 1) = CMatrix(2, 1);
      strip(s.k + 1) << s.sigma, 1.0;
      break;
  }
  return BlockMatrix(p, rows, std::move(strips));
}

BlockMatrix block_direct_sum(const BlockMatrix& a, const BlockMatrix& b) {
  if (!(a.poset() == b.poset())) throw PosetMismatch("block direct sum over different posets");
  std::vector<CMatrix> strips;
  for (int i = 0; i < a.strip_count(); ++i) strips.push_back(direct_sum(a.strip(i), b.strip(i)));
  return BlockMatrix(a.poset(), a.rows() + b.rows(), std::move(strips));
}

BlockMatrix assemble(std::span<const Summand> summands, const Poset& p) {
  BlockMatrix acc = BlockMatrix::empty(p);
  for (const auto& s : summands) acc = block_direct_sum(acc, summand_matrix(s, p));
  return acc;
}

bool has_admissible_pattern(const Poset& p, std::span<const int> widths, const CMatrix& s) {
  const int t = p.size();
  std::vector<int> off(static_cast<std::size_t>(t + 1), 0);
  for (int i = 0; i < t; ++i) off[static_cast<std::size_t>(i + 1)] = off[static_cast<std::size_t>(i)] + widths[static_cast<std::size_t>(i)];
  if (s.rows() != off.back() || s.cols() != off.back()) return false;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j || p.precedes(i, j)) continue;
      auto block = s.block(off[static_cast<std::size_t>(i)], off[static_cast<std::size_t>(j)],
                           widths[static_cast<std::size_t>(i)], widths[static_cast<std::size_t>(j)]);
      for (Eigen::Index c = 0; c < block.cols(); ++c)
        for (Eigen::Index r = 0; r < block.rows(); ++r)
          if (block(r, c) != cplx(0.0)) return false;
    }
  return true;
}

BlockMatrix admissible_transform(const BlockMatrix& a, const CMatrix& r, const CMatrix& s) {
  const int m = a.rows(), n = a.total_width();
  if (r.rows() != m || r.cols() != m) throw DimensionMismatch("R must be m x m");
  if (s.rows() != n || s.cols() != n) throw DimensionMismatch("S must be sum(n_i) x sum(n_i)");
  if (!is_unitary(r, 1e-9)) throw NotUnitary("R is not unitary");
  const auto widths = a.widths();
  if (!has_admissible_pattern(a.poset(), widths, s))
    throw NotAdmissible("S has a nonzero block (i, j) with p_i not below p_j");
  if (n > 0 && rank_tol(s, 1e-12) < n) throw Singular("S is singular");
  return BlockMatrix::from_full(a.poset(), r * a.full() * s, widths);
}

AdmissiblePair random_admissible(const Poset& p, int rows, std::span<const int> widths,
                                 std::uint64_t seed) {
  const int t = p.size();
  if (widths.size() != static_cast<std::size_t>(t)) throw DimensionMismatch("one width per element");
  std::mt19937_64 rng(seed);
  AdmissiblePair out;
  out.r = random_unitary(rows, rng);
  const int n = std::accumulate(widths.begin(), widths.end(), 0);
  out.s = CMatrix::Zero(n, n);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  int oi = 0;
  for (int i = 0; i < t; ++i) {
    const int wi = widths[static_cast<std::size_t>(i)];
    int oj = 0;
    for (int j = 0; j < t; ++j) {
      const int wj = widths[static_cast<std::size_t>(j)];
      if (i == j) {
        CMatrix u = random_unitary(wi, rng), v = random_unitary(wi, rng);
        Eigen::VectorXcd d(wi);
        for (int k = 0; k < wi; ++k) d(k) = scale(rng);
        out.s.block(oi, oj, wi, wj) = u * d.asDiagonal() * v;
      } else if (p.precedes(i, j)) {
        out.s.block(oi, oj, wi, wj) = 0.3 * random_gaussian(wi, wj, rng);
      }
      oj += wj;
    }
    oi += wi;
  }
  return out;
}

}  // namespace unitposet
