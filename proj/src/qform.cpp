#include "unitposet/qform.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>

#include "unitposet/errors.hpp"

namespace unitposet {

using BigInt = boost::multiprecision::cpp_int;

QuadraticForm::QuadraticForm(int n_vars, std::vector<std::int64_t> numerators,
                             std::int64_t denominator)
    : n_(n_vars), num_(std::move(numerators)), den_(denominator) {
  if (n_ < 0 || num_.size() != static_cast<std::size_t>(n_ * n_))
    throw DimensionMismatch("gram matrix does not match n_vars");
  if (den_ != 1 && den_ != 2) throw std::invalid_argument("denominator must be 1 or 2");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (numerator(i, j) != numerator(j, i)) throw std::invalid_argument("gram matrix not symmetric");
  // An integral form needs an integer diagonal.
  for (int i = 0; i < n_; ++i)
    if (numerator(i, i) % den_ != 0) throw std::invalid_argument("diagonal entry is not an integer");
  if (den_ == 2) {
    bool all_even = true;
    for (auto v : num_) all_even = all_even && v % 2 == 0;
    if (all_even) {
      for (auto& v : num_) v /= 2;
      den_ = 1;
    }
  }
}

namespace {

QuadraticForm tits_like(const Poset& p, std::int64_t diag, std::int64_t cross, std::int64_t den) {
  const int t = p.size(), n = t + 1;
  std::vector<std::int64_t> g(static_cast<std::size_t>(n * n), 0);
  auto set = [&](int i, int j, std::int64_t v) {
    g[static_cast<std::size_t>(i * n + j)] = v;
    g[static_cast<std::size_t>(j * n + i)] = v;
  };
  set(0, 0, den);
  for (int i = 1; i <= t; ++i) {
    set(i, i, diag);
    set(0, i, -cross);
  }
  for (auto [i, j] : p.relations()) set(i + 1, j + 1, cross);
  return QuadraticForm(n, std::move(g), den);
}

}  // namespace

QuadraticForm u_form(const Poset& p) { return tits_like(p, 2, 1, 1); }
QuadraticForm q_form(const Poset& p) { return tits_like(p, 2, 1, 2); }

std::int64_t evaluate(const QuadraticForm& f, std::span<const std::int64_t> z) {
  const int n = f.n_vars();
  if (z.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("vector has length " + std::to_string(z.size()) + ", form has " +
                            std::to_string(n) + " variables");
  // 128-bit accumulation with overflow checks; exact whenever it returns.
  __int128 acc = 0;
  for (int i = 0; i < n; ++i) {
    const __int128 zi = z[static_cast<std::size_t>(i)];
    if (zi == 0) continue;
    __int128 row = 0;
    for (int j = 0; j < n; ++j) {
      __int128 term;
      if (__builtin_mul_overflow(static_cast<__int128>(f.numerator(i, j)), z[static_cast<std::size_t>(j)], &term) ||
          __builtin_add_overflow(row, term, &row))
        throw std::overflow_error("form evaluation overflows");
    }
    __int128 term;
    if (__builtin_mul_overflow(row, zi, &term) || __builtin_add_overflow(acc, term, &acc))
      throw std::overflow_error("form evaluation overflows");
  }
  if (acc % f.denominator() != 0) throw std::logic_error("form value is not an integer");
  acc /= f.denominator();
  if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("form value exceeds 64 bits");
  return static_cast<std::int64_t>(acc);
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PD";
    case Definiteness::PositiveSemidefinite: return "PSD";
    case Definiteness::Indefinite: return "INDEFINITE";
  }
  return "?";
}

namespace {

// Berkowitz: coefficients c_0..c_n of det(xI - A), c_0 = 1.
std::vector<BigInt> charpoly(const std::vector<BigInt>& a, int n) {
  auto A = [&](int i, int j) -> const BigInt& { return a[static_cast<std::size_t>(i * n + j)]; };
  std::vector<BigInt> v{1};
  for (int r = 0; r < n; ++r) {
    // Toeplitz column for the leading (r+1)x(r+1) block:
    // [1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C].
    std::vector<BigInt> col(static_cast<std::size_t>(r + 2));
    col[0] = 1;
    col[1] = -A(r, r);
    std::vector<BigInt> w(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = A(i, r);
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += A(r, i) * w[static_cast<std::size_t>(i)];
      col[static_cast<std::size_t>(k + 2)] = -dot;
      std::vector<BigInt> next(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) next[static_cast<std::size_t>(i)] += A(i, j) * w[static_cast<std::size_t>(j)];
      w.swap(next);
    }
    std::vector<BigInt> out(static_cast<std::size_t>(r + 2), 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        out[static_cast<std::size_t>(i)] += col[static_cast<std::size_t>(i - j)] * v[static_cast<std::size_t>(j)];
    v.swap(out);
  }
  return v;
}

std::vector<BigInt> minor_sums(const QuadraticForm& f) {
  const int n = f.n_vars();
  std::vector<BigInt> a;
  a.reserve(f.numerators().size());
  for (auto x : f.numerators()) a.emplace_back(x);
  auto c = charpoly(a, n);
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return c;
}

}  // namespace

std::vector<std::string> principal_minor_sums(const QuadraticForm& f) {
  std::vector<std::string> out;
  for (const auto& e : minor_sums(f)) out.push_back(e.str());
  return out;
}

Definiteness definiteness(const QuadraticForm& f) {
  bool positive = true;
  for (const auto& e : minor_sums(f)) {
    if (e < 0) return Definiteness::Indefinite;
    if (e == 0) positive = false;
  }
  return positive ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefinite;
}

std::optional<std::vector<std::int64_t>> weak_counterexample(const QuadraticForm& f, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  const int n = f.n_vars();
  std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
  // Odometer over {0..bound}^n, last coordinate fastest; skips z = 0.
  while (true) {
    int pos = n - 1;
    while (pos >= 0 && z[static_cast<std::size_t>(pos)] == bound) z[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return std::nullopt;
    ++z[static_cast<std::size_t>(pos)];
    if (evaluate(f, z) <= 0) return z;
  }
}

bool doubling_identity_check(const Poset& p, std::span<const std::int64_t> z) {
  const int t = p.size();
  if (z.size() != static_cast<std::size_t>(t + 1))
    throw DimensionMismatch("vector must have length t+1");
  std::vector<std::int64_t> doubled(z.begin(), z.end());
  doubled.insert(doubled.end(), z.begin() + 1, z.end());
  return evaluate(u_form(p), z) == evaluate(q_form(disjoint_union(p, p)), doubled);
}

std::int64_t param_balance(const Poset& p, std::int64_t m, std::span<const std::int64_t> widths) {
  if (widths.size() != static_cast<std::size_t>(p.size()))
    throw DimensionMismatch("width vector must have length t");
  std::int64_t rs = m * m, in_a = 0;
  for (auto w : widths) {
    if (w < 0) throw std::invalid_argument("negative width");
    rs += 2 * w * w;
    in_a += 2 * m * w;
  }
  for (auto [i, j] : p.relations())
    rs += 2 * widths[static_cast<std::size_t>(i)] * widths[static_cast<std::size_t>(j)];
  const std::int64_t balance = rs - in_a;

  std::vector<std::int64_t> z{m};
  z.insert(z.end(), widths.begin(), widths.end());
  if (balance != evaluate(u_form(p), z))
    throw std::logic_error("parameter count disagrees with u_P");
  return balance;
}

}  // namespace unitposet
