#include "unitposet/parallel.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace unitposet::par {

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

PosetVerdict verdict(const Poset& p) {
  return {is_chain(p), semichain_blocks(p).has_value(), definiteness(u_form(p))};
}

}  // namespace

std::vector<PosetVerdict> sweep_posets(std::span<const Poset> posets) {
  const auto n = static_cast<std::int64_t>(posets.size());
  std::vector<PosetVerdict> out(posets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = verdict(posets[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<PosetVerdict> sweep_posets_serial(std::span<const Poset> posets) {
  std::vector<PosetVerdict> out;
  out.reserve(posets.size());
  for (const auto& p : posets) out.push_back(verdict(p));
  return out;
}

std::vector<Decomposition> decompose_batch(std::span<const BlockMatrix> batch, double tol) {
  const auto n = static_cast<std::int64_t>(batch.size());
  std::vector<Decomposition> out(batch.size());
  std::vector<std::exception_ptr> errors(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    try {
      out[ui] = decompose(batch[ui], tol);
    } catch (...) {
      errors[ui] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<Decomposition> decompose_batch_serial(std::span<const BlockMatrix> batch, double tol) {
  std::vector<Decomposition> out;
  out.reserve(batch.size());
  for (const auto& a : batch) out.push_back(decompose(a, tol));
  return out;
}

std::optional<std::vector<std::int64_t>> weak_counterexample(const QuadraticForm& f, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  const int n = f.n_vars();
  const std::int64_t base = bound + 1;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::int64_t>::max() / base) throw std::overflow_error("search box too large");
    total *= base;
  }
  auto decode = [&](std::int64_t idx, std::vector<std::int64_t>& z) {
    for (int i = n - 1; i >= 0; --i) {
      z[static_cast<std::size_t>(i)] = idx % base;
      idx /= base;
    }
  };

  // One contiguous range of linear indices per thread, scanned with an
  // odometer up to the thread's first hit.
  std::int64_t first = total;
#pragma omp parallel reduction(min : first)
  {
    int threads = 1, me = 0;
#if defined(_OPENMP)
    threads = omp_get_num_threads();
    me = omp_get_thread_num();
#endif
    const std::int64_t chunk = (total - 1 + threads - 1) / threads;
    const std::int64_t lo = 1 + chunk * me;
    const std::int64_t hi = std::min(total, lo + chunk);
    std::vector<std::int64_t> z(static_cast<std::size_t>(n));
    if (lo < hi) decode(lo, z);
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      if (evaluate(f, z) <= 0) {
        first = idx;
        break;
      }
      for (int pos = n - 1; pos >= 0; --pos) {
        auto& d = z[static_cast<std::size_t>(pos)];
        if (++d < base) break;
        d = 0;
      }
    }
  }
  if (first == total) return std::nullopt;
  std::vector<std::int64_t> z(static_cast<std::size_t>(n));
  decode(first, z);
  return z;
}

}  // namespace unitposet::par
