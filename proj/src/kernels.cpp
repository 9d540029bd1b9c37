#include "tcore/kernels.hpp"

#include <array>
#include <exception>
#include <mutex>
#include <stdexcept>

#include "tcore/abacus.hpp"

#ifdef TCORE_HAVE_OPENMP
#include <omp.h>
#endif

namespace tcore {

int worker_count() {
#ifdef TCORE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void parallel_for_chunks(std::int64_t count, std::int64_t chunk_size, Execution exec,
                         const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (count <= 0) return;
  if (chunk_size <= 0) throw std::invalid_argument("chunk size must be positive");
  const std::int64_t chunks = (count + chunk_size - 1) / chunk_size;
  if (exec == Execution::serial) {
    for (std::int64_t c = 0; c < chunks; ++c) body(c * chunk_size, std::min(count, (c + 1) * chunk_size));
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    try {
      body(c * chunk_size, std::min(count, (c + 1) * chunk_size));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

constexpr int kMaxTable = 67;

// Pascal triangle; entries saturate at UINT64_MAX.
const std::array<std::array<std::uint64_t, kMaxTable + 1>, kMaxTable + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxTable + 1>, kMaxTable + 1> c{};
    for (int n = 0; n <= kMaxTable; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        const std::uint64_t a = c[n - 1][k - 1];
        const std::uint64_t b = c[n - 1][k];
        c[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
      }
    }
    return c;
  }();
  return table;
}

std::uint64_t small_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return pascal()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<std::uint64_t> serial_reference_counts(Box b, int t) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(b.rows) * b.cols + 1, 0);
  for (const auto& lambda : BoxPartitions(b)) ++counts[static_cast<std::size_t>(t_core_fast(lambda, t).size())];
  return counts;
}

}  // namespace

std::vector<int> unrank_colex_subset(std::uint64_t rank, int k, int n) {
  if (n > kMaxTable) throw std::invalid_argument("unrank_colex_subset: n too large");
  if (rank >= small_binomial(n, k)) throw std::invalid_argument("unrank_colex_subset: rank out of range");
  std::vector<int> ones(static_cast<std::size_t>(k));
  int c = n - 1;
  for (int i = k; i >= 1; --i) {
    while (small_binomial(c, i) > rank) --c;
    ones[static_cast<std::size_t>(i - 1)] = c;
    rank -= small_binomial(c, i);
    --c;
  }
  return ones;
}

std::vector<std::uint64_t> exhaustive_core_size_counts(Box b, int t, Execution exec) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  if (exec == Execution::serial) return serial_reference_counts(b, t);

  const int n = b.perimeter();
  const int r = b.rows;
  if (n > kMaxTable || small_binomial(n, r) >= (std::uint64_t{1} << 62))
    throw std::invalid_argument("box too large for exhaustive enumeration");
  const auto total = static_cast<std::int64_t>(small_binomial(n, r));

  // Runner i of the word maps to abacus runner j = (i - r) mod t, with
  // p_j = a_i - base_i.
  std::vector<int> runner_of(static_cast<std::size_t>(t));
  std::vector<std::int64_t> base(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    runner_of[static_cast<std::size_t>(i)] = ((i - r) % t + t) % t;
    base[static_cast<std::size_t>(i)] = (r + t - 1 - i) / t;
  }
  const auto size_of = [&](const std::vector<int>& a) {
    std::int64_t twice = 0;
    for (int i = 0; i < t; ++i) {
      const std::int64_t p = a[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(i)];
      twice += p * (t * p + 2 * runner_of[static_cast<std::size_t>(i)]);
    }
    return static_cast<std::size_t>(twice / 2);
  };

  const std::size_t span = static_cast<std::size_t>(r) * b.cols + 1;
  std::vector<std::uint64_t> counts(span, 0);
  std::mutex merge_mutex;
  parallel_for_chunks(total, std::int64_t{1} << 15, exec, [&](std::int64_t begin, std::int64_t end) {
    std::vector<std::uint64_t> local(span, 0);
    std::vector<int> ones = unrank_colex_subset(static_cast<std::uint64_t>(begin), r, n);
    std::vector<int> a(static_cast<std::size_t>(t), 0);
    for (int pos : ones) ++a[static_cast<std::size_t>(pos % t)];
    for (std::int64_t idx = begin; idx < end; ++idx) {
      ++local[size_of(a)];
      if (idx + 1 == end) break;
      // Colex successor, keeping the runner sizes in step.
      for (std::size_t i = 0; i < ones.size(); ++i) {
        const int limit = (i + 1 < ones.size()) ? ones[i + 1] : n;
        if (ones[i] + 1 < limit) {
          --a[static_cast<std::size_t>(ones[i] % t)];
          ++ones[i];
          ++a[static_cast<std::size_t>(ones[i] % t)];
          for (std::size_t j = 0; j < i; ++j) {
            --a[static_cast<std::size_t>(ones[j] % t)];
            ones[j] = static_cast<int>(j);
            ++a[static_cast<std::size_t>(j % static_cast<std::size_t>(t))];
          }
          break;
        }
      }
    }
    std::lock_guard lock(merge_mutex);
    for (std::size_t k = 0; k < span; ++k) counts[k] += local[k];
  });
  return counts;
}

}  // namespace tcore
