#include "tcore/coredist.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "tcore/counting.hpp"

namespace tcore {

namespace {

void require_t(int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
}

int runner_to_abacus(int i, int rows, int t) { return ((i - rows) % t + t) % t; }

}  // namespace

// --- odometer --------------------------------------------------------------------

CompositionOdometer::CompositionOdometer(std::vector<int> bounds, int total)
    : bounds_(std::move(bounds)), values_(bounds_.size(), 0), total_(total) {
  const std::int64_t capacity = std::accumulate(bounds_.begin(), bounds_.end(), std::int64_t{0});
  if (total < 0 || total > capacity) {
    done_ = true;
    return;
  }
  fill_suffix(0, total);
}

// Lexicographically smallest fill of positions [from, end) summing to amount:
// push as much as possible to the back.
void CompositionOdometer::fill_suffix(std::size_t from, int amount) {
  for (std::size_t i = values_.size(); i-- > from;) {
    values_[i] = std::min(bounds_[i], amount);
    amount -= values_[i];
  }
}

void CompositionOdometer::advance() {
  if (done_) return;
  int suffix = 0;
  for (std::size_t k = values_.size(); k-- > 0;) {
    if (k + 1 < values_.size() && values_[k] < bounds_[k] && suffix >= 1) {
      ++values_[k];
      fill_suffix(k + 1, suffix - 1);
      return;
    }
    suffix += values_[k];
  }
  done_ = true;
}

// --- distributions -----------------------------------------------------------

Rational DiscreteDistribution::mean() const {
  Rational m = 0;
  for (const auto& atom : support) m += Rational(static_cast<long>(atom.value)) * atom.probability;
  m.canonicalize();
  return m;
}

Rational DiscreteDistribution::total_mass() const {
  Rational m = 0;
  for (const auto& atom : support) m += atom.probability;
  m.canonicalize();
  return m;
}

// --- fixed cores -------------------------------------------------------------------

std::vector<int> core_runner_sizes(const Partition& rho, Box b, int t) {
  require_t(t);
  if (!fits_in_box(rho, b)) throw std::invalid_argument("core does not fit in the box");
  if (t_core_fast(rho, t) != rho) throw std::invalid_argument("partition is not a t-core");
  return runner_split(rectangle_word(rho, b), t).sizes();
}

CountPolynomial fixed_core_genfun(const Partition& rho, Box b, int t) {
  const auto a = core_runner_sizes(rho, b, t);
  const auto n = runner_lengths(b, t);
  CountPolynomial g = CountPolynomial::monomial(static_cast<std::size_t>(rho.size()));
  for (int i = 0; i < t; ++i) g *= gaussian_binomial(n[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)], t);
  return g;
}

BigInt fixed_core_count(const Partition& rho, Box b, int t) {
  const auto a = core_runner_sizes(rho, b, t);
  const auto n = runner_lengths(b, t);
  BigInt count = 1;
  for (int i = 0; i < t; ++i) count *= binomial(n[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]);
  return count;
}

void for_each_with_core(const Partition& rho, Box b, int t,
                        const std::function<void(const Partition&)>& visit) {
  const auto a = core_runner_sizes(rho, b, t);
  const auto n = runner_lengths(b, t);
  // Word runner i is abacus runner (i - r) mod t; its quotient part fits in
  // Box(a_i, n_i - a_i).
  std::vector<Partition> quotient(static_cast<std::size_t>(t));
  const std::function<void(int)> recurse = [&](int i) {
    if (i == t) {
      visit(littlewood_compose(rho, quotient, t));
      return;
    }
    const int j = runner_to_abacus(i, b.rows, t);
    const Box inner{a[static_cast<std::size_t>(i)], n[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)]};
    for (const auto& mu : BoxPartitions(inner)) {
      quotient[static_cast<std::size_t>(j)] = mu;
      recurse(i + 1);
    }
  };
  recurse(0);
}

std::vector<Partition> enumerate_with_core(const Partition& rho, Box b, int t) {
  std::vector<Partition> out;
  for_each_with_core(rho, b, t, [&](const Partition& lambda) { out.push_back(lambda); });
  return out;
}

// --- hypergeometric law ---------------------------------------------------------

HypergeometricMoments hypergeom_moments(Box b, int t, int runner) {
  require_t(t);
  if (runner < 0 || runner >= t) throw std::invalid_argument("runner index out of range");
  const long r = b.rows;
  const long s = b.cols;
  const long total = r + s;
  const long ni = runner_lengths(b, t)[static_cast<std::size_t>(runner)];
  HypergeometricMoments m{Rational(0), Rational(0)};
  if (total == 0) return m;
  m.mean = Rational(BigInt(r * ni), BigInt(total));
  m.mean.canonicalize();
  if (total > 1) {
    m.variance = Rational(BigInt(r) * s * ni * (total - ni), BigInt(total) * total * (total - 1));
    m.variance.canonicalize();
  }
  return m;
}

void for_each_core_probability(Box b, int t, const std::function<void(const CoreProbability&)>& visit) {
  require_t(t);
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  const auto n = runner_lengths(b, t);
  const BigInt total = binomial(b.perimeter(), b.rows);
  CoreProbability entry;
  entry.composition.bounds = n;
  entry.composition.total = b.rows;
  for (CompositionOdometer odo(n, b.rows); !odo.done(); odo.advance()) {
    const auto a = odo.values();
    BigInt weight = 1;
    for (int i = 0; i < t; ++i) weight *= binomial(n[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]);
    entry.composition.values.assign(a.begin(), a.end());
    entry.descriptor = descriptor_from_runner_sizes(b.rows, t, a);
    entry.probability = Rational(weight, total);
    entry.probability.canonicalize();
    visit(entry);
  }
}

std::vector<CoreProbability> core_pmf(Box b, int t) {
  std::vector<CoreProbability> out;
  for_each_core_probability(b, t, [&](const CoreProbability& e) { out.push_back(e); });
  return out;
}

namespace {

DiscreteDistribution from_size_map(const std::map<std::int64_t, Rational>& masses) {
  DiscreteDistribution d;
  for (const auto& [size, p] : masses) {
    Rational q = p;
    q.canonicalize();
    d.support.push_back({size, q});
  }
  return d;
}

std::map<std::int64_t, BigInt> weighted_size_counts_parallel(Box b, int t, Execution exec) {
  const auto n = runner_lengths(b, t);
  const int r = b.rows;
  std::vector<std::vector<BigInt>> choose(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i)
    for (int a = 0; a <= n[static_cast<std::size_t>(i)]; ++a)
      choose[static_cast<std::size_t>(i)].push_back(binomial(n[static_cast<std::size_t>(i)], a));

  std::vector<std::pair<int, int>> prefixes;
  for (int a0 = 0; a0 <= std::min(n[0], r); ++a0)
    for (int a1 = 0; a1 <= std::min(n[1], r - a0); ++a1) prefixes.emplace_back(a0, a1);
  const std::vector<int> tail_bounds(n.begin() + 2, n.end());

  std::map<std::int64_t, BigInt> merged;
  std::mutex merge_mutex;
  parallel_for_chunks(static_cast<std::int64_t>(prefixes.size()), 1, exec, [&](std::int64_t begin, std::int64_t end) {
    std::map<std::int64_t, BigInt> local;
    std::vector<int> a(static_cast<std::size_t>(t), 0);
    BigInt weight;
    for (std::int64_t idx = begin; idx < end; ++idx) {
      const auto [a0, a1] = prefixes[static_cast<std::size_t>(idx)];
      a[0] = a0;
      a[1] = a1;
      const BigInt head = choose[0][static_cast<std::size_t>(a0)] * choose[1][static_cast<std::size_t>(a1)];
      for (CompositionOdometer odo(tail_bounds, r - a0 - a1); !odo.done(); odo.advance()) {
        weight = head;
        const auto tail = odo.values();
        for (std::size_t k = 0; k < tail.size(); ++k) {
          a[k + 2] = tail[k];
          weight *= choose[k + 2][static_cast<std::size_t>(tail[k])];
        }
        local[core_size(descriptor_from_runner_sizes(r, t, a))] += weight;
      }
    }
    std::lock_guard lock(merge_mutex);
    for (auto& [size, w] : local) merged[size] += w;
  });
  return merged;
}

}  // namespace

DiscreteDistribution exact_core_size_distribution(Box b, int t, std::uint64_t budget, Execution exec) {
  require_t(t);
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  const BigInt cores = count_t_cores(b, t);
  if (cores > BigInt(std::to_string(budget)))
    throw BudgetExceeded("number of t-cores " + cores.get_str() + " exceeds the composition budget " +
                         std::to_string(budget));

  std::map<std::int64_t, Rational> masses;
  if (exec == Execution::serial) {
    for_each_core_probability(b, t, [&](const CoreProbability& e) { masses[core_size(e.descriptor)] += e.probability; });
    return from_size_map(masses);
  }
  const BigInt total = binomial(b.perimeter(), b.rows);
  for (const auto& [size, w] : weighted_size_counts_parallel(b, t, exec)) masses[size] = Rational(w, total);
  return from_size_map(masses);
}

Rational expected_core_size(Box b, int t) {
  require_t(t);
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  const long total = b.perimeter();
  if (total <= 1) return Rational(0);
  const long rem = total % t;
  const BigInt bracket = binomial(rem, 2) + BigInt(total / t) * binomial(t, 2);
  Rational e(BigInt(b.rows) * b.cols * bracket, BigInt(total) * (total - 1));
  e.canonicalize();
  return e;
}

}  // namespace tcore
