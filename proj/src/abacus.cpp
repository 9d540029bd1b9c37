#include "tcore/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tcore {

namespace {

void require_t(int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

// Window covering [lo, hi) with 1s at the listed indices (all inside the range).
AbacusWindow window_from_ones(std::int64_t lo, std::int64_t hi, std::span<const std::int64_t> ones) {
  AbacusWindow w;
  w.start = lo;
  w.bits.assign(static_cast<std::size_t>(hi - lo), 0);
  for (auto k : ones) w.bits[static_cast<std::size_t>(k - lo)] = 1;
  return w;
}

}  // namespace

// --- AbacusWindow --------------------------------------------------------------

std::uint8_t AbacusWindow::at(std::int64_t index) const {
  if (index < start) return 1;
  const auto rel = static_cast<std::uint64_t>(index - start);
  return rel < bits.size() ? bits[rel] : 0;
}

std::int64_t AbacusWindow::offset() const {
  std::int64_t ones = std::count(bits.begin(), bits.end(), std::uint8_t{1});
  // Everything below start is 1: that is start ones on [0, start) if start > 0,
  // or -start cells of [start, 0) that would otherwise count as zeros.
  return start + ones;
}

AbacusWindow AbacusWindow::normalized() const {
  std::size_t lo = 0;
  std::size_t hi = bits.size();
  while (lo < hi && bits[lo] == 1) ++lo;
  while (hi > lo && bits[hi - 1] == 0) --hi;
  AbacusWindow w;
  w.start = start + static_cast<std::int64_t>(lo);
  w.bits.assign(bits.begin() + static_cast<std::ptrdiff_t>(lo),
                bits.begin() + static_cast<std::ptrdiff_t>(hi));
  if (w.bits.empty()) w.start = offset();  // justified: split point is the offset
  return w;
}

bool operator==(const AbacusWindow& a, const AbacusWindow& b) {
  const auto na = a.normalized();
  const auto nb = b.normalized();
  return na.start == nb.start && na.bits == nb.bits;
}

AbacusWindow to_abacus(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<std::int64_t> ones;
  ones.reserve(static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) ones.push_back(lambda[static_cast<std::size_t>(i - 1)] - i);
  return window_from_ones(-len, lambda.largest(), ones);
}

ChargedPartition from_abacus(const AbacusWindow& w) {
  const std::int64_t d = w.offset();
  std::vector<int> parts;
  std::int64_t k = 0;
  for (std::size_t idx = w.bits.size(); idx-- > 0;) {
    if (!w.bits[idx]) continue;
    ++k;
    const std::int64_t beta = w.start + static_cast<std::int64_t>(idx);
    parts.push_back(static_cast<int>(beta - d + k));
  }
  return {d, Partition::from_parts_with_zeros(std::move(parts))};
}

// --- rectangle words and runners ----------------------------------------------

RectangleWord rectangle_word(const Partition& lambda, Box b) {
  if (!fits_in_box(lambda, b)) throw std::invalid_argument("partition does not fit in the box");
  RectangleWord v{b, Bits(static_cast<std::size_t>(b.perimeter()), 0)};
  for (int i = 1; i <= b.rows; ++i)
    v.bits[static_cast<std::size_t>(lambda[static_cast<std::size_t>(i - 1)] - i + b.rows)] = 1;
  return v;
}

Partition partition_from_word(const RectangleWord& v) {
  if (v.bits.size() != static_cast<std::size_t>(v.box.perimeter()))
    throw std::invalid_argument("rectangle word has the wrong length");
  std::vector<int> ones;
  for (std::size_t k = 0; k < v.bits.size(); ++k)
    if (v.bits[k]) ones.push_back(static_cast<int>(k));
  if (ones.size() != static_cast<std::size_t>(v.box.rows))
    throw std::invalid_argument("rectangle word must contain exactly r ones");
  return partition_from_one_positions(ones);
}

std::vector<int> runner_lengths(Box b, int t) {
  require_t(t);
  std::vector<int> n(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) n[static_cast<std::size_t>(i)] = (b.perimeter() + t - 1 - i) / t;
  return n;
}

std::vector<int> RunnerDecomposition::sizes() const {
  std::vector<int> a;
  a.reserve(words.size());
  for (const auto& w : words) a.push_back(static_cast<int>(std::count(w.begin(), w.end(), 1)));
  return a;
}

RunnerDecomposition runner_split(const RectangleWord& v, int t) {
  require_t(t);
  RunnerDecomposition d{v.box, t, std::vector<Bits>(static_cast<std::size_t>(t))};
  for (std::size_t k = 0; k < v.bits.size(); ++k) d.words[k % static_cast<std::size_t>(t)].push_back(v.bits[k]);
  return d;
}

RectangleWord runner_merge(const RunnerDecomposition& d) {
  require_t(d.t);
  if (d.words.size() != static_cast<std::size_t>(d.t))
    throw std::invalid_argument("runner decomposition must have t words");
  const auto n = runner_lengths(d.box, d.t);
  int ones = 0;
  for (int i = 0; i < d.t; ++i) {
    const auto& w = d.words[static_cast<std::size_t>(i)];
    if (w.size() != static_cast<std::size_t>(n[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("runner word has the wrong length");
    ones += static_cast<int>(std::count(w.begin(), w.end(), 1));
  }
  if (ones != d.box.rows) throw std::invalid_argument("runner sizes must sum to r");
  RectangleWord v{d.box, Bits(static_cast<std::size_t>(d.box.perimeter()), 0)};
  for (std::size_t k = 0; k < v.bits.size(); ++k)
    v.bits[k] = d.words[k % static_cast<std::size_t>(d.t)][k / static_cast<std::size_t>(d.t)];
  return v;
}

bool is_justified(std::span<const std::uint8_t> word) {
  return std::is_sorted(word.begin(), word.end(), std::greater<>{});
}

// --- positions of justification ------------------------------------------------

CoreDescriptor descriptor_from_runner_sizes(int rows, int t, std::span<const int> sizes) {
  require_t(t);
  if (sizes.size() != static_cast<std::size_t>(t))
    throw std::invalid_argument("expected t runner sizes");
  CoreDescriptor c{t, std::vector<std::int64_t>(static_cast<std::size_t>(t), 0)};
  for (int i = 0; i < t; ++i) {
    const auto j = static_cast<std::size_t>(mod(i - rows, t));
    c.positions[j] = sizes[static_cast<std::size_t>(i)] - (rows + t - 1 - i) / t;
  }
  return c;
}

CoreDescriptor positions_of_justification(const RunnerDecomposition& d) {
  const auto a = d.sizes();
  return descriptor_from_runner_sizes(d.box.rows, d.t, a);
}

std::int64_t core_size(const CoreDescriptor& c) {
  require_t(c.t);
  if (c.positions.size() != static_cast<std::size_t>(c.t))
    throw std::invalid_argument("descriptor must have t positions");
  std::int64_t sum = 0;
  std::int64_t twice = 0;
  for (std::size_t j = 0; j < c.positions.size(); ++j) {
    const std::int64_t p = c.positions[j];
    sum += p;
    twice += p * (c.t * p + 2 * static_cast<std::int64_t>(j));
  }
  if (sum != 0) throw std::invalid_argument("positions of justification must sum to zero");
  if (twice % 2 != 0) throw std::logic_error("core size is not an integer");
  return twice / 2;
}

CoreDescriptor core_descriptor(const Partition& lambda, int t) {
  require_t(t);
  const std::int64_t len = lambda.length();
  CoreDescriptor c{t, std::vector<std::int64_t>(static_cast<std::size_t>(t), 0)};
  // Indices -len..-1 are zeros unless hit by a negative beta-number.
  for (std::int64_t k = -len; k < 0; ++k) --c.positions[static_cast<std::size_t>(mod(k, t))];
  for (std::int64_t i = 1; i <= len; ++i) {
    const std::int64_t beta = lambda[static_cast<std::size_t>(i - 1)] - i;
    ++c.positions[static_cast<std::size_t>(mod(beta, t))];
  }
  return c;
}

Partition core_from_descriptor(const CoreDescriptor& c) {
  core_size(c);  // validates t, arity and the zero sum
  const auto [lo_it, hi_it] = std::minmax_element(c.positions.begin(), c.positions.end());
  const std::int64_t m0 = *lo_it;
  std::vector<std::int64_t> ones;
  for (std::int64_t j = 0; j < c.t; ++j)
    for (std::int64_t m = m0; m < c.positions[static_cast<std::size_t>(j)]; ++m) ones.push_back(m * c.t + j);
  const auto result = from_abacus(window_from_ones(m0 * c.t, (*hi_it + 1) * c.t, ones));
  if (result.offset != 0) throw std::logic_error("descriptor abacus is not balanced");
  return result.partition;
}

Partition t_core_fast(const Partition& lambda, int t) {
  return core_from_descriptor(core_descriptor(lambda, t));
}

std::vector<Partition> t_quotient(const Partition& lambda, int t) {
  require_t(t);
  const AbacusWindow w = to_abacus(lambda);
  const std::int64_t m_lo = floor_div(w.start, t);
  const std::int64_t end = w.start + static_cast<std::int64_t>(w.bits.size());
  const std::int64_t m_hi = floor_div(end + t - 1, t);
  std::vector<Partition> quotient;
  quotient.reserve(static_cast<std::size_t>(t));
  for (std::int64_t j = 0; j < t; ++j) {
    AbacusWindow runner;
    runner.start = m_lo;
    for (std::int64_t m = m_lo; m < m_hi; ++m) runner.bits.push_back(w.at(m * t + j));
    quotient.push_back(from_abacus(runner).partition);
  }
  return quotient;
}

Partition littlewood_compose(const Partition& rho, std::span<const Partition> quotients, int t) {
  require_t(t);
  if (quotients.size() != static_cast<std::size_t>(t))
    throw std::invalid_argument("quotient must have t partitions");
  const CoreDescriptor c = core_descriptor(rho, t);
  if (core_from_descriptor(c) != rho) throw std::invalid_argument("rho is not a t-core");

  // Runner j carries psi^{-1}(p_j, mu^j): 1s at m = mu_i - i + p_j, i >= 1.
  std::int64_t m0 = 0;
  for (std::int64_t j = 0; j < t; ++j)
    m0 = std::min(m0, c.positions[static_cast<std::size_t>(j)] - quotients[static_cast<std::size_t>(j)].length());
  std::vector<std::int64_t> ones;
  std::int64_t hi = m0 * t;
  for (std::int64_t j = 0; j < t; ++j) {
    const auto& mu = quotients[static_cast<std::size_t>(j)];
    const std::int64_t p = c.positions[static_cast<std::size_t>(j)];
    for (std::int64_t i = 1; i <= p - m0; ++i) {
      const std::int64_t k = (mu[static_cast<std::size_t>(i - 1)] - i + p) * t + j;
      ones.push_back(k);
      hi = std::max(hi, k + 1);
    }
  }
  const auto result = from_abacus(window_from_ones(m0 * t, hi, ones));
  if (result.offset != 0) throw std::logic_error("composed abacus is not balanced");
  return result.partition;
}

}  // namespace tcore
