#include "tcore/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_parts_with_zeros(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::int64_t Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool fits_in_box(const Partition& lambda, Box b) {
  return lambda.length() <= b.rows && lambda.largest() <= b.cols;
}

// --- box enumeration ---------------------------------------------------------

bool next_colex_subset(std::span<int> ones, int n) {
  const std::size_t k = ones.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? ones[i + 1] : n;
    if (ones[i] + 1 < limit) {
      ++ones[i];
      for (std::size_t j = 0; j < i; ++j) ones[j] = static_cast<int>(j);
      return true;
    }
  }
  return false;
}

Partition partition_from_one_positions(std::span<const int> ones) {
  // The k-th smallest 1 (0-based) sits at ones[k] = lambda_{r-k} + k.
  std::vector<int> parts;
  parts.reserve(ones.size());
  for (std::size_t k = ones.size(); k-- > 0;) {
    const int part = ones[k] - static_cast<int>(k);
    if (part == 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

BoxPartitions::iterator::iterator(Box b) : box_(b), done_(false) {
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  ones_.resize(static_cast<std::size_t>(b.rows));
  std::iota(ones_.begin(), ones_.end(), 0);
  materialize();
}

void BoxPartitions::iterator::materialize() { current_ = partition_from_one_positions(ones_); }

BoxPartitions::iterator& BoxPartitions::iterator::operator++() {
  if (!next_colex_subset(ones_, box_.rows + box_.cols)) {
    done_ = true;
    return *this;
  }
  materialize();
  return *this;
}

// --- Gaussian polynomials ------------------------------------------------------

CountPolynomial gaussian_binomial(int m, int k, int step) {
  if (step <= 0) throw std::invalid_argument("gaussian_binomial: step must be positive");
  if (m < 0 || k < 0) throw std::invalid_argument("gaussian_binomial: arguments must be nonnegative");
  if (k > m) return {};
  // Row of the q-Pascal triangle: rows[j] = [m' choose j]_q.
  // [m' choose j] = [m'-1 choose j-1] + q^j [m'-1 choose j].
  std::vector<CountPolynomial> row(static_cast<std::size_t>(k) + 1);
  row[0] = CountPolynomial{BigInt(1)};
  for (int mm = 1; mm <= m; ++mm) {
    for (int j = std::min(mm, k); j >= 1; --j) {
      auto& cur = row[static_cast<std::size_t>(j)];
      cur = row[static_cast<std::size_t>(j - 1)] + cur.shifted(static_cast<std::size_t>(j));
    }
  }
  return row[static_cast<std::size_t>(k)].substitute_power(static_cast<std::size_t>(step));
}

// --- rim hooks -------------------------------------------------------------------

namespace {

void require_t(int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
}

// Column lengths of the diagram given by parts.
std::vector<int> column_lengths(const std::vector<int>& parts) {
  std::vector<int> cols(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  return cols;
}

struct Cell {
  int row;
  int col;
};

// Returns the cell whose hook has length t, scanning rows in the order
// requested, or row = -1 if there is none.
Cell find_hook(const std::vector<int>& parts, const std::vector<int>& cols, int t,
               RimHookOrder order) {
  const int rows = static_cast<int>(parts.size());
  for (int step = 0; step < rows; ++step) {
    const int i = order == RimHookOrder::topmost_first ? step : rows - 1 - step;
    const int len = parts[static_cast<std::size_t>(i)];
    // Hook lengths strictly decrease along a row.
    for (int j = 0; j < len; ++j) {
      const int hook = (len - j - 1) + (cols[static_cast<std::size_t>(j)] - i - 1) + 1;
      if (hook == t) return {i, j};
      if (hook < t) break;
    }
  }
  return {-1, -1};
}

}  // namespace

bool is_border_strip(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  int first = -1;
  int last = -1;
  for (int i = 0; i < outer.length(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (inner[k] > outer[k]) return false;
    if (inner[k] < outer[k]) {
      if (first < 0) first = i;
      if (last >= 0 && last != i - 1) return false;  // gap between rows: disconnected
      last = i;
    }
  }
  if (first < 0) return false;
  for (int i = first; i < last; ++i) {
    const auto k = static_cast<std::size_t>(i);
    // Columns [inner, outer) of row i and row i+1 must share exactly one column:
    // none means disconnected, two or more means a 2x2 block.
    const int lo = std::max(inner[k], inner[k + 1]);
    const int hi = std::min(outer[k], outer[k + 1]);
    if (hi - lo != 1) return false;
  }
  return true;
}

RimHookRemoval remove_rim_hooks(const Partition& lambda, int t, RimHookOrder order) {
  require_t(t);
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  int removed = 0;
  for (;;) {
    const auto cols = column_lengths(parts);
    const Cell cell = find_hook(parts, cols, t, order);
    if (cell.row < 0) break;
    // The rim hook of cell (i, j) runs from the end of row i down to the
    // bottom of column j. Removing it shifts rows i..L-1 up by one cell.
    const int bottom = cols[static_cast<std::size_t>(cell.col)] - 1;
    std::vector<int> next = parts;
    for (int k = cell.row; k < bottom; ++k)
      next[static_cast<std::size_t>(k)] = parts[static_cast<std::size_t>(k + 1)] - 1;
    next[static_cast<std::size_t>(bottom)] = cell.col;
    Partition before = Partition(parts);
    Partition after = Partition::from_parts_with_zeros(next);
    if (before.size() - after.size() != t || !is_border_strip(before, after))
      throw std::logic_error("rim hook removal produced an invalid strip");
    parts.assign(after.parts().begin(), after.parts().end());
    ++removed;
  }
  return {Partition(std::move(parts)), removed};
}

Partition t_core_by_rim_hooks(const Partition& lambda, int t) {
  return remove_rim_hooks(lambda, t).core;
}

bool is_t_core(const Partition& lambda, int t) {
  require_t(t);
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  return find_hook(parts, column_lengths(parts), t, RimHookOrder::topmost_first).row < 0;
}

}  // namespace tcore
