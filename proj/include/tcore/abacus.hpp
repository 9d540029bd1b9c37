#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcore/partition.hpp"

namespace tcore {

using Bits = std::vector<std::uint8_t>;

/// Finite view of an abacus: every index below `start` holds a 1, every
/// index at or past start + bits.size() holds a 0.
///
/// Windows may carry redundant padding (leading 1s, trailing 0s); equality
/// compares the infinite words, not the stored windows.
struct AbacusWindow {
  std::int64_t start = 0;
  Bits bits;

  std::uint8_t at(std::int64_t index) const;
  /// #{i >= 0 : w_i = 1} - #{i < 0 : w_i = 0}
  std::int64_t offset() const;
  /// Same infinite word with leading 1s and trailing 0s stripped.
  AbacusWindow normalized() const;

  friend bool operator==(const AbacusWindow& a, const AbacusWindow& b);
};

/// Balanced abacus of lambda: w_m = 1 iff m = lambda_i - i for some i >= 1.
AbacusWindow to_abacus(const Partition& lambda);

struct ChargedPartition {
  std::int64_t offset = 0;
  Partition partition;
  friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;
};

/// psi: w -> (d(w), lambda). The partition is read off after shifting the
/// word so that it becomes balanced.
ChargedPartition from_abacus(const AbacusWindow& w);

/// The segment (w_{-r}, ..., w_{s-1}) of the balanced abacus of a
/// partition inside Box(r, s). Has exactly r ones.
struct RectangleWord {
  Box box;
  Bits bits;
  friend bool operator==(const RectangleWord&, const RectangleWord&) = default;
};

RectangleWord rectangle_word(const Partition& lambda, Box b);
Partition partition_from_word(const RectangleWord& v);

/// Runner lengths n_i = floor((r + s + t - 1 - i) / t), i = 0..t-1.
std::vector<int> runner_lengths(Box b, int t);

struct RunnerDecomposition {
  Box box;
  int t = 0;
  std::vector<Bits> words;

  std::vector<int> sizes() const;
  friend bool operator==(const RunnerDecomposition&, const RunnerDecomposition&) = default;
};

RunnerDecomposition runner_split(const RectangleWord& v, int t);
RectangleWord runner_merge(const RunnerDecomposition& d);

bool is_justified(std::span<const std::uint8_t> word);

/// Positions of justification (p_0, ..., p_{t-1}); they sum to zero and
/// name a t-core uniquely.
struct CoreDescriptor {
  int t = 0;
  std::vector<std::int64_t> positions;
  friend bool operator==(const CoreDescriptor&, const CoreDescriptor&) = default;
};

/// p_j = a_i - floor((r + t - 1 - i) / t) with j = (i - r) mod t.
/// Only r enters; the runner sizes a_i are read from Box(r, s) words.
CoreDescriptor descriptor_from_runner_sizes(int rows, int t, std::span<const int> sizes);

CoreDescriptor positions_of_justification(const RunnerDecomposition& d);

/// sum_j p_j (t p_j + 2 j) / 2. Throws std::invalid_argument unless sum p_j = 0.
std::int64_t core_size(const CoreDescriptor& c);

/// Descriptor of core_t(lambda), read from the runners of its balanced abacus.
CoreDescriptor core_descriptor(const Partition& lambda, int t);

/// Justifies every runner of the balanced abacus; O(l(lambda) + lambda_1 + t).
Partition t_core_fast(const Partition& lambda, int t);

/// mu^j with psi(w^j) = (p_j, mu^j), indexed by abacus runner j.
std::vector<Partition> t_quotient(const Partition& lambda, int t);

/// Inverse of lambda -> (core_t(lambda), t_quotient(lambda)).
/// Throws std::invalid_argument if rho is not a t-core or the quotient
/// does not have t entries.
Partition littlewood_compose(const Partition& rho, std::span<const Partition> quotients, int t);

/// The t-core whose runners are justified at the given positions.
Partition core_from_descriptor(const CoreDescriptor& c);

}  // namespace tcore
