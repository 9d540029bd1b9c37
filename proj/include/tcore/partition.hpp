#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "tcore/polynomial.hpp"

namespace tcore {

/// A weakly decreasing sequence of positive integers. The empty sequence
/// is the empty partition.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Drops zero parts; the remaining parts must already be weakly decreasing.
  static Partition from_parts_with_zeros(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  std::int64_t size() const;

  // 0-based row access, 0 past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The r x s rectangle: at most r parts, each at most s.
struct Box {
  int rows = 0;
  int cols = 0;

  int perimeter() const { return rows + cols; }
  friend bool operator==(const Box&, const Box&) = default;
};

Partition conjugate(const Partition& lambda);

bool fits_in_box(const Partition& lambda, Box b);

/// Every partition of Par_{r,s}, once each.
///
/// Order: colexicographic on the set of positions of the 1s of the
/// boundary word (rectangle_word in abacus.hpp). The first element is the
/// empty partition (word 1^r 0^s), the last is the full rectangle (0^s 1^r).
/// Each step is O(r) amortized with no allocation beyond the iterator.
class BoxPartitions {
 public:
  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.done_; }

    /// Sorted positions of the 1s in the length r+s boundary word.
    std::span<const int> one_positions() const { return ones_; }

   private:
    friend class BoxPartitions;
    explicit iterator(Box b);
    void materialize();

    Box box_{};
    std::vector<int> ones_;
    Partition current_;
    bool done_ = true;
  };

  explicit BoxPartitions(Box b) : box_(b) {}
  iterator begin() const { return iterator(box_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Box box_;
};

/// Advances sorted one-positions to the colex successor among r-subsets
/// of {0, ..., n-1}. Returns false (leaving ones untouched) at the last subset.
bool next_colex_subset(std::span<int> ones, int n);

/// Partition whose boundary word in Box(r, n - r) has 1s at the sorted positions.
Partition partition_from_one_positions(std::span<const int> ones);

/// The Gaussian polynomial [m choose k]_q with q replaced by q^step.
/// k > m gives the zero polynomial.
CountPolynomial gaussian_binomial(int m, int k, int step = 1);

// ---------------------------------------------------------------------------
// Rim-hook oracle. Works on Young diagrams directly; shares no code with the
// abacus module so that the two can check each other.

enum class RimHookOrder { topmost_first, bottommost_first };

struct RimHookRemoval {
  Partition core;
  int hooks_removed = 0;
};

RimHookRemoval remove_rim_hooks(const Partition& lambda, int t,
                                RimHookOrder order = RimHookOrder::topmost_first);

Partition t_core_by_rim_hooks(const Partition& lambda, int t);

bool is_t_core(const Partition& lambda, int t);

/// True iff inner is contained in outer and outer/inner is a nonempty,
/// edge-connected skew shape with no 2x2 block.
bool is_border_strip(const Partition& outer, const Partition& inner);

}  // namespace tcore
