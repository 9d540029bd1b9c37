#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcore/abacus.hpp"
#include "tcore/bigint.hpp"
#include "tcore/kernels.hpp"
#include "tcore/partition.hpp"
#include "tcore/polynomial.hpp"

namespace tcore {

/// (a_0, ..., a_{t-1}) with 0 <= a_i <= bounds[i] and sum a_i = total.
struct CompositionVector {
  std::vector<int> values;
  std::vector<int> bounds;
  int total = 0;
};

/// Lexicographic odometer over restricted weak compositions.
class CompositionOdometer {
 public:
  CompositionOdometer(std::vector<int> bounds, int total);

  bool done() const { return done_; }
  std::span<const int> values() const { return values_; }
  void advance();

 private:
  void fill_suffix(std::size_t from, int amount);

  std::vector<int> bounds_;
  std::vector<int> values_;
  int total_;
  bool done_ = false;
};

struct DistributionAtom {
  std::int64_t value = 0;
  Rational probability;
};

/// Finite law with exact probabilities; support sorted, distinct, positive mass.
struct DiscreteDistribution {
  std::vector<DistributionAtom> support;

  Rational mean() const;
  Rational total_mass() const;
};

/// Runner sizes a_i of rho inside b. Throws unless rho is a t-core fitting in b.
std::vector<int> core_runner_sizes(const Partition& rho, Box b, int t);

/// q^{|rho|} prod_i [n_i choose a_i]_{q^t}: sizes of the partitions of
/// Par_{r,s} whose t-core is rho.
CountPolynomial fixed_core_genfun(const Partition& rho, Box b, int t);

/// prod_i C(n_i, a_i)
BigInt fixed_core_count(const Partition& rho, Box b, int t);

/// Visits every lambda in Par_{r,s} with core_t(lambda) = rho by composing
/// rho with each quotient tuple from prod_i Par_{a_i, n_i - a_i}.
void for_each_with_core(const Partition& rho, Box b, int t,
                        const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_with_core(const Partition& rho, Box b, int t);

struct HypergeometricMoments {
  Rational mean;
  Rational variance;
};

/// Moments of A_i, the i-th runner size of a uniform lambda in Par_{r,s}.
/// Boxes with r + s <= 1 get variance 0.
HypergeometricMoments hypergeom_moments(Box b, int t, int runner);

struct CoreProbability {
  CompositionVector composition;
  CoreDescriptor descriptor;
  Rational probability;
};

/// Streams the multivariate hypergeometric law of the runner sizes, one
/// entry per t-core of Par_{r,s}, in lexicographic order of (a_0, ...).
void for_each_core_probability(Box b, int t, const std::function<void(const CoreProbability&)>& visit);
std::vector<CoreProbability> core_pmf(Box b, int t);

inline constexpr std::uint64_t kDefaultCompositionBudget = 100'000'000;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact law of |core_t(lambda)| for uniform lambda in Par_{r,s}.
///
/// Throws BudgetExceeded when the number of t-cores exceeds the budget.
/// serial: aggregates for_each_core_probability in rationals.
/// parallel: splits on (a_0, a_1), aggregates integer weights per chunk,
/// merges, then divides once by C(r+s, r). Both give identical results.
DiscreteDistribution exact_core_size_distribution(Box b, int t,
                                                  std::uint64_t budget = kDefaultCompositionBudget,
                                                  Execution exec = Execution::parallel);

/// Closed form for E|core_t(lambda)|:
/// r s / ((r+s)(r+s-1)) * (C((r+s) mod t, 2) + floor((r+s)/t) C(t, 2)).
/// Boxes with r + s <= 1 give 0.
Rational expected_core_size(Box b, int t);

}  // namespace tcore
