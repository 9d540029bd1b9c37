#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <vector>

#include "tcore/bigint.hpp"
#include "tcore/coredist.hpp"
#include "tcore/kernels.hpp"
#include "tcore/partition.hpp"
#include "tcore/polynomial.hpp"

namespace tcore {

/// Generator behind every sampler. Substreams are seeded from
/// (seed, stream index) through std::seed_seq, so chunk k of a run draws
/// the same numbers whichever thread executes it.
using Rng = std::mt19937_64;
Rng make_substream(std::uint64_t seed, std::uint64_t stream);

/// Uniform lambda in Par_{r,s}: a partial Fisher-Yates pick of r of the
/// r + s word positions, read back through the boundary word.
Partition sample_uniform_partition(Box b, Rng& rng);

/// Sorted positions of the 1s chosen by the same draw sample_uniform_partition makes.
std::vector<int> sample_word_ones(Box b, Rng& rng);

struct SampleRun {
  Box box;
  int t = 2;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;             // t |core_t(lambda)| / r per sample
  std::vector<std::int32_t> runner_sizes; // n_samples x t, row-major; empty unless requested
};

struct SampleOptions {
  bool keep_runner_sizes = false;
  Execution exec = Execution::parallel;
};

inline constexpr std::uint64_t kSampleChunk = 4096;

/// i.i.d. copies of t |core_t(lambda)| / r for uniform lambda in Par_{r,s}.
///
/// Sample i uses substream i / kSampleChunk; the values do not depend on
/// the worker count. serial: materializes each partition and cores it
/// with t_core_fast. parallel: reads core sizes off the runner counts
/// without building the partition.
SampleRun sample_core_sizes(Box b, int t, std::uint64_t n, std::uint64_t seed, SampleOptions opts = {});

/// s -> infinity PGF: sum over compositions a of r into t parts of
/// z^{|core|} multinomial(r; a) / t^r.
RationalPolynomial pgf_large_s(int rows, int t);

struct GammaParams {
  double shape = 1.0;  // alpha
  double rate = 1.0;   // beta
  double mean() const { return shape / rate; }
  double variance() const { return shape / (rate * rate); }
};

struct ExactGammaParams {
  Rational shape;
  Rational rate;
  Rational mean() const;
};

/// alpha = (t - 1) / 2, beta = (1 + kappa) / (kappa t).
GammaParams gamma_params(int t, double kappa);
ExactGammaParams gamma_params_exact(int t, const Rational& kappa);

/// Regularized lower incomplete gamma P(alpha, beta x).
double gamma_cdf(const GammaParams& g, double x);

/// sup |F_n - F| for the empirical CDF of the values against the Gamma CDF.
double ks_distance(std::span<const double> values, const GammaParams& g);

/// Same distance for an exact law of core sizes scaled by `scale`.
double ks_distance(const DiscreteDistribution& dist, double scale, const GammaParams& g);

struct CovarianceDiagnostic {
  // Z_i = (A_i - E A_i) / sqrt(r / t)
  std::vector<double> empirical;       // t x t
  std::vector<double> finite_exact;    // multivariate hypergeometric covariance of Z
  std::vector<double> limit;           // sigma^2 (delta_ij - 1/t), sigma^2 = kappa / (1 + kappa)
  double max_dev_finite = 0.0;
  double max_dev_limit = 0.0;
};

struct GammaFitReport {
  std::uint64_t n = 0;
  double sample_mean = 0.0;
  double sample_variance = 0.0;
  double standard_error = 0.0;  // of the sample mean
  double mean_error = 0.0;      // |sample mean - alpha/beta|
  double variance_error = 0.0;  // |sample variance - alpha/beta^2|
  double ks_distance = 0.0;
  std::optional<CovarianceDiagnostic> covariance;
};

GammaFitReport gamma_fit_report(const SampleRun& run, const GammaParams& g);

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  BigInt count;
  double density = 0.0;  // count / (total * width)
};

/// Bins [k w, (k+1) w) from 0 up to the largest value.
std::vector<HistogramBin> histogram(std::span<const double> values, double width);

/// Histogram of scale * |core| with counts = number of partitions
/// (probability times C(r+s, r)).
std::vector<HistogramBin> histogram(const DiscreteDistribution& dist, double scale, double width,
                                    const BigInt& population);

/// "bin_left,bin_right,count,density" header, one row per bin.
void write_histogram_csv(std::ostream& os, std::span<const HistogramBin> bins);

/// Comment header with box/t/seed/n, then "value" and one value per line.
void write_sample_csv(std::ostream& os, const SampleRun& run);

}  // namespace tcore
