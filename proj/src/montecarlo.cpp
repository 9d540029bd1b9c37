#include "tcore/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "tcore/abacus.hpp"

namespace tcore {

Rng make_substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

namespace {

// Partial Fisher-Yates on a permutation of word positions; the first r
// entries afterwards are a uniform r-subset. Any permutation is a valid
// starting state, so the buffer is reused between draws.
void draw_subset(std::vector<int>& perm, int r, Rng& rng) {
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < r; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
  }
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

void require_sampling_box(Box b, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (b.rows < 1) throw std::invalid_argument("r must be at least 1");
  if (b.cols < 0) throw std::invalid_argument("s must be nonnegative");
}

}  // namespace

std::vector<int> sample_word_ones(Box b, Rng& rng) {
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  auto perm = identity_permutation(b.perimeter());
  draw_subset(perm, b.rows, rng);
  std::vector<int> ones(perm.begin(), perm.begin() + b.rows);
  std::sort(ones.begin(), ones.end());
  return ones;
}

Partition sample_uniform_partition(Box b, Rng& rng) {
  const auto ones = sample_word_ones(b, rng);
  return partition_from_one_positions(ones);
}

SampleRun sample_core_sizes(Box b, int t, std::uint64_t n, std::uint64_t seed, SampleOptions opts) {
  require_sampling_box(b, t);
  if (n == 0) throw std::invalid_argument("number of samples must be positive");
  SampleRun run;
  run.box = b;
  run.t = t;
  run.n_samples = n;
  run.seed = seed;
  run.values.assign(n, 0.0);
  if (opts.keep_runner_sizes) run.runner_sizes.assign(n * static_cast<std::uint64_t>(t), 0);

  const int r = b.rows;
  const auto tt = static_cast<std::size_t>(t);
  const double scale = static_cast<double>(t) / r;
  const bool reference = opts.exec == Execution::serial;
  parallel_for_chunks(static_cast<std::int64_t>(n), static_cast<std::int64_t>(kSampleChunk), opts.exec,
                      [&](std::int64_t begin, std::int64_t end) {
    Rng rng = make_substream(seed, static_cast<std::uint64_t>(begin) / kSampleChunk);
    auto perm = identity_permutation(b.perimeter());
    std::vector<int> a(tt);
    std::vector<int> ones(static_cast<std::size_t>(r));
    for (std::int64_t idx = begin; idx < end; ++idx) {
      draw_subset(perm, r, rng);
      std::fill(a.begin(), a.end(), 0);
      for (int k = 0; k < r; ++k) ++a[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)] % t)];
      std::int64_t size;
      if (reference) {
        std::copy(perm.begin(), perm.begin() + r, ones.begin());
        std::sort(ones.begin(), ones.end());
        size = t_core_fast(partition_from_one_positions(ones), t).size();
      } else {
        size = core_size(descriptor_from_runner_sizes(r, t, a));
      }
      const auto i = static_cast<std::size_t>(idx);
      run.values[i] = scale * static_cast<double>(size);
      if (opts.keep_runner_sizes)
        for (std::size_t j = 0; j < tt; ++j) run.runner_sizes[i * tt + j] = a[j];
    }
  });
  return run;
}

RationalPolynomial pgf_large_s(int rows, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (rows < 0) throw std::invalid_argument("r must be nonnegative");
  std::map<std::int64_t, BigInt> weight;
  for (CompositionOdometer odo(std::vector<int>(static_cast<std::size_t>(t), rows), rows); !odo.done(); odo.advance()) {
    const auto a = odo.values();
    weight[core_size(descriptor_from_runner_sizes(rows, t, a))] += multinomial(a);
  }
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(rows));
  std::vector<Rational> coeffs(static_cast<std::size_t>(weight.rbegin()->first) + 1, Rational(0));
  for (const auto& [size, w] : weight) {
    Rational q(w, denom);
    q.canonicalize();
    coeffs[static_cast<std::size_t>(size)] = q;
  }
  return RationalPolynomial(std::move(coeffs));
}

// --- Gamma law ---------------------------------------------------------------

Rational ExactGammaParams::mean() const {
  Rational m = shape / rate;
  m.canonicalize();
  return m;
}

GammaParams gamma_params(int t, double kappa) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("kappa must be positive");
  return {(t - 1) / 2.0, (1.0 + kappa) / (kappa * t)};
}

ExactGammaParams gamma_params_exact(int t, const Rational& kappa) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (sgn(kappa) <= 0) throw std::invalid_argument("kappa must be positive");
  ExactGammaParams g;
  g.shape = Rational(t - 1, 2);
  g.shape.canonicalize();
  g.rate = (1 + kappa) / (kappa * t);
  g.rate.canonicalize();
  return g;
}

double gamma_cdf(const GammaParams& g, double x) {
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p(g.shape, g.rate * x);
}

double ks_distance(std::span<const double> values, const GammaParams& g) {
  if (values.empty()) throw std::invalid_argument("ks_distance needs at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double f = gamma_cdf(g, sorted[i]);
    d = std::max({d, std::fabs(static_cast<double>(i) / n - f), std::fabs(static_cast<double>(j) / n - f)});
    i = j;
  }
  return d;
}

double ks_distance(const DiscreteDistribution& dist, double scale, const GammaParams& g) {
  double d = 0.0;
  double below = 0.0;
  for (const auto& atom : dist.support) {
    const double f = gamma_cdf(g, scale * static_cast<double>(atom.value));
    const double above = below + atom.probability.get_d();
    d = std::max({d, std::fabs(below - f), std::fabs(above - f)});
    below = above;
  }
  return d;
}

GammaFitReport gamma_fit_report(const SampleRun& run, const GammaParams& g) {
  if (run.values.empty()) throw std::invalid_argument("sample run is empty");
  GammaFitReport rep;
  rep.n = run.values.size();
  const double n = static_cast<double>(rep.n);
  long double sum = 0.0L;
  for (double v : run.values) sum += v;
  rep.sample_mean = static_cast<double>(sum / n);
  long double ss = 0.0L;
  for (double v : run.values) ss += (v - rep.sample_mean) * (v - rep.sample_mean);
  rep.sample_variance = rep.n > 1 ? static_cast<double>(ss / (n - 1.0)) : 0.0;
  rep.standard_error = std::sqrt(rep.sample_variance / n);
  rep.mean_error = std::fabs(rep.sample_mean - g.mean());
  rep.variance_error = std::fabs(rep.sample_variance - g.variance());
  rep.ks_distance = ks_distance(run.values, g);

  const auto t = static_cast<std::size_t>(run.t);
  if (!run.runner_sizes.empty() && run.runner_sizes.size() == rep.n * t) {
    CovarianceDiagnostic cov;
    const Box b = run.box;
    const double r = b.rows;
    const double norm = r / static_cast<double>(t);
    const auto lengths = runner_lengths(b, run.t);
    const double total = b.perimeter();
    std::vector<double> mean(t);
    for (std::size_t i = 0; i < t; ++i) mean[i] = r * lengths[i] / total;
    cov.empirical.assign(t * t, 0.0);
    for (std::size_t k = 0; k < rep.n; ++k)
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
          cov.empirical[i * t + j] += (run.runner_sizes[k * t + i] - mean[i]) * (run.runner_sizes[k * t + j] - mean[j]);
    for (double& c : cov.empirical) c /= n * norm;
    // Multivariate hypergeometric covariance, r draws from t types of sizes n_i.
    const double fpc = total > 1 ? (total - r) / (total - 1) : 0.0;
    const double kappa = static_cast<double>(b.cols) / r;
    const double sigma2 = kappa / (1.0 + kappa);
    cov.finite_exact.assign(t * t, 0.0);
    cov.limit.assign(t * t, 0.0);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        const double pi = lengths[i] / total;
        const double pj = lengths[j] / total;
        const double c = r * ((i == j ? pi : 0.0) - pi * pj) * fpc;
        cov.finite_exact[i * t + j] = c / norm;
        cov.limit[i * t + j] = sigma2 * ((i == j ? 1.0 : 0.0) - 1.0 / static_cast<double>(t));
        cov.max_dev_finite = std::max(cov.max_dev_finite, std::fabs(cov.empirical[i * t + j] - cov.finite_exact[i * t + j]));
        cov.max_dev_limit = std::max(cov.max_dev_limit, std::fabs(cov.empirical[i * t + j] - cov.limit[i * t + j]));
      }
    }
    rep.covariance = std::move(cov);
  }
  return rep;
}

// --- histograms --------------------------------------------------------------

namespace {

std::size_t bin_index(double v, double width) {
  return static_cast<std::size_t>(std::floor(v / width + 1e-9));
}

void finish_bins(std::vector<HistogramBin>& bins, double width, const BigInt& total) {
  const double denom = total.get_d() * width;
  for (std::size_t k = 0; k < bins.size(); ++k) {
    bins[k].left = width * static_cast<double>(k);
    bins[k].right = width * static_cast<double>(k + 1);
    bins[k].density = denom > 0 ? bins[k].count.get_d() / denom : 0.0;
  }
}

}  // namespace

std::vector<HistogramBin> histogram(std::span<const double> values, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("bin width must be positive");
  std::vector<HistogramBin> bins;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("histogram values must be nonnegative");
    const std::size_t k = bin_index(v, width);
    if (k >= bins.size()) bins.resize(k + 1);
    bins[k].count += 1;
  }
  finish_bins(bins, width, BigInt(static_cast<unsigned long>(values.size())));
  return bins;
}

std::vector<HistogramBin> histogram(const DiscreteDistribution& dist, double scale, double width,
                                    const BigInt& population) {
  if (!(width > 0.0)) throw std::invalid_argument("bin width must be positive");
  std::vector<HistogramBin> bins;
  BigInt total = 0;
  for (const auto& atom : dist.support) {
    const std::size_t k = bin_index(scale * static_cast<double>(atom.value), width);
    if (k >= bins.size()) bins.resize(k + 1);
    Rational c = atom.probability * population;
    c.canonicalize();
    if (c.get_den() != 1) throw std::invalid_argument("population does not clear the probabilities");
    bins[k].count += c.get_num();
    total += c.get_num();
  }
  finish_bins(bins, width, total);
  return bins;
}

namespace {

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char text[32];
  const auto res = std::to_chars(text, text + sizeof text, v);
  return std::string(text, res.ptr);
}

}  // namespace

void write_histogram_csv(std::ostream& os, std::span<const HistogramBin> bins) {
  std::ostringstream buf;
  buf << "bin_left,bin_right,count,density\n";
  for (const auto& bin : bins)
    buf << shortest(bin.left) << ',' << shortest(bin.right) << ',' << bin.count.get_str() << ',' << shortest(bin.density) << '\n';
  os << buf.str();
}

void write_sample_csv(std::ostream& os, const SampleRun& run) {
  std::ostringstream buf;
  buf << "# box=" << run.box.rows << 'x' << run.box.cols << " t=" << run.t << " seed=" << run.seed
      << " n=" << run.n_samples << '\n';
  buf << "value\n";
  for (double v : run.values) buf << shortest(v) << '\n';
  os << buf.str();
}

}  // namespace tcore
