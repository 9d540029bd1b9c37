#include "tcore/counting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tcore/abacus.hpp"

namespace tcore {

namespace {

void require_t(int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
}

void require_box(Box b) {
  if (b.rows < 0 || b.cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
}

}  // namespace

BigInt count_t_cores(Box b, int t) {
  require_t(t);
  require_box(b);
  const auto n = runner_lengths(b, t);
  const auto r = static_cast<std::size_t>(b.rows);
  // Multiply by 1 + q + ... + q^{n_i}, keeping terms up to q^r, through the
  // prefix sums of the running coefficient vector.
  std::vector<BigInt> acc(r + 1, BigInt(0));
  acc[0] = 1;
  std::vector<BigInt> prefix(r + 2);
  for (int ni : n) {
    prefix[0] = 0;
    for (std::size_t d = 0; d <= r; ++d) prefix[d + 1] = prefix[d] + acc[d];
    for (std::size_t d = 0; d <= r; ++d) {
      const std::size_t lo = d >= static_cast<std::size_t>(ni) ? d - static_cast<std::size_t>(ni) : 0;
      acc[d] = prefix[d + 1] - prefix[lo];
    }
  }
  return acc[r];
}

BigInt count_t_cores_exact_frame(Box b, int t) {
  require_t(t);
  require_box(b);
  // Only the empty partition lives in a degenerate box; it has l = 0 and
  // largest part 0, so it is a frame precisely for Box(0, 0).
  if (b.rows == 0 || b.cols == 0) return (b.rows == 0 && b.cols == 0) ? 1 : 0;
  const int j = (b.perimeter() - 1) % t;
  // l(lambda) = r forces a_0 = 0 and lambda_1 = s forces a_j = n_j.
  if (j == 0) return 0;
  const auto n = runner_lengths(b, t);
  const int remaining = b.rows - n[static_cast<std::size_t>(j)];
  if (remaining < 0) return 0;
  std::vector<CountPolynomial> factors;
  for (int i = 1; i < t; ++i)
    if (i != j) factors.push_back(geometric_polynomial(static_cast<std::size_t>(n[static_cast<std::size_t>(i)])));
  return truncated_product(factors, static_cast<std::size_t>(remaining)).coefficient(static_cast<std::size_t>(remaining));
}

BigInt count_t_cores_large_s(int rows, int t) {
  require_t(t);
  if (rows < 0) throw std::invalid_argument("r must be nonnegative");
  return binomial(rows + t - 1, rows);
}

BigInt count_t_cores_inclusion_exclusion(Box b, int t) {
  require_t(t);
  require_box(b);
  if (t > 30) throw std::invalid_argument("inclusion-exclusion limited to t <= 30");
  const auto n = runner_lengths(b, t);
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << t); ++mask) {
    std::int64_t rest = b.rows;
    int parity = 0;
    for (int i = 0; i < t; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        rest -= n[static_cast<std::size_t>(i)] + 1;
        parity ^= 1;
      }
    }
    if (rest < 0) continue;
    const BigInt term = binomial(rest + t - 1, t - 1);
    if (parity) total -= term; else total += term;
  }
  return total;
}

double asymptotic_constant(AsymptoticQuery q) {
  require_t(q.t);
  if (!(q.kappa > 0.0) || !std::isfinite(q.kappa)) throw std::invalid_argument("kappa must be positive");
  if (q.kappa < 1.0) {
    const long double k = q.kappa;
    return static_cast<double>(std::pow(k, q.t - 1) * asymptotic_constant({q.t, 1.0 / q.kappa}));
  }
  const int t = q.t;
  const auto jmax = static_cast<int>(std::floor(t / (q.kappa + 1.0)));
  long double sum = 0.0L;
  long double choose = 1.0L;  // C(t, j)
  for (int j = 0; j <= jmax; ++j) {
    const long double base = t - (1.0L + q.kappa) * j;
    const long double term = choose * std::pow(base, t - 1);
    sum += (j % 2 == 0) ? term : -term;
    choose = choose * (t - j) / (j + 1);
  }
  long double factorial = 1.0L;
  for (int k = 2; k < t; ++k) factorial *= k;
  return static_cast<double>(sum / factorial);
}

// --- Goddard integral ----------------------------------------------------------

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kNearPanels = 16;

long double power(long double base, int e) {
  long double r = 1.0L;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

double goddard_integrand(double x, int t) {
  if (x == 0.0) return std::ldexp(1.0, t);
  return static_cast<double>(power(2.0L * std::sin(static_cast<long double>(x)) / x, t));
}

// Kronrod nodes on [0, pi] with sin^t precomputed, and the embedded Gauss weights.
struct FarPanelRule {
  std::vector<long double> u;
  std::vector<long double> sin_t;
  std::vector<long double> kronrod_w;
  std::vector<long double> gauss_w;  // zero at nodes not shared with the Gauss rule
};

FarPanelRule make_far_rule(int t) {
  using K = boost::math::quadrature::gauss_kronrod<long double, 15>;
  using G = boost::math::quadrature::gauss<long double, 7>;
  const auto& kx = K::abscissa();
  const auto& kw = K::weights();
  const auto& gx = G::abscissa();
  const auto& gw = G::weights();
  FarPanelRule rule;
  const long double half = kPi / 2.0L;
  auto add = [&](long double xi, long double wk, long double wg) {
    const long double u = half * (1.0L + xi);
    rule.u.push_back(u);
    rule.sin_t.push_back(power(std::sin(u), t));
    rule.kronrod_w.push_back(wk * half);
    rule.gauss_w.push_back(wg * half);
  };
  for (std::size_t i = 0; i < kx.size(); ++i) {
    long double wg = 0.0L;
    for (std::size_t g = 0; g < gx.size(); ++g)
      if (std::fabs(gx[g] - kx[i]) < 1e-15L) wg = gw[g];
    add(kx[i], kw[i], wg);
    if (kx[i] != 0.0L) add(-kx[i], kw[i], wg);
  }
  return rule;
}

}  // namespace

QuadratureResult goddard_integral(int t, double tol, Execution exec) {
  require_t(t);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  // 2^t / (pi (t-1) X^{t-1}) <= tol / 2
  const double x_min = std::pow(std::ldexp(2.0, t) / (kPi * (t - 1) * tol), 1.0 / (t - 1));
  const auto panels = static_cast<std::int64_t>(std::ceil(x_min / kPi));
  QuadratureResult result;
  result.panels = std::max<std::int64_t>(panels, 1);
  result.cutoff = kPi * static_cast<double>(result.panels);
  result.tail_bound = std::ldexp(1.0, t) / (kPi * (t - 1) * std::pow(result.cutoff, t - 1));

  long double value = 0.0L;
  long double error = 0.0L;
  const std::int64_t near = std::min(kNearPanels, result.panels);
  for (std::int64_t k = 0; k < near; ++k) {
    double err = 0.0;
    const auto f = [t](double x) { return goddard_integrand(x, t); };
    value += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, kPi * static_cast<double>(k), kPi * static_cast<double>(k + 1), 30, 1e-14, &err);
    error += err;
  }

  const FarPanelRule rule = make_far_rule(t);
  const std::int64_t far = result.panels - near;
  constexpr std::int64_t kChunk = 1 << 16;
  const std::int64_t chunks = (far + kChunk - 1) / kChunk;
  std::vector<long double> chunk_value(static_cast<std::size_t>(chunks), 0.0L);
  std::vector<long double> chunk_error(static_cast<std::size_t>(chunks), 0.0L);
  const long double two_t = std::ldexp(1.0L, t);
  parallel_for_chunks(far, kChunk, exec, [&](std::int64_t begin, std::int64_t end) {
    long double v = 0.0L;
    long double e = 0.0L;
    for (std::int64_t idx = begin; idx < end; ++idx) {
      const std::int64_t k = near + idx;
      const long double x0 = static_cast<long double>(kPi) * static_cast<long double>(k);
      long double kron = 0.0L;
      long double gauss = 0.0L;
      for (std::size_t i = 0; i < rule.u.size(); ++i) {
        const long double f = rule.sin_t[i] * power(1.0L / (x0 + rule.u[i]), t);
        kron += rule.kronrod_w[i] * f;
        gauss += rule.gauss_w[i] * f;
      }
      // sin^t(k pi + u) = (-1)^{k t} sin^t(u)
      const long double sign = ((k * t) % 2 == 0) ? 1.0L : -1.0L;
      v += sign * kron;
      e += std::fabs(kron - gauss);
    }
    const auto c = static_cast<std::size_t>(begin / kChunk);
    chunk_value[c] = v * two_t;
    chunk_error[c] = e * two_t;
  });
  for (std::int64_t c = 0; c < chunks; ++c) {
    value += chunk_value[static_cast<std::size_t>(c)];
    error += chunk_error[static_cast<std::size_t>(c)];
  }
  result.value = static_cast<double>(value / static_cast<long double>(kPi));
  result.error_estimate = static_cast<double>(error / static_cast<long double>(kPi));
  return result;
}

SwanepoelResult swanepoel_check(int t, double x, std::int64_t terms) {
  require_t(t);
  if (!(x > 0.0) || x > 2.0 * kPi / t * (1.0 + 1e-15))
    throw std::invalid_argument("x must lie in (0, 2 pi / t]");
  if (terms <= 0) throw std::invalid_argument("terms must be positive");
  long double lhs = 0.0L;
  const long double lx = x;
  for (std::int64_t n = terms; n >= 1; --n) {
    const long double nn = static_cast<long double>(n);
    lhs += power(std::sin(nn * lx) / nn, t);
  }
  SwanepoelResult r;
  r.lhs = static_cast<double>(lhs);
  const long double a = asymptotic_constant({t, 1.0});
  r.rhs = static_cast<double>(static_cast<long double>(kPi) / 2.0L * power(lx / 2.0L, t - 1) * a -
                              power(lx, t) / 2.0L);
  r.truncation_bound = std::pow(static_cast<double>(terms), 1.0 - t) / (t - 1);
  return r;
}

}  // namespace tcore
