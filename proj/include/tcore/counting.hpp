#pragma once

#include <cstdint>

#include "tcore/bigint.hpp"
#include "tcore/kernels.hpp"
#include "tcore/partition.hpp"

namespace tcore {

/// Number of t-cores in Box(r, s): [q^r] prod_i (1 + q + ... + q^{n_i}).
BigInt count_t_cores(Box b, int t);

/// Number of t-cores with exactly r parts and largest part exactly s.
BigInt count_t_cores_exact_frame(Box b, int t);

/// C(r + t - 1, r); the count in Box(r, s) once s >= r t.
BigInt count_t_cores_large_s(int rows, int t);

/// Same number as count_t_cores by inclusion-exclusion over the runner
/// caps: sum over subsets S of (-1)^|S| C(r - sum_{i in S} (n_i + 1) + t - 1, t - 1).
/// 2^t binomials, independent of r and s. When t divides r + s all n_i
/// agree and this collapses to sum_j (-1)^j C(t, j) C(r - (n+1) j + t - 1, t - 1).
BigInt count_t_cores_inclusion_exclusion(Box b, int t);

struct AsymptoticQuery {
  int t = 2;
  double kappa = 1.0;  // lim s / r
};

/// A(t, kappa), with lim P^t_{r,s} / r^{t-1} = A(t, kappa) / t^{t-1}.
/// kappa < 1 goes through the r <-> s symmetry: kappa^{t-1} A(t, 1/kappa).
double asymptotic_constant(AsymptoticQuery q);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // quadrature error on [0, cutoff]
  double tail_bound = 0.0;      // bound on the neglected [cutoff, inf) part
  double cutoff = 0.0;
  std::int64_t panels = 0;
};

/// (1/pi) int_0^inf (2 sin x / x)^t dx.
///
/// The range is cut at X = k pi with 2^t / (pi (t-1) X^{t-1}) <= tol / 2 and
/// integrated panel by panel over [k pi, (k+1) pi]. Panels near the origin
/// use adaptive Gauss-Kronrod; far panels reuse precomputed sin^t values
/// since sin(k pi + u) = +-sin(u).
QuadratureResult goddard_integral(int t, double tol, Execution exec = Execution::parallel);

struct SwanepoelResult {
  double lhs = 0.0;               // sum_{n=1}^{terms} sin^t(n x) / n^t
  double rhs = 0.0;               // (pi/2) (x/2)^{t-1} A(t,1) - x^t / 2
  double truncation_bound = 0.0;  // sum_{n > terms} n^{-t}
};

SwanepoelResult swanepoel_check(int t, double x, std::int64_t terms);

}  // namespace tcore
