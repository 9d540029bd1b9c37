// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tcore/abacus.hpp"
#include "tcore/coredist.hpp"
#include "tcore/counting.hpp"
#include "tcore/kernels.hpp"
#include "tcore/montecarlo.hpp"

using namespace tcore;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

void bijections(Outcome& o) {
  const Box b{6, 6};
  std::size_t count = 0;
  for (const auto& lambda : BoxPartitions(b)) {
    ++count;
    o.expect(from_abacus(to_abacus(lambda)) == ChargedPartition{0, lambda}, "abacus round trip " + lambda.to_string());
    const auto v = rectangle_word(lambda, b);
    o.expect(partition_from_word(v) == lambda, "rectangle word round trip " + lambda.to_string());
    for (int t = 2; t <= 6; ++t)
      o.expect(runner_merge(runner_split(v, t)) == v, "runner split/merge " + lambda.to_string());
  }
  o.expect(count == 924, "Par_{6,6} has 924 partitions");
  for (const auto& lambda : BoxPartitions({5, 5})) {
    for (int t = 2; t <= 6; ++t) {
      bool justified = true;
      for (const auto& w : runner_split(rectangle_word(lambda, {5, 5}), t).words) justified = justified && is_justified(w);
      o.expect(justified == is_t_core(lambda, t), "justified runners vs t-core " + lambda.to_string());
    }
  }
  o.detail << "924 partitions, t=2..6";
}

void oracles(Outcome& o) {
  const Box b{6, 6};
  for (const auto& lambda : BoxPartitions(b)) {
    const auto v = rectangle_word(lambda, b);
    for (int t = 2; t <= 6; ++t) {
      const auto core = t_core_fast(lambda, t);
      o.expect(core == t_core_by_rim_hooks(lambda, t), "t_core_fast vs rim hooks " + lambda.to_string());
      std::int64_t weight = 0;
      for (const auto& mu : t_quotient(lambda, t)) weight += mu.size();
      o.expect(lambda.size() == core.size() + t * weight, "quotient size identity " + lambda.to_string());
      o.expect(core_size(positions_of_justification(runner_split(v, t))) == core.size(),
               "core_size from descriptor " + lambda.to_string());
    }
  }
  o.detail << "Par_{6,6} x t=2..6";
}

void paper_numbers(Outcome& o) {
  o.expect(count_t_cores({2, 2}, 3) == 4, "P^3_{2,2} = 4");
  const Partition rho{2, 2, 1, 1};
  const Box b{4, 5};
  o.expect(fixed_core_count(rho, b, 3) == 9, "|D| = 9");
  o.expect(enumerate_with_core(rho, b, 3).size() == 9, "nine partitions enumerated");
  const CountPolynomial inner{1, 0, 0, 1, 0, 0, 1};
  o.expect(fixed_core_genfun(rho, b, 3) == CountPolynomial::monomial(6) * inner * inner, "generating function");
  const auto d = runner_split(rectangle_word(rho, b), 3);
  o.expect(positions_of_justification(d).positions == std::vector<std::int64_t>{1, 1, -2}, "p = (1,1,-2)");
  o.expect(d.sizes() == std::vector<int>{0, 2, 2}, "a = (0,2,2)");
  const Partition lambda{5, 4, 4, 1};
  o.expect(t_core_fast(lambda, 5) == Partition{3, 1} && t_core_by_rim_hooks(lambda, 5) == Partition{3, 1}, "core_5");
  o.expect(is_t_core(lambda, 7) && t_core_fast(lambda, 7) == lambda, "7-core");
  o.expect(t_core_fast(lambda, 2).empty() && t_core_by_rim_hooks(lambda, 2).empty(), "2-divisible");
}

void counting(Outcome& o) {
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s) {
      std::vector<BigInt> brute(7, BigInt(0));
      for (const auto& lambda : BoxPartitions({r, s}))
        for (int t = 2; t <= 6; ++t)
          if (is_t_core(lambda, t)) brute[static_cast<std::size_t>(t)] += 1;
      for (int t = 2; t <= 6; ++t)
        o.expect(count_t_cores({r, s}, t) == brute[static_cast<std::size_t>(t)],
                 "brute force count r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
    }
  for (int r = 0; r <= 12; ++r)
    for (int s = 0; s <= 12; ++s)
      for (int t = 2; t <= 6; ++t) o.expect(count_t_cores({r, s}, t) == count_t_cores({s, r}, t), "symmetry");
  for (int r = 0; r <= 6; ++r)
    for (int t = 2; t <= 5; ++t)
      for (int s = r * t; s <= r * t + 2 * t; ++s)
        o.expect(count_t_cores({r, s}, t) == binomial(r + t - 1, r), "saturation");
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s)
      for (int t = 2; t <= 5; ++t) {
        BigInt total = 0;
        for_each_core_probability({r, s}, t, [&](const CoreProbability& e) {
          total += fixed_core_count(core_from_descriptor(e.descriptor), {r, s}, t);
        });
        o.expect(total == binomial(r + s, r), "totality");
      }
  o.detail << "brute force r,s<=8; symmetry r,s<=12; saturation; totality";
}

void expectation(Outcome& o) {
  for (int t = 2; t <= 5; ++t) {
    std::int64_t sum = 0;
    std::int64_t n = 0;
    for (const auto& lambda : BoxPartitions({4, 4})) {
      sum += t_core_by_rim_hooks(lambda, t).size();
      ++n;
    }
    o.expect(frac(sum, n) == expected_core_size({4, 4}, t), "Par_{4,4} average t=" + std::to_string(t));
  }

  const Box big{12, 12};
  const auto counts = exhaustive_core_size_counts(big, 5, Execution::parallel);
  BigInt weighted = 0;
  BigInt total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    weighted += BigInt(static_cast<unsigned long>(counts[k])) * static_cast<unsigned long>(k);
    total += static_cast<unsigned long>(counts[k]);
  }
  Rational mean(weighted, total);
  mean.canonicalize();
  o.expect(total == 2704156, "2,704,156 partitions");
  o.expect(mean == 12 && expected_core_size(big, 5) == 12, "Par_{12,12} exhaustive mean 12");

  // Independent passes that materialize every partition and core it.
  std::int64_t direct = 0;
  std::int64_t by_hooks = 0;
  for (const auto& lambda : BoxPartitions(big)) {
    direct += t_core_fast(lambda, 5).size();
    by_hooks += t_core_by_rim_hooks(lambda, 5).size();
  }
  o.expect(frac(direct, 2704156) == 12, "Par_{12,12} mean via t_core_fast");
  o.expect(frac(by_hooks, 2704156) == 12, "Par_{12,12} mean via rim hooks");

  for (int r = 0; r <= 10; ++r)
    for (int s = 0; s <= 10; ++s)
      for (int t = 2; t <= 5; ++t)
        o.expect(exact_core_size_distribution({r, s}, t).mean() == expected_core_size({r, s}, t),
                 "distribution mean r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
  o.detail << "E|core_5| over Par_{12,12} = " << mean.get_str();
}

void asymptotics(Outcome& o) {
  double worst_goddard = 0.0;
  for (int t = 2; t <= 8; ++t) {
    const auto q = goddard_integral(t, 1e-8);
    const double err = std::fabs(q.value - asymptotic_constant({t, 1.0}));
    worst_goddard = std::max(worst_goddard, err);
    o.expect(err < 1e-6, "goddard t=" + std::to_string(t));
  }
  double worst_swanepoel = 0.0;
  for (const auto& [t, x] : {std::pair{3, std::numbers::pi / 6}, std::pair{4, std::numbers::pi / 4}}) {
    const auto res = swanepoel_check(t, x, 1'000'000);
    worst_swanepoel = std::max(worst_swanepoel, std::fabs(res.lhs - res.rhs));
    o.expect(std::fabs(res.lhs - res.rhs) < 1e-6, "swanepoel t=" + std::to_string(t));
  }
  double worst_rel = 0.0;
  for (const auto& [t, kappa] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{3, 2}}) {
    const auto start = std::chrono::steady_clock::now();
    const int r = 2000;
    const BigInt count = count_t_cores_inclusion_exclusion({r, kappa * r}, t);
    const double scaled = count.get_d() * std::pow(static_cast<double>(t) / r, t - 1);
    const double a = asymptotic_constant({t, static_cast<double>(kappa)});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst_rel = std::max(worst_rel, std::fabs(scaled - a) / a);
    o.expect(std::fabs(scaled - a) / a < 0.02 && secs < 1.0, "alternating sum t=" + std::to_string(t));
  }
  o.detail << "max |goddard - A| = " << worst_goddard << ", max swanepoel residual = " << worst_swanepoel
           << ", max relative error at r=2000 = " << worst_rel;
}

void distributional_limit(Outcome& o) {
  const auto g5 = gamma_params(5, 1.0);
  const Box fig{12, 12};
  const auto dist = exact_core_size_distribution(fig, 5);
  o.expect(dist.mean() * frac(5, 12) == 5, "scaled mean exactly 5");
  o.expect(gamma_params_exact(5, Rational(1)).mean() == 5, "alpha/beta = 5");
  const auto bins = histogram(dist, 5.0 / 12.0, 5.0 / 12.0, binomial(24, 12));
  const auto csv_path = std::filesystem::current_path() / "fig1_histogram.csv";
  {
    std::ofstream csv(csv_path);
    write_histogram_csv(csv, bins);
  }
  o.expect(std::filesystem::file_size(csv_path) > 0, "histogram CSV written");

  const auto run = sample_core_sizes({500, 500}, 5, 100'000, 2024);
  const auto rep = gamma_fit_report(run, g5);
  const double exact_mean = Rational(expected_core_size({500, 500}, 5) * frac(5, 500)).get_d();
  o.expect(std::fabs(rep.sample_mean - exact_mean) < 3 * rep.standard_error, "sample mean within 3 SE");
  o.expect(rep.ks_distance < 0.02, "KS < 0.02 at r = s = 500");

  const auto g3 = gamma_params(3, 1.0);
  std::vector<double> ks;
  for (int r : {50, 200, 800}) ks.push_back(ks_distance(sample_core_sizes({r, r}, 3, 100'000, 7).values, g3));
  o.expect(ks[0] >= ks[1] && ks[1] >= ks[2], "KS non-increasing in r");

  o.detail << "Fig.1 KS(exact) = " << ks_distance(dist, 5.0 / 12.0, g5) << "; r=500: mean " << rep.sample_mean
           << " vs " << exact_mean << " (SE " << rep.standard_error << "), KS " << rep.ks_distance
           << "; KS r=50,200,800: " << ks[0] << ", " << ks[1] << ", " << ks[2] << "; histogram " << csv_path.string();
}

void pgf(Outcome& o) {
  for (int r = 1; r <= 5; ++r)
    for (int t = 2; t <= 4; ++t) {
      const auto phi = pgf_large_s(r, t);
      o.expect(phi.value_at_one() == 1, "phi(1) = 1");
      o.expect(phi.derivative_at_one() == frac(r * (t - 1), 2), "phi'(1) = r(t-1)/2");
    }
  int points = 0;
  for (int t = 2; t <= 6; ++t)
    for (const Rational& kappa : {frac(1, 1), frac(1, 3), frac(5, 2), frac(7, 11)}) {
      const Rational lhs = gamma_params_exact(t, kappa).mean();
      Rational rhs = Rational(binomial(t, 2)) * kappa / (1 + kappa);
      rhs.canonicalize();
      o.expect(lhs == rhs, "alpha/beta = C(t,2) kappa/(1+kappa)");
      ++points;
    }
  o.expect(points == 20, "20 evaluation points");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bijection suite", 10.0, bijections},
      {2, "oracle equivalence", 60.0, oracles},
      {3, "paper numbers", 1.0, paper_numbers},
      {4, "counting cross-checks", 120.0, counting},
      {5, "expectation", 600.0, expectation},
      {6, "asymptotics", 600.0, asymptotics},
      {7, "distributional limit", 300.0, distributional_limit},
      {8, "pgf", 10.0, pgf},
  };
  std::cout << "workers: " << worker_count() << "\n";
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < c.limit_seconds, "time limit " + std::to_string(c.limit_seconds) + " s");
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << secs << " s)";
    const std::string detail = o.detail.str();
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "       " << f << "\n";
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
