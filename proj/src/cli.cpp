#include "tcore/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tcore/abacus.hpp"
#include "tcore/coredist.hpp"
#include "tcore/counting.hpp"
#include "tcore/montecarlo.hpp"
#include "tcore/serialize.hpp"

namespace tcore {

namespace {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  int r = 0;
  int s = 0;
  int t = 0;
  double kappa = 0.0;
  std::string partition;
  std::string core;
  std::string x;
  std::int64_t terms = 1'000'000;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::uint64_t budget = 100'000'000;
  std::string format = "json";
  std::string output;
  double bin_width = 0.0;
  bool enumerate = false;
  bool covariance = false;
  bool serial = false;
};

int parse_int(const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ValidationError("not an integer: '" + text + "'");
  return v;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ValidationError("not a number: '" + text + "'");
  return v;
}

// Accepts a real literal or [a*]pi[/b].
double parse_angle(const std::string& text) {
  const auto at = text.find("pi");
  if (at == std::string::npos) return parse_real(text);
  double factor = 1.0;
  if (at > 0) {
    if (text[at - 1] != '*') throw ValidationError("malformed angle: '" + text + "'");
    factor = parse_real(text.substr(0, at - 1));
  }
  double divisor = 1.0;
  const std::string rest = text.substr(at + 2);
  if (!rest.empty()) {
    if (rest[0] != '/') throw ValidationError("malformed angle: '" + text + "'");
    divisor = parse_real(rest.substr(1));
  }
  return factor * std::numbers::pi / divisor;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << text;
}

std::string json_line(const Json& j) { return dump(j) + "\n"; }

std::string histogram_text(std::span<const HistogramBin> bins) {
  std::ostringstream os;
  write_histogram_csv(os, bins);
  return os.str();
}

Json histogram_json(std::span<const HistogramBin> bins) {
  Json arr = Json::array();
  for (const auto& b : bins)
    arr.push_back(Json{{"bin_left", b.left}, {"bin_right", b.right}, {"count", b.count.get_str()}, {"density", b.density}});
  return arr;
}

void require_budget(const BigInt& needed, std::uint64_t budget, const std::string& what) {
  if (needed > BigInt(std::to_string(budget)))
    throw BudgetExceeded(what + " " + needed.get_str() + " exceeds budget " + std::to_string(budget));
}

Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Execution exec_of(const CliConfig& c) { return c.serial ? Execution::serial : Execution::parallel; }

double default_width(const CliConfig& c) { return c.bin_width > 0.0 ? c.bin_width : static_cast<double>(c.t) / c.r; }

// --- commands ------------------------------------------------------------------------

void cmd_count_cores(const CliConfig& c, std::ostream& out) {
  write_text(json_line(Json{{"count", count_t_cores({c.r, c.s}, c.t).get_str()}}), c.output, out);
}

void cmd_count_frame(const CliConfig& c, std::ostream& out) {
  write_text(json_line(Json{{"count", count_t_cores_exact_frame({c.r, c.s}, c.t).get_str()}}), c.output, out);
}

void cmd_large_s_count(const CliConfig& c, std::ostream& out) {
  write_text(json_line(Json{{"count", count_t_cores_large_s(c.r, c.t).get_str()}}), c.output, out);
}

void cmd_asymptotic(const CliConfig& c, std::ostream& out) {
  Json j{{"A", asymptotic_constant({c.t, c.kappa})}};
  if (c.r > 0) {
    const auto s = static_cast<int>(std::llround(c.kappa * c.r));
    const BigInt count = count_t_cores_inclusion_exclusion({c.r, s}, c.t);
    j["s"] = s;
    j["count"] = count.get_str();
    j["scaled_count"] = count.get_d() * std::pow(static_cast<double>(c.t) / c.r, c.t - 1);
  }
  write_text(json_line(j), c.output, out);
}

void cmd_goddard(const CliConfig& c, std::ostream& out) {
  const double x_min = std::pow(std::ldexp(2.0, c.t) / (std::numbers::pi * (c.t - 1) * c.tol), 1.0 / (c.t - 1));
  if (c.t >= 2 && c.tol > 0.0) require_budget(BigInt(std::to_string(static_cast<std::uint64_t>(std::ceil(x_min / std::numbers::pi)))), c.budget, "quadrature panels");
  const auto q = goddard_integral(c.t, c.tol, exec_of(c));
  write_text(json_line(Json{{"value", q.value},
                            {"error_estimate", q.error_estimate},
                            {"tail_bound", q.tail_bound},
                            {"cutoff", q.cutoff},
                            {"panels", q.panels},
                            {"A", asymptotic_constant({c.t, 1.0})}}),
             c.output, out);
}

void cmd_swanepoel(const CliConfig& c, std::ostream& out) {
  require_budget(BigInt(std::to_string(c.terms)), c.budget, "series terms");
  const auto res = swanepoel_check(c.t, parse_angle(c.x), c.terms);
  write_text(json_line(Json{{"lhs", res.lhs},
                            {"rhs", res.rhs},
                            {"residual", std::fabs(res.lhs - res.rhs)},
                            {"truncation_bound", res.truncation_bound}}),
             c.output, out);
}

void cmd_core(const CliConfig& c, std::ostream& out) {
  const Partition lambda = parse_partition_list(c.partition);
  if (c.t < 2) throw ValidationError("t must be at least 2");
  const Partition core = t_core_fast(lambda, c.t);
  const auto desc = core_descriptor(lambda, c.t);
  write_text(json_line(Json{{"partition", lambda},
                            {"core", core},
                            {"core_size", core.size()},
                            {"quotient", t_quotient(lambda, c.t)},
                            {"descriptor", desc},
                            {"hooks_removed", (lambda.size() - core.size()) / c.t}}),
             c.output, out);
}

void cmd_fixed_core(const CliConfig& c, std::ostream& out) {
  const Partition rho = parse_partition_list(c.core);
  const Box b{c.r, c.s};
  const BigInt count = fixed_core_count(rho, b, c.t);
  Json j{{"count", count.get_str()},
         {"genfun", fixed_core_genfun(rho, b, c.t)},
         {"runner_sizes", core_runner_sizes(rho, b, c.t)},
         {"descriptor", core_descriptor(rho, c.t)}};
  if (c.enumerate) {
    require_budget(count, c.budget, "partitions to enumerate");
    auto parts = enumerate_with_core(rho, b, c.t);
    std::sort(parts.begin(), parts.end());
    j["partitions"] = parts;
  }
  write_text(json_line(j), c.output, out);
}

void cmd_expected_size(const CliConfig& c, std::ostream& out) {
  write_text(json_line(Json{{"mean", to_fraction_string(expected_core_size({c.r, c.s}, c.t))}}), c.output, out);
}

void cmd_exact_distribution(const CliConfig& c, std::ostream& out) {
  const Box b{c.r, c.s};
  const auto dist = exact_core_size_distribution(b, c.t, c.budget, exec_of(c));
  if (c.r < 1) throw ValidationError("r must be at least 1");
  const double scale = static_cast<double>(c.t) / c.r;
  const auto bins = histogram(dist, scale, default_width(c), binomial(b.perimeter(), b.rows));
  if (c.format == "csv") {
    write_text(histogram_text(bins), c.output, out);
    return;
  }
  const auto g = gamma_params(c.t, static_cast<double>(c.s) / c.r);
  Json j{{"distribution", dist},
         {"mean", to_fraction_string(dist.mean())},
         {"scaled_mean", to_fraction_string(dist.mean() * ratio(c.t, c.r))},
         {"gamma", g},
         {"ks_distance", ks_distance(dist, scale, g)}};
  write_text(json_line(j), c.output, out);
  if (!c.output.empty()) write_text(histogram_text(bins), c.output + ".histogram.csv", out);
}

void cmd_pgf(const CliConfig& c, std::ostream& out) {
  if (c.t < 2) throw ValidationError("t must be at least 2");
  if (c.r < 0) throw ValidationError("r must be nonnegative");
  require_budget(count_t_cores_large_s(c.r, c.t), c.budget, "compositions");
  const auto phi = pgf_large_s(c.r, c.t);
  Json j{{"pgf", phi},
         {"value_at_one", to_fraction_string(phi.value_at_one())},
         {"mean", to_fraction_string(phi.derivative_at_one())}};
  write_text(json_line(j), c.output, out);
}

void cmd_sample(const CliConfig& c, std::ostream& out) {
  const Box b{c.r, c.s};
  if (c.n_samples == 0) throw ValidationError("n must be positive");
  if (c.r < 1) throw ValidationError("r must be at least 1");
  require_budget(BigInt(std::to_string(c.n_samples)), c.budget, "samples");
  const auto run = sample_core_sizes(b, c.t, c.n_samples, c.seed, {c.covariance, exec_of(c)});
  const double kappa = c.kappa > 0.0 ? c.kappa : static_cast<double>(c.s) / c.r;
  const auto g = gamma_params(c.t, kappa);
  const auto report = gamma_fit_report(run, g);
  const auto bins = histogram(run.values, default_width(c));
  std::ostringstream samples;
  write_sample_csv(samples, run);
  if (c.format == "csv") {
    write_text(samples.str(), c.output, out);
  } else {
    Json j{{"box", {c.r, c.s}},
           {"t", c.t},
           {"seed", c.seed},
           {"n", c.n_samples},
           {"gamma", g},
           {"exact_mean", to_fraction_string(expected_core_size(b, c.t) * ratio(c.t, c.r))},
           {"fit", report},
           {"histogram", histogram_json(bins)}};
    write_text(json_line(j), c.output, out);
  }
  if (!c.output.empty()) {
    if (c.format != "csv") write_text(samples.str(), c.output + ".samples.csv", out);
    write_text(histogram_text(bins), c.output + ".histogram.csv", out);
  }
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << dump(Json{{"error", kind}, {"message", message}}) << "\n";
}

}  // namespace

Partition parse_partition_list(const std::string& text) {
  std::vector<int> parts;
  if (!text.empty()) {
    std::size_t begin = 0;
    while (true) {
      const auto comma = text.find(',', begin);
      const std::string token = text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
      const int v = parse_int(token);
      if (v <= 0) throw ValidationError("partition parts must be positive");
      if (!parts.empty() && v > parts.back()) throw ValidationError("partition parts must be weakly decreasing: '" + text + "'");
      parts.push_back(v);
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
  }
  return Partition(std::move(parts));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"t-cores of partitions in a rectangle"};
  app.require_subcommand(1);
  CliConfig cfg;

  const auto box = [&](CLI::App* sub, bool need_s) {
    sub->add_option("--r", cfg.r, "rows")->required();
    if (need_s) sub->add_option("--s", cfg.s, "columns")->required();
  };
  const auto t_opt = [&](CLI::App* sub) { sub->add_option("--t", cfg.t, "core parameter t >= 2")->required(); };
  const auto output = [&](CLI::App* sub) { sub->add_option("--output", cfg.output, "write to this file instead of stdout"); };
  const auto budget = [&](CLI::App* sub) { sub->add_option("--budget", cfg.budget, "work budget")->capture_default_str(); };
  const auto format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, void (*)(const CliConfig&, std::ostream&)>> commands;
  const auto add = [&](const std::string& name, const std::string& help, void (*fn)(const CliConfig&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    output(sub);
    return sub;
  };

  auto* count_cores = add("count-cores", "number of t-cores in Box(r, s)", cmd_count_cores);
  box(count_cores, true);
  t_opt(count_cores);

  auto* count_frame = add("count-frame", "t-cores with exactly r parts and largest part s", cmd_count_frame);
  box(count_frame, true);
  t_opt(count_frame);

  auto* large_s = add("large-s-count", "C(r + t - 1, r)", cmd_large_s_count);
  box(large_s, false);
  t_opt(large_s);

  auto* asymptotic = add("asymptotic", "A(t, kappa); with --r also the scaled finite count", cmd_asymptotic);
  t_opt(asymptotic);
  asymptotic->add_option("--kappa", cfg.kappa, "limit of s / r")->required();
  asymptotic->add_option("--r", cfg.r, "rows for the finite comparison");

  auto* goddard = add("goddard", "(1/pi) int_0^inf (2 sin x / x)^t dx", cmd_goddard);
  t_opt(goddard);
  goddard->add_option("--tol", cfg.tol, "absolute tolerance")->capture_default_str();
  goddard->add_flag("--serial", cfg.serial, "use the serial reference kernel");
  budget(goddard);

  auto* swanepoel = add("swanepoel", "sum_n sin^t(nx)/n^t against its closed form", cmd_swanepoel);
  t_opt(swanepoel);
  swanepoel->add_option("--x", cfg.x, "angle, a real or [a*]pi[/b]")->required();
  swanepoel->add_option("--terms", cfg.terms, "number of series terms")->capture_default_str();
  budget(swanepoel);

  auto* core = add("core", "t-core, t-quotient and descriptor of a partition", cmd_core);
  t_opt(core);
  core->add_option("--partition", cfg.partition, "comma-separated parts, e.g. 5,4,4,1")->required();

  auto* fixed_core = add("fixed-core", "partitions of Box(r, s) with a given t-core", cmd_fixed_core);
  box(fixed_core, true);
  t_opt(fixed_core);
  fixed_core->add_option("--core", cfg.core, "comma-separated parts of the t-core")->required();
  fixed_core->add_flag("--enumerate", cfg.enumerate, "list the partitions");
  budget(fixed_core);

  auto* expected = add("expected-size", "E|core_t(lambda)| over Box(r, s)", cmd_expected_size);
  box(expected, true);
  t_opt(expected);

  auto* exact = add("exact-distribution", "law of |core_t(lambda)| over Box(r, s)", cmd_exact_distribution);
  box(exact, true);
  t_opt(exact);
  budget(exact);
  format(exact);
  exact->add_option("--bin-width", cfg.bin_width, "histogram bin width, default t/r");
  exact->add_flag("--serial", cfg.serial, "use the serial reference kernel");

  auto* pgf = add("pgf", "s -> infinity generating function of |core_t|", cmd_pgf);
  box(pgf, false);
  t_opt(pgf);
  budget(pgf);

  auto* sample = add("sample", "Monte Carlo sample of t|core_t(lambda)|/r", cmd_sample);
  box(sample, true);
  t_opt(sample);
  sample->add_option("--n", cfg.n_samples, "number of samples")->required();
  sample->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  sample->add_option("--kappa", cfg.kappa, "kappa for the Gamma law, default s / r");
  sample->add_option("--bin-width", cfg.bin_width, "histogram bin width, default t/r");
  sample->add_flag("--covariance", cfg.covariance, "report runner-count covariance");
  sample->add_flag("--serial", cfg.serial, "use the serial reference kernel");
  budget(sample);
  format(sample);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "validation", e.what());
    return kExitValidation;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) {
        fn(cfg, out);
        break;
      }
    }
  } catch (const BudgetExceeded& e) {
    emit_error(err, "budget", e.what());
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const std::domain_error& e) {
    emit_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error(err, "runtime", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace tcore
