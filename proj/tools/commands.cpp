#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>

#include <fmt/format.h>

#include "lpball/constants.hpp"
#include "lpball/geometry.hpp"
#include "lpball/goodness_of_fit.hpp"
#include "lpball/oracle.hpp"
#include "lpball/p_exponential.hpp"
#include "lpball/radial.hpp"
#include "lpball/special_functions.hpp"
#include "lpball/tail_estimator.hpp"
#include "output.hpp"

namespace lpball::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<KeySpec> output_keys() {
  return {{"output", "-", false, "output path, - for stdout"},
          {"format", "csv", false, "csv or jsonl"}};
}

std::vector<KeySpec> sampling_keys(const std::string& trials) {
  return {{"trials", trials, false, "Monte Carlo trials per campaign"},
          {"seed", "1", false, "RNG seed"},
          {"chunks", "16", false, "trial chunks"},
          {"workers", "0", false, "worker threads, 0 = hardware concurrency"}};
}

std::vector<KeySpec> t_grid_keys(const std::string& t_min, const std::string& t_max,
                                 const std::string& points) {
  return {{"t_min", t_min, false, "smallest threshold"},
          {"t_max", t_max, false, "largest threshold"},
          {"t_points", points, false, "number of thresholds"},
          {"t_spacing", "log", false, "linear or log"}};
}

std::vector<KeySpec> join(std::initializer_list<std::vector<KeySpec>> parts) {
  std::vector<KeySpec> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<double> t_grid(const Config& config) {
  const double lo = config.get_double("t_min");
  const double hi = config.get_double("t_max");
  const auto points = config.get_uint("t_points");
  const auto spacing = config.get_string("t_spacing");
  if (!(lo > 0.0) || !std::isfinite(lo)) throw ConfigError("field 't_min': must be positive");
  if (!(hi >= lo) || !std::isfinite(hi)) throw ConfigError("field 't_max': must be >= t_min");
  if (points == 0) throw ConfigError("field 't_points': grid must be nonempty");
  if (spacing != "log" && spacing != "linear") {
    throw ConfigError(fmt::format("field 't_spacing': '{}' is not linear or log", spacing));
  }
  if (points == 1) return {lo};
  std::vector<double> grid(points);
  for (std::uint64_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = spacing == "log" ? lo * std::exp(f * std::log(hi / lo)) : lo + f * (hi - lo);
  }
  grid.back() = hi;
  return grid;
}

SamplingPlan plan_from(const Config& config) {
  SamplingPlan plan;
  plan.trials = config.get_uint("trials");
  plan.seed = config.get_uint("seed");
  plan.chunks = config.get_uint("chunks");
  plan.workers = config.get_uint("workers");
  if (plan.trials == 0) throw ConfigError("field 'trials': must be >= 1");
  if (plan.chunks == 0) throw ConfigError("field 'chunks': must be >= 1");
  return plan;
}

Body parse_body(const std::string& name) {
  if (name == "mu" || name == "mu_sphere" || name == "sphere") return Body::mu_sphere;
  if (name == "nu" || name == "nu_ball" || name == "ball") return Body::nu_ball;
  throw ConfigError(fmt::format("field 'body': '{}' is not mu or nu", name));
}

std::vector<double> positive_list(const Config& config, const std::string& key) {
  auto values = config.get_doubles(key);
  for (double v : values) {
    if (!(v > 0.0)) throw ConfigError(fmt::format("field '{}': values must be positive", key));
  }
  return values;
}

std::vector<std::size_t> dimension_list(const Config& config) {
  std::vector<std::size_t> out;
  for (auto n : config.get_uints("n")) {
    if (n == 0) throw ConfigError("field 'n': dimensions must be >= 1");
    out.push_back(static_cast<std::size_t>(n));
  }
  return out;
}

RowWriter make_writer(const Config& config, std::vector<std::string> columns) {
  return RowWriter(config.get_string("output"), parse_format(config.get_string("format")),
                   std::move(columns));
}

Cell maybe(double v, bool present) { return present ? Cell{v} : Cell{}; }

// ---------------------------------------------------------------- tail-sweep

int run_tail_sweep(const Config& config) {
  const auto ps = positive_list(config, "p");
  const auto qs = positive_list(config, "q");
  const auto ns = dimension_list(config);
  std::vector<Body> bodies;
  for (const auto& b : config.get_strings("body")) bodies.push_back(parse_body(b));
  const auto ts = t_grid(config);
  const auto plan = plan_from(config);
  const bool fit = config.get_bool("fit");
  for (double p : ps) {
    for (double q : qs) {
      if (!(q >= p)) throw ConfigError(fmt::format("field 'q': q = {} is below p = {}", q, p));
    }
  }

  auto writer = make_writer(
      config, {"record", "p", "q", "n", "body", "t", "hits", "trials", "p_hat", "ci_low",
               "ci_high", "exponent_arg", "envelope_lower", "envelope_upper", "upper_valid",
               "lower_valid", "moreover", "caveat", "slope", "slope_low", "slope_high",
               "admissible", "seed", "chunks", "wall_time"});
  int status = kExitOk;
  for (double p : ps) {
    for (std::size_t n : ns) {
      for (Body body : bodies) {
        std::vector<QGrid> grids;
        for (double q : qs) grids.push_back({q, ts, std::nullopt});
        const auto start = Clock::now();
        const auto sweep = estimate_tail_sweep(p, n, body, grids, plan);
        const double wall = seconds_since(start);
        for (std::size_t g = 0; g < qs.size(); ++g) {
          const double q = qs[g];
          for (std::size_t k = 0; k < ts.size(); ++k) {
            const auto& e = sweep.estimates[g][k];
            const auto env = bound_envelope({p, q, n, ts[k], body});
            writer.write({std::string("estimate"), p, q, std::uint64_t{n},
                          std::string(to_string(body)), ts[k], e.hits, e.trials, e.p_hat,
                          e.ci_low, e.ci_high, env.exponent_arg, env.lower, env.upper,
                          env.upper_valid, env.lower_valid, env.moreover, env.caveat, Cell{},
                          Cell{}, Cell{}, Cell{}, e.seed, e.chunks, wall});
          }
          if (!fit) continue;
          std::optional<ExponentFit> result;
          std::size_t admissible = 0;
          try {
            result = fit_exponent_from(p, q, n, ts, sweep.estimates[g]);
            admissible = result->admissible_count;
          } catch (const InsufficientDataError& e) {
            for (const auto& point : e.points()) admissible += point.admissible ? 1 : 0;
            std::cerr << "lpball: " << e.what() << fmt::format(" (p={}, q={}, n={})", p, q, n)
                      << '\n';
            for (const auto& point : e.points()) {
              std::cerr << fmt::format("  t={} hits={} {}\n", format_double(point.t),
                                       point.estimate.hits,
                                       point.admissible ? "admissible" : point.reason);
            }
            status = kExitInsufficientData;
          }
          writer.write({std::string("fit"), p, q, std::uint64_t{n}, std::string(to_string(body)),
                        Cell{}, Cell{}, plan.trials, Cell{}, Cell{}, Cell{}, Cell{}, Cell{},
                        Cell{}, Cell{}, Cell{}, Cell{}, Cell{},
                        maybe(result ? result->slope : 0.0, result.has_value()),
                        maybe(result ? result->slope_low : 0.0, result.has_value()),
                        maybe(result ? result->slope_high : 0.0, result.has_value()),
                        std::uint64_t{admissible}, plan.seed,
                        std::uint64_t{std::clamp<std::uint64_t>(plan.chunks, 1, plan.trials)},
                        wall});
        }
      }
    }
  }
  writer.finish();
  return status;
}

// ---------------------------------------------------------------- sample

int run_sample(const Config& config) {
  const double p = config.get_double("p");
  const auto n = config.get_uint("n");
  const auto count = config.get_uint("count");
  const auto seed = config.get_uint("seed");
  const auto region = config.get_string("region");
  const auto normalization_name = config.get_string("normalization");
  if (!(p > 0.0)) throw ConfigError("field 'p': must be positive");
  if (n == 0) throw ConfigError("field 'n': must be >= 1");
  Normalization normalization;
  if (normalization_name == "small_ell") {
    normalization = Normalization::small_ell;
  } else if (normalization_name == "big_l") {
    normalization = Normalization::big_l;
  } else {
    throw ConfigError(fmt::format("field 'normalization': '{}' is not small_ell or big_l",
                                  normalization_name));
  }
  if (region != "quadrant_sphere" && region != "full_sphere" && region != "full_ball") {
    throw ConfigError(fmt::format(
        "field 'region': '{}' is not quadrant_sphere, full_sphere or full_ball", region));
  }
  auto writer = make_writer(config, {"record", "index", "region", "normalization", "source_S",
                                     "coordinate", "value", "seed", "wall_time"});
  const auto start = Clock::now();
  const auto stream_seed = derive_seed(seed, 0x73616d706c65);  // "sample"
  for (std::uint64_t i = 0; i < count; ++i) {
    RandomStream stream(stream_seed, i);
    SpherePoint point;
    if (region == "full_ball") {
      point = sample_ball(p, n, normalization, stream);
    } else {
      point = region == "quadrant_sphere" ? sample_quadrant_sphere(p, n, stream)
                                          : sample_full_sphere(p, n, stream);
      point = with_normalization(point, normalization);
    }
    const double wall = seconds_since(start);
    for (std::size_t k = 0; k < point.coords.size(); ++k) {
      writer.write({std::string("sample"), i, region, normalization_name, point.source_S,
                    std::uint64_t{k}, point.coords[k], seed, wall});
    }
  }
  writer.finish();
  return kExitOk;
}

// ---------------------------------------------------------------- radial-check

int run_radial_check(const Config& config) {
  const auto ps = positive_list(config, "p");
  const auto qs = positive_list(config, "q");
  const auto ns = dimension_list(config);
  const auto ts = t_grid(config);
  const auto plan = plan_from(config);
  const auto order = config.get_uint("order");
  const auto profile_points = config.get_uint("profile_points");
  if (order < 2) throw ConfigError("field 'order': quadrature order must be >= 2");
  for (double p : ps) {
    for (double q : qs) {
      if (!(q >= p)) throw ConfigError(fmt::format("field 'q': q = {} is below p = {}", q, p));
    }
  }
  auto writer = make_writer(
      config, {"record", "p", "q", "n", "t", "r", "mu", "mu_low", "mu_high", "nu_direct",
               "nu_direct_low", "nu_direct_high", "nu_radial", "nu_radial_low",
               "nu_radial_high", "agree", "trials", "seed", "chunks", "wall_time"});
  const double floor = *std::min_element(ts.begin(), ts.end());
  const auto chunks = std::uint64_t{std::clamp<std::uint64_t>(plan.chunks, 1, plan.trials)};
  for (double p : ps) {
    for (std::size_t n : ns) {
      const auto start = Clock::now();
      std::vector<QGrid> mu_grids;
      std::vector<QGrid> nu_grids;
      for (double q : qs) {
        mu_grids.push_back({q, {}, floor});
        nu_grids.push_back({q, ts, std::nullopt});
      }
      const auto mu_sweep = estimate_tail_sweep(p, n, Body::mu_sphere, mu_grids, plan);
      const auto nu_sweep = estimate_tail_sweep(p, n, Body::nu_ball, nu_grids, plan);
      const double wall = seconds_since(start);
      for (std::size_t g = 0; g < qs.size(); ++g) {
        const auto& cache = *mu_sweep.caches[g];
        for (std::size_t k = 0; k < ts.size(); ++k) {
          const double t = ts[k];
          const auto& direct = nu_sweep.estimates[g][k];
          const auto radial = nu_from_mu(n, t, cache, static_cast<int>(order));
          const bool agree = radial.low <= direct.ci_high && direct.ci_low <= radial.high;
          writer.write({std::string("radial"), p, qs[g], std::uint64_t{n}, t, Cell{}, Cell{},
                        Cell{}, Cell{}, direct.p_hat, direct.ci_low, direct.ci_high,
                        radial.value, radial.low, radial.high, agree, plan.trials, plan.seed,
                        chunks, wall});
          for (std::uint64_t j = 1; j <= profile_points; ++j) {
            // radii equally spaced in s = r^n, where the integrand lives
            const double s = static_cast<double>(j) / static_cast<double>(profile_points);
            const double r = std::exp(std::log(s) / static_cast<double>(n));
            const auto e = cache.estimate(t / r, chunks);
            writer.write({std::string("profile"), p, qs[g], std::uint64_t{n}, t, r, e.p_hat,
                          e.ci_low, e.ci_high, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{},
                          Cell{}, plan.trials, plan.seed, chunks, wall});
          }
        }
      }
    }
  }
  writer.finish();
  return kExitOk;
}

// ---------------------------------------------------------------- dist-tests

struct DistRow {
  std::string test;
  double p;
  std::optional<std::size_t> n;
  double statistic;
  std::optional<double> df;
  double p_value;
};

std::vector<DistRow> distribution_tests(double p, std::size_t n, std::uint64_t draws,
                                        std::uint64_t seed, bool with_xp) {
  std::vector<DistRow> rows;
  const PExponential law(p);
  if (with_xp) {
    std::vector<double> xp(draws);
    const auto tag = derive_seed(seed, 0x7870);
    for (std::uint64_t i = 0; i < draws; ++i) {
      RandomStream stream(tag, i);
      const double x = law.sample(stream);
      xp[i] = std::pow(x, p);
    }
    const auto ks = ks_test(xp, [&](double u) { return u <= 0.0 ? 0.0 : gamma_p(1.0 / p, u); });
    rows.push_back({"xp_gamma_ks", p, std::nullopt, ks.statistic, std::nullopt, ks.p_value});
  }
  std::vector<double> first(draws);
  std::vector<double> last(draws);
  std::vector<double> source(draws);
  const auto sphere_tag = derive_seed(seed, 0x737068);
  for (std::uint64_t i = 0; i < draws; ++i) {
    RandomStream stream(sphere_tag, i);
    const auto point = sample_quadrant_sphere(p, n, stream);
    first[i] = point.coords.front();
    last[i] = point.coords.back();
    source[i] = point.source_S;
  }
  std::vector<double> first_pow(draws);
  for (std::uint64_t i = 0; i < draws; ++i) first_pow[i] = std::pow(first[i], p);
  const auto coordinate =
      ks_test(first_pow, [&](double x) { return beta_coordinate_cdf(p, n, std::clamp(x, 0.0, 1.0)); });
  rows.push_back({"coordinate_ks", p, n, coordinate.statistic, std::nullopt, coordinate.p_value});
  if (n >= 2) {
    const auto chi = chi_square_independence(source, first, 10);
    rows.push_back({"independence_chi2", p, n, chi.statistic, chi.df, chi.p_value});
    const auto exch = ks_two_sample(first, last);
    rows.push_back({"exchangeability_ks", p, n, exch.statistic, std::nullopt, exch.p_value});
  }
  std::vector<SpherePoint> ball(draws);
  const auto ball_tag = derive_seed(seed, 0x62616c6c);
  for (std::uint64_t i = 0; i < draws; ++i) {
    RandomStream stream(ball_tag, i);
    ball[i] = sample_ball(p, n, Normalization::small_ell, stream);
  }
  const auto radial = radial_cdf_check(p, n, ball);
  rows.push_back({"radial_ks", p, n, radial.statistic, std::nullopt, radial.p_value});
  return rows;
}

int run_dist_tests(const Config& config) {
  const auto ps = positive_list(config, "p");
  const auto ns = dimension_list(config);
  const auto draws = config.get_uint("draws");
  const auto seed = config.get_uint("seed");
  const double level = config.get_double("level");
  if (draws < 500) throw ConfigError("field 'draws': at least 500 draws are needed");
  if (!(level > 0.0 && level < 1.0)) throw ConfigError("field 'level': must lie in (0, 1)");
  auto writer = make_writer(config, {"record", "test", "p", "n", "draws", "statistic", "df",
                                     "p_value", "level", "passed", "seed", "wall_time"});
  for (double p : ps) {
    bool first_n = true;
    for (std::size_t n : ns) {
      const auto start = Clock::now();
      const auto rows = distribution_tests(p, n, draws, seed, first_n);
      first_n = false;
      const double wall = seconds_since(start);
      for (const auto& row : rows) {
        writer.write({std::string("dist_test"), row.test, row.p,
                      row.n ? Cell{std::uint64_t{*row.n}} : Cell{}, draws, row.statistic,
                      row.df ? Cell{*row.df} : Cell{}, row.p_value, level,
                      row.p_value >= level, seed, wall});
      }
    }
  }
  writer.finish();
  return kExitOk;
}

// ---------------------------------------------------------------- envelope

int run_envelope(const Config& config) {
  const auto ps = positive_list(config, "p");
  const auto qs = positive_list(config, "q");
  const auto ns = dimension_list(config);
  const auto ts = t_grid(config);
  auto writer = make_writer(
      config, {"record", "p", "q", "n", "t", "exponent_arg", "c", "C", "T", "cap",
               "envelope_lower", "envelope_upper", "upper_valid", "lower_valid", "moreover",
               "caveat", "wall_time"});
  const auto start = Clock::now();
  for (double p : ps) {
    for (double q : qs) {
      if (!(q >= p)) throw ConfigError(fmt::format("field 'q': q = {} is below p = {}", q, p));
      for (std::size_t n : ns) {
        for (double t : ts) {
          const auto env = bound_envelope({p, q, n, t, Body::mu_sphere});
          writer.write({std::string("envelope"), p, q, std::uint64_t{n}, t, env.exponent_arg,
                        env.c_used, env.C_used, env.T_used, env.cap, env.lower, env.upper,
                        env.upper_valid, env.lower_valid, env.moreover, env.caveat,
                        seconds_since(start)});
        }
      }
    }
  }
  writer.finish();
  return kExitOk;
}

// ---------------------------------------------------------------- constants

int run_constants(const Config& config) {
  auto writer = make_writer(
      config, {"record", "name", "value", "provenance", "description", "version", "wall_time"});
  const auto start = Clock::now();
  for (const auto& c : constants::all()) {
    writer.write({std::string("constant"), std::string(c.name), c.value,
                  std::string(c.provenance), std::string(c.description),
                  std::string(constants::kVersion), seconds_since(start)});
  }
  writer.finish();
  return kExitOk;
}

// ---------------------------------------------------------------- calibrate

int run_calibrate(const Config& config) {
  const auto plan = plan_from(config);
  const auto draws = config.get_uint("draws");
  if (draws == 0) throw ConfigError("field 'draws': must be >= 1");
  auto writer = make_writer(config, {"record", "quantity", "p", "q", "n", "t", "value", "hits",
                                     "trials", "seed", "wall_time"});
  const auto start = Clock::now();
  auto row = [&](const std::string& quantity, double p, Cell q, Cell n, Cell t, double value,
                 Cell hits, Cell trials) {
    writer.write({std::string("calibration"), quantity, p, q, n, t, value, hits, trials,
                  plan.seed, seconds_since(start)});
  };

  // κ: E(Σ x_i^q)^{1/q} against the regime formula.
  double kappa_min = INFINITY;
  double kappa_max = 0.0;
  const auto kappa_seed = derive_seed(plan.seed, 0x6b61707061);
  for (double p : {1.0, 2.0}) {
    const PExponential law(p);
    for (std::size_t n : {64u, 256u, 1024u}) {
      const double log_n = std::ceil(std::log(static_cast<double>(n)));
      std::vector<double> sums(4, 0.0);
      const std::vector<double> qs{2.0, 4.0, log_n, 2.0 * log_n};
      std::vector<double> x(n);
      std::vector<double> xp(n);
      for (std::uint64_t i = 0; i < draws; ++i) {
        RandomStream stream(kappa_seed, i);
        law.fill(x, xp, stream);
        const double max_x = *std::max_element(x.begin(), x.end());
        for (std::size_t k = 0; k < qs.size(); ++k) {
          sums[k] += max_x * detail::scaled_power_mean(x, max_x, qs[k]);
        }
      }
      for (std::size_t k = 0; k < qs.size(); ++k) {
        const double ratio = sums[k] / static_cast<double>(draws) / qnorm_regime_scale(p, qs[k], n);
        kappa_min = std::min(kappa_min, ratio);
        kappa_max = std::max(kappa_max, ratio);
        row("kappa_ratio", p, qs[k], std::uint64_t{n}, Cell{}, ratio, Cell{}, draws);
      }
    }
  }
  row("kappa_ratio_min", 1.0, Cell{}, Cell{}, Cell{}, kappa_min, Cell{}, draws);
  row("kappa_ratio_max", 1.0, Cell{}, Cell{}, Cell{}, kappa_max, Cell{}, draws);

  // Exponents −ln(CI)/arg on the envelope grids of the sandwich cells.
  struct Cellspec {
    double p;
    double q;
    std::size_t n;
  };
  const std::vector<Cellspec> cells{{1.0, 4.0, 256},      {1.0, 2.0, 1024},
                                    {2.0, 6.0, 256},      {1.0, kInfinity, 1024},
                                    {2.0, kInfinity, 1024}};
  double upper_min = INFINITY;
  double lower_max = 0.0;
  for (const auto& cell : cells) {
    const auto ts = envelope_t_grid(cell.p, cell.q, cell.n, 6);
    if (ts.empty()) {
      row("empty_grid", cell.p, cell.q, std::uint64_t{cell.n}, Cell{}, 0.0, Cell{}, plan.trials);
      continue;
    }
    const QGrid grid{cell.q, ts, std::nullopt};
    const auto sweep = estimate_tail_sweep(cell.p, cell.n, Body::mu_sphere,
                                           std::span<const QGrid>(&grid, 1), plan);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const auto& e = sweep.estimates[0][k];
      const double arg = exponent_argument(cell.p, cell.q, cell.n, ts[k]);
      const double upper = -std::log(e.ci_high) / arg;
      upper_min = std::min(upper_min, upper);
      row("upper_exponent", cell.p, cell.q, std::uint64_t{cell.n}, ts[k], upper, e.hits,
          e.trials);
      if (e.hits >= kMinFitHits) {
        const double lower = -std::log(e.ci_low) / arg;
        lower_max = std::max(lower_max, lower);
        row("lower_exponent", cell.p, cell.q, std::uint64_t{cell.n}, ts[k], lower, e.hits,
            e.trials);
      }
    }
    try {
      const auto fit = fit_exponent_from(cell.p, cell.q, cell.n, ts, sweep.estimates[0]);
      row("slope", cell.p, cell.q, std::uint64_t{cell.n}, Cell{}, fit.slope, Cell{},
          plan.trials);
    } catch (const InsufficientDataError&) {
      row("slope_unavailable", cell.p, cell.q, std::uint64_t{cell.n}, Cell{}, 0.0, Cell{},
          plan.trials);
    }
  }
  row("upper_exponent_min", 1.0, Cell{}, Cell{}, Cell{}, upper_min, Cell{}, plan.trials);
  row("lower_exponent_max", 1.0, Cell{}, Cell{}, Cell{}, lower_max, Cell{}, plan.trials);
  writer.finish();
  return kExitOk;
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> all = [] {
    std::vector<Command> list;
    list.push_back(
        {"tail-sweep", "Monte Carlo tail estimates with bound envelopes over a (p, q, n, t) grid",
         join({{{"p", "[1]", true, "p values"},
                {"q", "[4]", true, "q values (inf allowed)"},
                {"n", "[256]", true, "dimensions"},
                {"body", "[mu]", true, "mu (sphere) and/or nu (ball)"}},
               t_grid_keys("2", "3.5", "6"),
               sampling_keys("100000"),
               {{"fit", "false", false, "append an exponent fit row per (p, q, n, body)"}},
               output_keys()}),
         run_tail_sweep});
    list.push_back({"sample", "Dump raw sphere or ball samples, one row per coordinate",
                    join({{{"p", "1", false, "norm exponent"},
                           {"n", "3", false, "dimension"},
                           {"region", "quadrant_sphere", false,
                            "quadrant_sphere, full_sphere or full_ball"},
                           {"normalization", "small_ell", false, "small_ell or big_l"},
                           {"count", "10", false, "number of points"},
                           {"seed", "1", false, "RNG seed"}},
                          output_keys()}),
                    run_sample});
    list.push_back(
        {"radial-check", "Ball tail from the radial integral of sphere tails vs direct sampling",
         join({{{"p", "[1]", true, "p values"},
                {"q", "[2]", true, "q values (inf allowed)"},
                {"n", "[64]", true, "dimensions"}},
               t_grid_keys("1.5", "1.5", "1"),
               sampling_keys("100000"),
               {{"order", "64", false, "s-panels for the error band"},
                {"profile_points", "0", false, "radial profile rows per threshold"}},
               output_keys()}),
         run_radial_check});
    list.push_back({"dist-tests", "KS and chi-square checks of the samplers",
                    join({{{"p", "[1, 2]", true, "p values"},
                           {"n", "[5]", true, "dimensions"},
                           {"draws", "100000", false, "draws per test"},
                           {"level", "0.001", false, "significance level"},
                           {"seed", "1", false, "RNG seed"}},
                          output_keys()}),
                    run_dist_tests});
    list.push_back({"envelope", "Analytic bound envelopes only (no sampling)",
                    join({{{"p", "[1]", true, "p values"},
                           {"q", "[4]", true, "q values (inf allowed)"},
                           {"n", "[256]", true, "dimensions"}},
                          t_grid_keys("2", "3.5", "6"),
                          output_keys()}),
                    run_envelope});
    list.push_back({"constants", "Print the frozen constants with provenance",
                    output_keys(), run_constants});
    list.push_back({"calibrate", "Calibration campaign for the frozen constants",
                    join({sampling_keys("1000000"),
                          {{"draws", "10000", false, "draws per expected-norm cell"}},
                          output_keys()}),
                    run_calibrate});
    return list;
  }();
  return all;
}

}  // namespace lpball::cli
