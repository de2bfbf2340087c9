#include "lpball/tail_estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "lpball/constants.hpp"
#include "lpball/error.hpp"
#include "lpball/p_exponential.hpp"
#include "lpball/special_functions.hpp"

namespace lpball {

std::string_view to_string(Body body) {
  return body == Body::mu_sphere ? "mu_sphere" : "nu_ball";
}

void validate(const TailQuery& query) {
  if (!(query.p > 0.0) || !std::isfinite(query.p)) {
    throw DomainError(fmt::format("TailQuery: p must be positive, got {}", query.p));
  }
  if (!(query.q >= query.p)) {
    throw DomainError(fmt::format("TailQuery: q must be >= p (p={}, q={})", query.p, query.q));
  }
  if (query.n < 1) throw DomainError("TailQuery: n must be >= 1");
  if (!(query.t > 0.0) || !std::isfinite(query.t)) {
    throw DomainError(fmt::format("TailQuery: t must be positive, got {}", query.t));
  }
}

double geometric_cap(double p, double q, std::size_t n) {
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  return std::exp((1.0 / p - inv_q) * std::log(static_cast<double>(n)));
}

bool upper_bound_window(const TailQuery& query) {
  return query.t > threshold_T(query.p, query.q, query.n);
}

bool lower_bound_window(const TailQuery& query) {
  return query.t >= 2.0 && query.t <= 0.5 * geometric_cap(query.p, query.q, query.n);
}

ProbabilityInterval clopper_pearson(std::uint64_t hits, std::uint64_t trials,
                                    double confidence) {
  if (trials == 0) throw DomainError("clopper_pearson: trials must be >= 1");
  if (hits > trials) throw DomainError("clopper_pearson: hits exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError(fmt::format("clopper_pearson: confidence {} outside (0, 1)", confidence));
  }
  const double alpha = 1.0 - confidence;
  const auto k = static_cast<double>(hits);
  const auto n = static_cast<double>(trials);
  ProbabilityInterval interval;
  if (hits == 0) {
    interval.low = 0.0;
    interval.high = -std::expm1(std::log(alpha) / n);
    return interval;
  }
  if (hits == trials) {
    interval.low = std::exp(std::log(alpha) / n);
    interval.high = 1.0;
    return interval;
  }
  interval.low = inverse_incomplete_beta(k, n - k + 1.0, 0.5 * alpha);
  interval.high = inverse_incomplete_beta(k + 1.0, n - k, 1.0 - 0.5 * alpha);
  return interval;
}

TailEstimate make_estimate(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed,
                           std::uint64_t chunks) {
  TailEstimate estimate;
  estimate.hits = hits;
  estimate.trials = trials;
  estimate.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  const auto interval = clopper_pearson(hits, trials);
  estimate.ci_low = std::min(interval.low, estimate.p_hat);
  estimate.ci_high = std::max(interval.high, estimate.p_hat);
  estimate.seed = seed;
  estimate.chunks = chunks;
  return estimate;
}

DecayConstants decay_constants(double p, double q) {
  DecayConstants constants_used;
  const double relative = std::isinf(q) ? 1.0 : std::clamp(q / p - 1.0, 0.0, 1.0);
  constants_used.c = constants::kGammaLower / p * relative;
  constants_used.C = constants::kGammaUpper / p;
  constants_used.moreover = q > 2.0 * p;
  return constants_used;
}

double threshold_T(double p, double q, std::size_t n) {
  const double log_n = std::log(static_cast<double>(n));
  if (std::isinf(q)) return constants::kTauInfinity * std::pow(log_n, 1.0 / p);
  if (q > 2.0 * p) return constants::kTau * std::pow(std::min(q, log_n), 1.0 / p);
  // moment-norm limit of the statistic; E x^p = 1/p
  return constants::kTauGeneric * std::pow(moment_xq(p, q), 1.0 / q) * std::pow(p, 1.0 / p);
}

double exponent_argument(double p, double q, std::size_t n, double t) {
  const double n_factor =
      std::isinf(q) ? 1.0 : std::exp(p / q * std::log(static_cast<double>(n)));
  return std::pow(t, p) * n_factor;
}

BoundEnvelope bound_envelope(const TailQuery& query) {
  validate(query);
  BoundEnvelope envelope;
  const auto decay = decay_constants(query.p, query.q);
  envelope.exponent_arg = exponent_argument(query.p, query.q, query.n, query.t);
  envelope.c_used = decay.c;
  envelope.C_used = decay.C;
  envelope.moreover = decay.moreover;
  envelope.T_used = threshold_T(query.p, query.q, query.n);
  envelope.cap = geometric_cap(query.p, query.q, query.n);
  envelope.upper_valid = query.t > envelope.T_used;
  envelope.lower_valid = lower_bound_window(query);
  envelope.caveat = query.p < 1.0;
  envelope.beyond_cap = query.t >= envelope.cap;
  if (envelope.beyond_cap) {
    envelope.lower = 0.0;
    envelope.upper = 0.0;
  } else {
    envelope.lower = std::exp(-decay.C * envelope.exponent_arg);
    envelope.upper = std::exp(-decay.c * envelope.exponent_arg);
  }
  return envelope;
}

std::uint64_t StatisticCache::hits_above(double t) const {
  if (t < floor) {
    throw DomainError(fmt::format("StatisticCache: threshold {} below cache floor {}", t, floor));
  }
  const auto it = std::upper_bound(exceedances.begin(), exceedances.end(), t);
  return static_cast<std::uint64_t>(exceedances.end() - it);
}

TailEstimate StatisticCache::estimate(double t, std::uint64_t chunks) const {
  return make_estimate(hits_above(t), trials, seed, chunks);
}

namespace {

constexpr std::uint64_t kMuStreamTag = 0x6d75;  // "mu"
constexpr std::uint64_t kNuStreamTag = 0x6e75;  // "nu"

struct ChunkResult {
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::vector<double>> exceedances;
};

void run_chunk(double p, std::size_t n, Body body, std::span<const QGrid> grids,
               std::uint64_t stream_seed, std::uint64_t begin, std::uint64_t end,
               ChunkResult& out) {
  out.counts.assign(grids.size(), {});
  out.exceedances.assign(grids.size(), {});
  for (std::size_t g = 0; g < grids.size(); ++g) {
    out.counts[g].assign(grids[g].thresholds.size(), 0);
  }
  const PExponential law(p);
  std::vector<double> x(n);
  std::vector<double> scratch(n);
  std::vector<double> statistics(grids.size());
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    RandomStream stream(stream_seed, trial);
    if (body == Body::mu_sphere) {
      double sum_pow = 0.0;
      do {
        law.fill(x, scratch, stream);
        sum_pow = 0.0;
        for (double v : scratch) sum_pow += v;
      } while (!(sum_pow > 0.0));
      const double max_x = *std::max_element(x.begin(), x.end());
      for (std::size_t g = 0; g < grids.size(); ++g) {
        statistics[g] = detail::ratio_from_sums(x, max_x, sum_pow, p, grids[g].q);
      }
    } else {
      detail::fill_ball(p, Normalization::big_l, x, scratch, stream);
      for (std::size_t g = 0; g < grids.size(); ++g) {
        statistics[g] = big_l_norm(x, grids[g].q);
      }
    }
    for (std::size_t g = 0; g < grids.size(); ++g) {
      const double stat = statistics[g];
      const auto& thresholds = grids[g].thresholds;
      for (std::size_t k = 0; k < thresholds.size(); ++k) {
        if (stat > thresholds[k]) ++out.counts[g][k];
      }
      if (grids[g].cache_floor && stat > *grids[g].cache_floor) {
        out.exceedances[g].push_back(stat);
      }
    }
  }
}

}  // namespace

SweepResult estimate_tail_sweep(double p, std::size_t n, Body body,
                                std::span<const QGrid> grids, const SamplingPlan& plan) {
  if (plan.trials == 0) throw DomainError("estimate_tail: trials must be >= 1");
  for (const auto& grid : grids) {
    for (double t : grid.thresholds) validate(TailQuery{p, grid.q, n, t, body});
    if (grid.thresholds.empty()) validate(TailQuery{p, grid.q, n, 1.0, body});
  }
  const std::size_t chunks =
      static_cast<std::size_t>(std::clamp<std::uint64_t>(plan.chunks, 1, plan.trials));
  std::size_t workers = plan.workers == 0 ? std::thread::hardware_concurrency() : plan.workers;
  workers = std::clamp<std::size_t>(workers, 1, chunks);
  const std::uint64_t stream_seed =
      derive_seed(plan.seed, body == Body::mu_sphere ? kMuStreamTag : kNuStreamTag);

  std::vector<ChunkResult> results(chunks);
  std::atomic<std::size_t> next_chunk{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t begin = plan.trials * c / chunks;
      const std::uint64_t end = plan.trials * (c + 1) / chunks;
      run_chunk(p, n, body, grids, stream_seed, begin, end, results[c]);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  SweepResult sweep;
  sweep.estimates.resize(grids.size());
  sweep.caches.resize(grids.size());
  for (std::size_t g = 0; g < grids.size(); ++g) {
    for (std::size_t k = 0; k < grids[g].thresholds.size(); ++k) {
      std::uint64_t hits = 0;
      for (const auto& chunk : results) hits += chunk.counts[g][k];
      sweep.estimates[g].push_back(make_estimate(hits, plan.trials, plan.seed, chunks));
    }
    if (grids[g].cache_floor) {
      StatisticCache cache;
      cache.p = p;
      cache.q = grids[g].q;
      cache.n = n;
      cache.body = body;
      cache.floor = *grids[g].cache_floor;
      cache.trials = plan.trials;
      cache.seed = plan.seed;
      for (const auto& chunk : results) {
        cache.exceedances.insert(cache.exceedances.end(), chunk.exceedances[g].begin(),
                                 chunk.exceedances[g].end());
      }
      std::sort(cache.exceedances.begin(), cache.exceedances.end());
      sweep.caches[g] = std::move(cache);
    }
  }
  return sweep;
}

TailEstimate estimate_tail(const TailQuery& query, const SamplingPlan& plan) {
  validate(query);
  const QGrid grid{query.q, {query.t}, std::nullopt};
  const auto sweep = estimate_tail_sweep(query.p, query.n, query.body,
                                         std::span<const QGrid>(&grid, 1), plan);
  return sweep.estimates[0][0];
}

TailEstimate infinity_norm_tail(double p, std::size_t n, double t, const SamplingPlan& plan) {
  return estimate_tail(TailQuery{p, kInfinity, n, t, Body::mu_sphere}, plan);
}

ExponentFit fit_exponent_from(double p, double q, std::size_t n,
                              std::span<const double> t_grid,
                              std::span<const TailEstimate> estimates, WindowPolicy policy,
                              std::uint64_t min_hits) {
  if (t_grid.size() != estimates.size()) {
    throw DomainError("fit_exponent: one estimate per threshold required");
  }
  ExponentFit fit;
  const double T = threshold_T(p, q, n);
  const double cap = geometric_cap(p, q, n);
  double sum_aa = 0.0;
  double sum_ay = 0.0;
  double sum_ay_low = 0.0;
  double sum_ay_high = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    FitPoint point;
    point.t = t_grid[i];
    point.exponent_arg = exponent_argument(p, q, n, point.t);
    point.estimate = estimates[i];
    const bool in_window =
        policy == WindowPolicy::both_bounds
            ? (point.t > T && point.t >= 2.0 && point.t <= 0.5 * cap)
            : (point.t > T && point.t < cap);
    if (!in_window) {
      point.reason = "outside validity window";
    } else if (point.estimate.hits < min_hits) {
      point.reason = fmt::format("fewer than {} hits", min_hits);
    } else if (point.estimate.hits == point.estimate.trials) {
      point.reason = "every trial hit";
    } else {
      point.admissible = true;
      const double a = point.exponent_arg;
      sum_aa += a * a;
      sum_ay += a * -std::log(point.estimate.p_hat);
      sum_ay_low += a * -std::log(point.estimate.ci_high);
      sum_ay_high += a * -std::log(point.estimate.ci_low);
      ++fit.admissible_count;
    }
    fit.points.push_back(std::move(point));
  }
  if (fit.admissible_count < 2) {
    throw InsufficientDataError(
        fmt::format("fit_exponent: {} admissible grid point(s), need at least 2",
                    fit.admissible_count),
        fit.points);
  }
  fit.slope = sum_ay / sum_aa;
  fit.slope_low = sum_ay_low / sum_aa;
  fit.slope_high = sum_ay_high / sum_aa;
  return fit;
}

ExponentFit fit_exponent(double p, double q, std::size_t n, std::span<const double> t_grid,
                         const SamplingPlan& plan, WindowPolicy policy,
                         std::uint64_t min_hits) {
  if (t_grid.empty()) throw DomainError("fit_exponent: empty threshold grid");
  const QGrid grid{q, std::vector<double>(t_grid.begin(), t_grid.end()), std::nullopt};
  const auto sweep =
      estimate_tail_sweep(p, n, Body::mu_sphere, std::span<const QGrid>(&grid, 1), plan);
  return fit_exponent_from(p, q, n, t_grid, sweep.estimates[0], policy, min_hits);
}

std::vector<double> envelope_t_grid(double p, double q, std::size_t n, std::size_t points,
                                    double min_predicted) {
  if (points == 0) return {};
  const double T = threshold_T(p, q, n);
  double t_low = 2.0;
  if (T >= 2.0) t_low = T * (1.0 + 1e-9);
  const auto decay = decay_constants(p, q);
  double t_high = 0.5 * geometric_cap(p, q, n);
  if (decay.c > 0.0) {
    const double n_factor = exponent_argument(p, q, n, 1.0);
    const double t_envelope = std::pow(-std::log(min_predicted) / (decay.c * n_factor), 1.0 / p);
    t_high = std::min(t_high, t_envelope);
  }
  if (t_high < t_low) return {};
  if (points == 1) return {t_low};
  std::vector<double> grid(points);
  const double ratio = std::log(t_high / t_low);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = t_low * std::exp(ratio * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  grid.back() = t_high;
  return grid;
}

}  // namespace lpball
