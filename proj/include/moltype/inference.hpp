#ifndef MOLTYPE_INFERENCE_HPP
#define MOLTYPE_INFERENCE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "moltype/errors.hpp"
#include "moltype/mol_core.hpp"

namespace moltype::prob {

// ============================================================================
// Traces and the sampling effect
// ============================================================================

// Identifies one random choice by its dynamic call path: enclosing scope ids
// followed by the ordinal of the draw within that scope.
using SiteAddress = std::vector<std::int32_t>;

// Memoized uniform [0,1] draws keyed by site. Sites a run never visits are
// retained untouched.
struct Trace {
  std::map<SiteAddress, double> sites;

  bool operator==(const Trace&) const = default;
};

// Effect handler a model draws from. Every primitive consumes exactly one
// trace site; missing sites are filled from the attached generator and
// recorded, so a complete trace makes the run fully deterministic.
class Sampler {
 public:
  Sampler(Trace& trace, std::mt19937_64& fill) : trace_(trace), fill_(fill) {
    counters_.push_back(0);
  }

  double uniform01() { return site_draw(); }

  // options[floor(u * n)], clamped to the last option at u = 1.
  template <typename T>
  T uniform_discrete(const std::vector<T>& options) {
    if (options.empty())
      throw Error(Errc::empty_options, "uniform_discrete over no options");
    const double u = site_draw();
    auto index = static_cast<size_t>(u * static_cast<double>(options.size()));
    if (index >= options.size()) index = options.size() - 1;
    return options[index];
  }

  double normal(double mu, double sigma);

  // Multiplies the run's weight; zero gives -inf log-weight, never NaN.
  void score(double likelihood);
  void condition(bool ok) { score(ok ? 1.0 : 0.0); }

  double log_weight() const { return log_weight_; }
  const std::vector<SiteAddress>& visited() const { return visited_; }

  // Structured addressing: draws inside a scope share its id prefix, so
  // choices keep their identity when other branches appear or vanish.
  class Scope {
   public:
    Scope(Sampler& sampler, std::int32_t id) : sampler_(sampler) {
      sampler_.path_.push_back(id);
      sampler_.counters_.push_back(0);
    }
    ~Scope() {
      sampler_.path_.pop_back();
      sampler_.counters_.pop_back();
    }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Sampler& sampler_;
  };

 private:
  double site_draw();

  Trace& trace_;
  std::mt19937_64& fill_;
  double log_weight_ = 0.0;
  std::vector<std::int32_t> path_;
  std::vector<std::int32_t> counters_;
  std::vector<SiteAddress> visited_;
};

template <typename T>
using Model = std::function<T(Sampler&)>;

// ============================================================================
// Numeric primitives
// ============================================================================

// Maps raw generator output to (0, 1); shared by every distribution so runs
// are reproducible bit for bit across platforms.
double uniform01_from_bits(std::uint64_t bits);
double draw_uniform01(std::mt19937_64& gen);

double normal_pdf(double mu, double sigma, double x);

// Inverse standard-normal CDF, |error| < 1e-9 over (0, 1); arguments are
// clamped away from 0 and 1 to keep results finite.
double normal_quantile(double p);

// ============================================================================
// Running models
// ============================================================================

template <typename T>
struct WeightedRun {
  T value;
  double log_weight = 0.0;
  Trace trace;                        // completed: every visited site present
  std::vector<SiteAddress> visited;   // sites this run consumed, in order
};

namespace detail {
template <typename T>
WeightedRun<T> run_with(const Model<T>& model, Trace trace, std::mt19937_64& fill) {
  Sampler sampler(trace, fill);
  T value = model(sampler);
  return {std::move(value), sampler.log_weight(), std::move(trace), sampler.visited()};
}
}  // namespace detail

// Pure given a trace covering every visited site; otherwise missing draws
// come from a generator seeded with fill_seed and are recorded in the
// returned trace.
template <typename T>
WeightedRun<T> run_weighted(const Model<T>& model, Trace trace, std::uint64_t fill_seed = 0) {
  std::mt19937_64 fill(fill_seed);
  return detail::run_with(model, std::move(trace), fill);
}

// ============================================================================
// Inference
// ============================================================================

template <typename T>
struct Sample {
  T value;
  double log_weight = 0.0;
};

// Draws fresh prior traces until n runs with finite log-weight are found.
// Meant for models that only use 0/1 condition scores. Progress goes to
// diagnostics every 100000 attempts when a stream is given.
template <typename T>
std::vector<T> rejection_sample(const Model<T>& model, size_t n, std::uint64_t seed,
                                std::ostream* diagnostics = nullptr) {
  std::mt19937_64 rng(seed);
  std::vector<T> out;
  out.reserve(n);
  std::uint64_t attempts = 0;
  while (out.size() < n) {
    ++attempts;
    auto run = detail::run_with(model, Trace{}, rng);
    if (run.log_weight > -std::numeric_limits<double>::infinity())
      out.push_back(std::move(run.value));
    if (diagnostics && attempts % 100000 == 0)
      *diagnostics << "attempts=" << attempts << " accepted=" << out.size() << "\n";
  }
  if (diagnostics)
    *diagnostics << "attempts=" << attempts << " accepted=" << out.size() << "\n";
  return out;
}

// Single-site-jitter Metropolis-Hastings over traces: each step independently
// resamples every visited site with probability jitter (at least one site is
// forced), reruns the model, and accepts with min(1, exp(logW' - logW)).
// Returns `samples` draws taken after `burn_in` steps.
template <typename T>
std::vector<Sample<T>> metropolis_hastings(const Model<T>& model, double jitter,
                                           size_t samples, size_t burn_in,
                                           std::uint64_t seed,
                                           std::ostream* diagnostics = nullptr) {
  if (!(jitter > 0.0) || jitter > 1.0)
    throw Error(Errc::bad_sigma, "jitter must be in (0, 1]");
  std::mt19937_64 rng(seed);

  WeightedRun<T> current = detail::run_with(model, Trace{}, rng);
  for (int attempt = 1;
       current.log_weight == -std::numeric_limits<double>::infinity(); ++attempt) {
    if (attempt >= 1000)
      throw Error(Errc::zero_initial_weight,
                  "no finite-weight initial state in 1000 prior draws");
    current = detail::run_with(model, Trace{}, rng);
  }

  std::vector<Sample<T>> out;
  out.reserve(samples);
  const size_t steps = burn_in + samples;
  for (size_t step = 1; step <= steps; ++step) {
    Trace proposal = current.trace;
    std::vector<const SiteAddress*> selected;
    for (const SiteAddress& site : current.visited)
      if (draw_uniform01(rng) < jitter) selected.push_back(&site);
    if (selected.empty() && !current.visited.empty()) {
      const double u = draw_uniform01(rng);
      auto pick = static_cast<size_t>(u * static_cast<double>(current.visited.size()));
      if (pick >= current.visited.size()) pick = current.visited.size() - 1;
      selected.push_back(&current.visited[pick]);
    }
    for (const SiteAddress* site : selected)
      proposal.sites[*site] = draw_uniform01(rng);

    auto candidate = detail::run_with(model, std::move(proposal), rng);
    const double log_u = std::log(draw_uniform01(rng));
    const bool accepted = log_u < candidate.log_weight - current.log_weight;
    if (accepted) current = std::move(candidate);
    if (diagnostics)
      *diagnostics << "step=" << step << " accepted=" << (accepted ? 1 : 0)
                   << " logw=" << current.log_weight << "\n";
    if (step > burn_in) out.push_back({current.value, current.log_weight});
  }
  return out;
}

// ============================================================================
// Bundled models
// ============================================================================

enum class CoinConditioning {
  soft,  // Bernoulli likelihood per observation
  hard,  // flip per observation, exact match required
};

// Uniform prior on the bias; observations are heads=true. Returns the bias.
Model<double> coin_model(std::vector<bool> observations,
                         CoinConditioning conditioning = CoinConditioning::soft);

// Three atoms with uniform symbols (C, N, O, H) and standard-normal
// coordinates; each pair gets an optional localized bond of 2, 4 or 6
// electrons; scored by a standard-normal density on the Hausdorff distance
// to the observed structure.
Model<Molecule> molecule_model(Molecule observed);

}  // namespace moltype::prob

#endif
