#include "moltype/inference.hpp"

#include <cmath>

#include "moltype/geometry.hpp"

namespace moltype::prob {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kQuantileFloor = 0x1p-53;

// Acklam's rational approximation to the standard normal quantile.
constexpr double kA[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                         -2.759285104469687e+02, 1.383577518672690e+02,
                         -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                         -1.556989798598866e+02, 6.680131188771972e+01,
                         -1.328068155288572e+01};
constexpr double kC[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                         -2.400758277161838e+00, -2.549732539343734e+00,
                         4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[] = {7.784695709041462e-03, 3.224671290700398e-01,
                         2.445134137142996e+00, 3.754408661907416e+00};

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double acklam(double p) {
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
           ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
           ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
         (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

}  // namespace

// ============================================================================
// Numeric primitives
// ============================================================================

double uniform01_from_bits(std::uint64_t bits) {
  // (k + 0.5) * 2^-52 is exact for every k below 2^52, so the result lies in
  // [2^-53, 1 - 2^-53] and never touches the endpoints.
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

double draw_uniform01(std::mt19937_64& gen) { return uniform01_from_bits(gen()); }

double normal_pdf(double mu, double sigma, double x) {
  if (!(sigma > 0.0))
    throw Error(Errc::bad_sigma, "normal_pdf needs sigma > 0");
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(kTwoPi));
}

double normal_quantile(double p) {
  if (std::isnan(p)) throw Error(Errc::bad_sigma, "normal_quantile of NaN");
  if (p < kQuantileFloor) p = kQuantileFloor;
  if (p > 1.0 - kQuantileFloor) p = 1.0 - kQuantileFloor;

  double x = acklam(p);
  // One Halley step against the exact CDF tightens the tails well past 1e-9.
  const double e = standard_normal_cdf(x) - p;
  const double u = e * std::sqrt(kTwoPi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

// ============================================================================
// Sampler
// ============================================================================

double Sampler::site_draw() {
  SiteAddress address = path_;
  address.push_back(counters_.back()++);
  auto [it, inserted] = trace_.sites.try_emplace(address, 0.0);
  if (inserted) it->second = draw_uniform01(fill_);
  visited_.push_back(std::move(address));
  return it->second;
}

double Sampler::normal(double mu, double sigma) {
  if (!(sigma > 0.0)) throw Error(Errc::bad_sigma, "normal needs sigma > 0");
  return mu + sigma * normal_quantile(site_draw());
}

void Sampler::score(double likelihood) {
  if (std::isnan(likelihood) || likelihood < 0.0 || std::isinf(likelihood))
    throw Error(Errc::score_of_negative,
                "score requires a finite non-negative likelihood");
  log_weight_ += std::log(likelihood);  // log(0) = -inf, never NaN
}

// ============================================================================
// Bundled models
// ============================================================================

Model<double> coin_model(std::vector<bool> observations, CoinConditioning conditioning) {
  return [observations = std::move(observations), conditioning](Sampler& s) {
    const double bias = s.uniform01();
    for (const bool heads : observations) {
      if (conditioning == CoinConditioning::soft) {
        s.score(heads ? bias : 1.0 - bias);
      } else {
        const bool flip = s.uniform01() < bias;
        s.condition(flip == heads);
      }
    }
    return bias;
  };
}

Model<Molecule> molecule_model(Molecule observed) {
  return [observed = std::move(observed)](Sampler& s) {
    static const std::vector<AtomicSymbol> kSymbols = {
        AtomicSymbol::C, AtomicSymbol::N, AtomicSymbol::O, AtomicSymbol::H};
    static const std::vector<bool> kIncluded = {true, false};
    static const std::vector<int> kOrders = {1, 2, 3};
    static const std::pair<AtomId, AtomId> kPairs[] = {{1, 2}, {1, 3}, {2, 3}};

    std::vector<Atom> atoms;
    for (std::int32_t i = 0; i < 3; ++i) {
      Sampler::Scope block(s, 0);
      Sampler::Scope atom(s, i);
      const AtomicSymbol symbol = s.uniform_discrete(kSymbols);
      const double x = s.normal(0.0, 1.0);
      const double y = s.normal(0.0, 1.0);
      const double z = s.normal(0.0, 1.0);
      const ElementAttributes attrs = element_attributes(symbol);
      atoms.push_back({i + 1, attrs, {x, y, z}, ground_state_config(attrs.atomic_number)});
    }

    std::vector<BondingSystem> systems;
    for (std::int32_t k = 0; k < 3; ++k) {
      Sampler::Scope block(s, 1);
      Sampler::Scope pair(s, k);
      if (s.uniform_discrete(kIncluded)) {
        const int order = s.uniform_discrete(kOrders);
        systems.push_back({2 * order, {Edge(kPairs[k].first, kPairs[k].second)}});
      }
    }

    Molecule molecule = build_molecule(std::move(atoms), std::move(systems));
    s.score(normal_pdf(0.0, 1.0, hausdorff_distance(molecule, observed)));
    return molecule;
  };
}

}  // namespace moltype::prob
