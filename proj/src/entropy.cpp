#include "zdc/entropy.hpp"

#include "zdc/error.hpp"
#include "zdc/tolerances.hpp"

#include <algorithm>
#include <cmath>

namespace zdc {

const char* method_name(EstimateMethod method) noexcept {
  switch (method) {
    case EstimateMethod::plugin:
      return "plugin";
    case EstimateMethod::code_rate:
      return "code_rate";
    case EstimateMethod::information_density:
      return "information_density";
  }
  return "?";
}

double phi(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(Errc::out_of_range, "phi is defined on [0, 1]");
  return t == 0.0 ? 0.0 : -t * std::log2(t);
}

double partition_entropy(std::span<const double> probs) {
  long double sum = 0, h = 0;
  for (double q : probs) {
    if (q < 0)
      throw Error(Errc::bad_probabilities, "negative probability");
    sum += q;
    h += phi(std::min(q, 1.0));
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > kTolerances.probability_sum)
    throw Error(Errc::bad_probabilities, "probabilities do not sum to 1");
  return static_cast<double>(h);
}

double block_entropy_rate(std::span<const double> frequencies, std::uint64_t block_sites) {
  long double h = 0;
  for (double f : frequencies)
    h += phi(f);
  return static_cast<double>(h / static_cast<long double>(block_sites));
}

EntropyEstimate plugin_block_entropy(const Pattern& p, std::uint64_t m) {
  const auto seq = block_sequence(p, m);
  const FrequencyVector x = frequency_vector(seq);
  std::vector<double> freqs;
  freqs.reserve(x.counts.size());
  for (const auto& [_, c] : x.counts)
    freqs.push_back(static_cast<double>(c) / static_cast<double>(x.total));
  const double h = block_entropy_rate(freqs, window_size(p.spec(), m));
  return {std::clamp(h, 0.0, std::log2(p.alphabet_size())), m, p.n(), EstimateMethod::plugin};
}

EntropyEstimate complexity_density(const Pattern& p, std::uint64_t m, const EncodeOptions& options) {
  const LengthReport r = code_length_report(p, m, options);
  return {static_cast<double>(r.total) / static_cast<double>(p.size()), m, p.n(), EstimateMethod::code_rate};
}

EntropyEstimate information_density(const Pattern& p, const AnalyticMeasure& mu) {
  const long double lp = mu.log2_cylinder(p);
  if (std::isinf(lp))
    throw Error(Errc::zero_probability, "pattern has a null cylinder under the measure");
  return {static_cast<double>(-lp / static_cast<long double>(p.size())), 0, p.n(),
          EstimateMethod::information_density};
}

XMode default_mode(const Tiling& tiling, unsigned alphabet_size) {
  const BigNat types = big_pow(alphabet_size, tiling.block_size());
  return types <= big_from_u64(kDenseLimit) ? XMode::dense : XMode::sparse;
}

double rate_overhead_budget(const Tiling& tiling, unsigned alphabet_size, XMode mode) {
  const double sites = static_cast<double>(window_size(tiling.spec, tiling.n));
  const double blocks = static_cast<double>(tiling.block_count());
  const double boundary = static_cast<double>(tiling.boundary_size());
  const double log_sigma = std::log2(static_cast<double>(alphabet_size));
  const double log_types = static_cast<double>(tiling.block_size()) * log_sigma;
  const double types = std::exp2(log_types);
  const double distinct = std::min(types, blocks);
  const double log_blocks = std::log2(blocks + 1);

  double x_max = 0;
  if (mode == XMode::dense)
    x_max = types * (2 * log_blocks + 1);
  else
    x_max = 2 * std::log2(distinct + 1) + 1 + distinct * (2 * log_types + 1 + 2 * log_blocks + 1);

  const double above = static_cast<double>(kContainerHeaderBits) + x_max + 1 + std::ceil(boundary * log_sigma);
  const double below = boundary * log_sigma + distinct * log_blocks;
  return std::max(above, below) / sites;
}

std::map<std::uint64_t, std::uint64_t> counting_census(const LatticeSpec& spec, std::uint64_t n,
                                                       unsigned alphabet_size, std::uint64_t m) {
  const Window window(spec, n);
  const std::uint64_t sites = window.size();
  const BigNat universe = big_pow(alphabet_size, sites);
  if (universe > big_from_u64(kMaxCensusUniverse))
    throw Error(Errc::universe_too_large, "more than 2^20 patterns to enumerate");

  std::map<std::uint64_t, std::uint64_t> census;
  std::vector<std::uint8_t> symbols(sites, 0);
  const std::uint64_t total = big_to_u64(universe);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::uint64_t j = sites; j-- > 0;) {
      symbols[j] = static_cast<std::uint8_t>(rest % alphabet_size);
      rest /= alphabet_size;
    }
    const Pattern p(window, alphabet_size, symbols);
    ++census[encode(p, m).header.payload_bits];
  }
  return census;
}

}  // namespace zdc
