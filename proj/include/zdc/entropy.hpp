#pragma once

#include "zdc/enum_coder.hpp"
#include "zdc/lattice.hpp"
#include "zdc/measures.hpp"
#include "zdc/pattern.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace zdc {

enum class EstimateMethod { plugin, code_rate, information_density };
const char* method_name(EstimateMethod method) noexcept;

// Bits per site.
struct EntropyEstimate {
  double value = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  EstimateMethod method = EstimateMethod::plugin;
};

// -t log2 t, with phi(0) = 0.
double phi(double t);
double partition_entropy(std::span<const double> probs);

// (1 / block_sites) * sum phi(f) over block-type frequencies f.
double block_entropy_rate(std::span<const double> frequencies, std::uint64_t block_sites);

// Plug-in estimate over the non-overlapping tiles of the coding tiling.
EntropyEstimate plugin_block_entropy(const Pattern& p, std::uint64_t m);

// Code length of encode(p, m), header included, per site.
EntropyEstimate complexity_density(const Pattern& p, std::uint64_t m, const EncodeOptions& options = {});

// -log2 mu([p]) / |Lambda_n|.
EntropyEstimate information_density(const Pattern& p, const AnalyticMeasure& mu);

// Largest possible |complexity_density - plugin_block_entropy| for any pattern
// on this tiling, from the type-class bounds
//   2^{N H} / (N+1)^D <= class_size <= 2^{N H}
// and the worst-case x/y/z/header field lengths.
double rate_overhead_budget(const Tiling& tiling, unsigned alphabet_size, XMode mode);
XMode default_mode(const Tiling& tiling, unsigned alphabet_size);

// Payload bit length -> number of patterns, over every pattern on Lambda_n.
inline constexpr std::uint64_t kMaxCensusUniverse = std::uint64_t{1} << 20;
std::map<std::uint64_t, std::uint64_t> counting_census(const LatticeSpec& spec, std::uint64_t n,
                                                       unsigned alphabet_size, std::uint64_t m);

}  // namespace zdc
