#pragma once

#include "zdc/enum_coder.hpp"
#include "zdc/measures.hpp"
#include "zdc/pattern.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zdc {

// Real-valued function of the pattern on a translate of Lambda_w, tabulated by
// the base-|Sigma| index of the scan-order string (bits, base-2 convention).
struct LocalPotential {
  LatticeSpec spec{1, Kind::onesided};
  std::uint64_t w = 2;
  unsigned alphabet_size = 2;
  std::vector<double> table;

  static LocalPotential zero(unsigned alphabet_size);
  // Nearest-neighbour potential on the one-sided line: value(a, b) for the pair (a, b).
  static LocalPotential pair(unsigned alphabet_size, const std::vector<std::vector<double>>& values);

  double operator()(std::span<const std::uint8_t> shape_symbols) const;
  void validate() const;
};

// Mean of psi over every translate of Lambda_w lying inside the pattern's window.
double potential_average(const Pattern& p, const LocalPotential& psi);

struct TransferResult {
  double pressure = 0;  // log2 of the Perron root
  double perron_root = 0;
  std::vector<double> right_vector;
  AnalyticMeasure equilibrium;
};

TransferResult transfer_matrix_pressure(const LocalPotential& psi);

// Stationary mean of a pair potential under a Markov measure.
double markov_potential_mean(const AnalyticMeasure& mu, const LocalPotential& psi);

struct PressureRecord {
  std::string label;
  double rate = 0;
  double psi_mean = 0;
  double sum = 0;
};

struct PressureReport {
  std::vector<PressureRecord> records;
  std::optional<double> oracle_pressure;
  double sup_estimate = 0;
};

PressureReport estimate_pressure(const std::vector<std::pair<std::string, Pattern>>& samples,
                                 const LocalPotential& psi, std::uint64_t m,
                                 std::optional<double> oracle = std::nullopt,
                                 const EncodeOptions& options = {});

// Text table with one "a b value" line per ordered pair; '#' starts a comment.
LocalPotential parse_pair_potential(const std::string& text);

}  // namespace zdc
