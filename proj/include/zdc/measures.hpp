#pragma once

#include "zdc/pattern.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace zdc {

using Matrix = std::vector<std::vector<double>>;

struct BernoulliMeasure {
  std::vector<double> probs;
};

// Stationary first-order chain on a one-sided line.
struct MarkovMeasure {
  Matrix transition;
  std::vector<double> initial;  // stationary distribution of `transition`
};

class AnalyticMeasure {
public:
  static AnalyticMeasure bernoulli(std::vector<double> probs);
  static AnalyticMeasure markov1d(Matrix transition);

  bool is_bernoulli() const noexcept { return std::holds_alternative<BernoulliMeasure>(variant_); }
  const BernoulliMeasure& as_bernoulli() const { return std::get<BernoulliMeasure>(variant_); }
  const MarkovMeasure& as_markov() const { return std::get<MarkovMeasure>(variant_); }

  unsigned alphabet_size() const;
  // Entropy per site in bits.
  double entropy() const;
  // log2 of the measure of the cylinder of p; -infinity when it is null.
  long double log2_cylinder(const Pattern& p) const;

private:
  explicit AnalyticMeasure(std::variant<BernoulliMeasure, MarkovMeasure> v) : variant_(std::move(v)) {}
  std::variant<BernoulliMeasure, MarkovMeasure> variant_;
};

// std::mt19937_64 seeded with `seed`; uniforms are the top 53 bits of each
// draw scaled by 2^-53, and categorical draws invert the cumulative sum.
// Both steps are fixed here, so samples are reproducible across platforms.
class SeededSampler {
public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  std::uint8_t categorical(std::span<const double> probs);

private:
  std::mt19937_64 engine_;
};

void validate_probabilities(std::span<const double> probs);
void validate_stochastic(const Matrix& transition);

Pattern sample_bernoulli(std::span<const double> probs, const Window& window, std::uint64_t seed);
double bernoulli_entropy(std::span<const double> probs);

std::vector<double> stationary_distribution(const Matrix& transition);
double markov_entropy_rate(const Matrix& transition);
Pattern sample_markov1d(const Matrix& transition, std::uint64_t n, std::uint64_t seed);

// Key-value measure description, one "key = value" per line, '#' comments:
//   kind = bernoulli          kind = markov1d
//   probs = 0.9,0.1           row = 0.9,0.1
//                             row = 0.2,0.8
AnalyticMeasure parse_measure(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

}  // namespace zdc
