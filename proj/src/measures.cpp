#include "zdc/measures.hpp"

#include "zdc/entropy.hpp"
#include "zdc/error.hpp"
#include "zdc/tolerances.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <sstream>

namespace zdc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Every state reaches every other along positive entries.
bool irreducible(const Matrix& P) {
  const std::size_t n = P.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b)
        if (P[a][b] > 0 && !seen[b]) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    for (bool s : seen)
      if (!s)
        return false;
  }
  return true;
}

}  // namespace

void validate_probabilities(std::span<const double> probs) {
  if (probs.size() < 2 || probs.size() > 256)
    throw Error(Errc::bad_probabilities, "need between 2 and 256 probabilities");
  long double sum = 0;
  for (double q : probs) {
    if (!(q >= 0.0) || !std::isfinite(q))
      throw Error(Errc::bad_probabilities, "negative or non-finite probability");
    sum += q;
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > kTolerances.probability_sum)
    throw Error(Errc::bad_probabilities, "probabilities do not sum to 1");
}

void validate_stochastic(const Matrix& transition) {
  if (transition.size() < 2)
    throw Error(Errc::bad_probabilities, "transition matrix needs at least two states");
  for (const auto& row : transition) {
    if (row.size() != transition.size())
      throw Error(Errc::bad_probabilities, "transition matrix is not square");
    validate_probabilities(row);
  }
}

double SeededSampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint8_t SeededSampler::categorical(std::span<const double> probs) {
  const double u = uniform();
  double acc = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0)
      continue;
    last = i;
    acc += probs[i];
    if (u < acc)
      return static_cast<std::uint8_t>(i);
  }
  return static_cast<std::uint8_t>(last);
}

AnalyticMeasure AnalyticMeasure::bernoulli(std::vector<double> probs) {
  validate_probabilities(probs);
  return AnalyticMeasure(BernoulliMeasure{std::move(probs)});
}

AnalyticMeasure AnalyticMeasure::markov1d(Matrix transition) {
  auto pi = stationary_distribution(transition);
  return AnalyticMeasure(MarkovMeasure{std::move(transition), std::move(pi)});
}

unsigned AnalyticMeasure::alphabet_size() const {
  return is_bernoulli() ? static_cast<unsigned>(as_bernoulli().probs.size())
                        : static_cast<unsigned>(as_markov().transition.size());
}

double AnalyticMeasure::entropy() const {
  return is_bernoulli() ? bernoulli_entropy(as_bernoulli().probs) : markov_entropy_rate(as_markov().transition);
}

long double AnalyticMeasure::log2_cylinder(const Pattern& p) const {
  if (p.alphabet_size() > alphabet_size())
    throw Error(Errc::invalid_argument, "pattern alphabet larger than the measure's");
  constexpr long double kNull = -std::numeric_limits<long double>::infinity();
  long double acc = 0;
  if (is_bernoulli()) {
    const auto& q = as_bernoulli().probs;
    for (auto s : p.symbols()) {
      if (q[s] <= 0)
        return kNull;
      acc += std::log2(static_cast<long double>(q[s]));
    }
    return acc;
  }
  if (p.spec() != LatticeSpec(1, Kind::onesided))
    throw Error(Errc::invalid_argument, "Markov measures live on the one-sided line");
  const auto& mk = as_markov();
  auto syms = p.symbols();
  if (mk.initial[syms[0]] <= 0)
    return kNull;
  acc = std::log2(static_cast<long double>(mk.initial[syms[0]]));
  for (std::size_t i = 1; i < syms.size(); ++i) {
    const double t = mk.transition[syms[i - 1]][syms[i]];
    if (t <= 0)
      return kNull;
    acc += std::log2(static_cast<long double>(t));
  }
  return acc;
}

Pattern sample_bernoulli(std::span<const double> probs, const Window& window, std::uint64_t seed) {
  validate_probabilities(probs);
  SeededSampler rng(seed);
  std::vector<std::uint8_t> symbols(window.size());
  for (auto& s : symbols)
    s = rng.categorical(probs);
  return Pattern(window, static_cast<unsigned>(probs.size()), std::move(symbols));
}

double bernoulli_entropy(std::span<const double> probs) {
  validate_probabilities(probs);
  return partition_entropy(probs);
}

std::vector<double> stationary_distribution(const Matrix& transition) {
  validate_stochastic(transition);
  if (!irreducible(transition))
    throw Error(Errc::reducible_chain, "transition matrix is reducible");
  const auto n = static_cast<Eigen::Index>(transition.size());
  // Solve pi (P - I) = 0 with the normalisation sum(pi) = 1 replacing one equation.
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      A(j, i) = transition[i][j] - (i == j ? 1.0 : 0.0);
  A.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;
  Eigen::VectorXd pi = A.fullPivLu().solve(rhs);

  std::vector<double> out(pi.data(), pi.data() + n);
  double residual = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double v = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      v += out[i] * transition[i][j];
    residual = std::max(residual, std::fabs(v - out[j]));
  }
  for (double& v : out) {
    if (v < -kTolerances.stationary_residual || !std::isfinite(v))
      throw Error(Errc::no_convergence, "stationary solve produced a negative weight");
    v = std::max(v, 0.0);
  }
  if (residual > kTolerances.stationary_residual)
    throw Error(Errc::no_convergence, "stationary solve did not reach the residual tolerance");
  return out;
}

double markov_entropy_rate(const Matrix& transition) {
  const auto pi = stationary_distribution(transition);
  double h = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    h += pi[i] * partition_entropy(transition[i]);
  return h;
}

Pattern sample_markov1d(const Matrix& transition, std::uint64_t n, std::uint64_t seed) {
  const auto pi = stationary_distribution(transition);
  const Window window(LatticeSpec(1, Kind::onesided), n);
  SeededSampler rng(seed);
  std::vector<std::uint8_t> symbols(window.size());
  symbols[0] = rng.categorical(pi);
  for (std::size_t i = 1; i < symbols.size(); ++i)
    symbols[i] = rng.categorical(transition[symbols[i - 1]]);
  return Pattern(window, static_cast<unsigned>(pi.size()), std::move(symbols));
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw Error(Errc::invalid_argument, "empty entry in list '" + text + "'");
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size())
      throw Error(Errc::invalid_argument, "not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

AnalyticMeasure parse_measure(const std::string& text) {
  std::string kind;
  std::vector<double> probs;
  Matrix rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::invalid_argument, "expected key = value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "kind")
      kind = value;
    else if (key == "probs")
      probs = parse_real_list(value);
    else if (key == "row")
      rows.push_back(parse_real_list(value));
    else
      throw Error(Errc::invalid_argument, "unknown measure key '" + key + "'");
  }
  if (kind == "bernoulli")
    return AnalyticMeasure::bernoulli(probs);
  if (kind == "markov1d")
    return AnalyticMeasure::markov1d(rows);
  throw Error(Errc::invalid_argument, "measure kind must be bernoulli or markov1d");
}

}  // namespace zdc
