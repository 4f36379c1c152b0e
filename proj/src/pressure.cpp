#include "zdc/pressure.hpp"

#include "zdc/entropy.hpp"
#include "zdc/error.hpp"
#include "zdc/tolerances.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace zdc {

LocalPotential LocalPotential::zero(unsigned alphabet_size) {
  LocalPotential psi;
  psi.alphabet_size = alphabet_size;
  psi.table.assign(static_cast<std::size_t>(alphabet_size) * alphabet_size, 0.0);
  return psi;
}

LocalPotential LocalPotential::pair(unsigned alphabet_size, const std::vector<std::vector<double>>& values) {
  LocalPotential psi = zero(alphabet_size);
  if (values.size() != alphabet_size)
    throw Error(Errc::invalid_argument, "pair table needs one row per symbol");
  for (unsigned a = 0; a < alphabet_size; ++a) {
    if (values[a].size() != alphabet_size)
      throw Error(Errc::invalid_argument, "pair table needs one column per symbol");
    for (unsigned b = 0; b < alphabet_size; ++b)
      psi.table[a * alphabet_size + b] = values[a][b];
  }
  psi.validate();
  return psi;
}

void LocalPotential::validate() const {
  if (alphabet_size < 2 || alphabet_size > 256)
    throw Error(Errc::invalid_argument, "potential alphabet must be in [2, 256]");
  const BigNat expected = big_pow(alphabet_size, window_size(spec, w));
  if (!big_fits_u64(expected) || big_from_u64(table.size()) != expected)
    throw Error(Errc::invalid_argument, "potential table must have |Sigma|^|Lambda_w| entries");
  for (double v : table)
    if (!std::isfinite(v))
      throw Error(Errc::invalid_argument, "potential entries must be finite");
}

double LocalPotential::operator()(std::span<const std::uint8_t> shape_symbols) const {
  std::uint64_t index = 0;
  for (auto s : shape_symbols)
    index = index * alphabet_size + s;
  return table.at(index);
}

double potential_average(const Pattern& p, const LocalPotential& psi) {
  psi.validate();
  if (psi.spec != p.spec())
    throw Error(Errc::invalid_argument, "potential and pattern live on different lattices");
  if (psi.alphabet_size < p.alphabet_size())
    throw Error(Errc::invalid_argument, "pattern alphabet larger than the potential's");
  if (psi.w > p.n())
    throw Error(Errc::invalid_argument, "potential shape does not fit in the window");

  // Translates t with t + Lambda_w inside Lambda_n: t_i in [0, n - w] or |t_i| <= n - w.
  const bool two = p.spec().kind == Kind::twosided;
  const auto reach = static_cast<std::int64_t>(p.n() - psi.w);
  const std::int64_t lo = two ? -reach : 0;
  const std::vector<Site> offsets = Window(p.spec(), psi.w).sites();
  const unsigned d = p.spec().d;

  Site t(d, lo), at(d);
  std::vector<std::uint8_t> shape(offsets.size());
  long double sum = 0;
  std::uint64_t count = 0;
  for (;;) {
    for (std::size_t o = 0; o < offsets.size(); ++o) {
      for (unsigned i = 0; i < d; ++i)
        at[i] = t[i] + offsets[o][i];
      shape[o] = p.symbols()[scan_index(p.spec(), at)];
    }
    sum += psi(shape);
    ++count;
    unsigned i = d;
    while (i > 0 && t[i - 1] == reach) {
      t[i - 1] = lo;
      --i;
    }
    if (i == 0)
      break;
    ++t[i - 1];
  }
  return static_cast<double>(sum / static_cast<long double>(count));
}

TransferResult transfer_matrix_pressure(const LocalPotential& psi) {
  psi.validate();
  if (psi.spec != LatticeSpec(1, Kind::onesided) || psi.w != 2)
    throw Error(Errc::invalid_argument, "transfer matrix needs a nearest-neighbour potential on the line");
  const auto q = static_cast<Eigen::Index>(psi.alphabet_size);
  Eigen::MatrixXd A(q, q);
  for (Eigen::Index a = 0; a < q; ++a)
    for (Eigen::Index b = 0; b < q; ++b)
      A(a, b) = std::exp2(psi.table[static_cast<std::size_t>(a * q + b)]);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(A);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::no_convergence, "eigen-solve of the transfer matrix failed");
  Eigen::Index top = 0;
  for (Eigen::Index i = 1; i < q; ++i)
    if (solver.eigenvalues()(i).real() > solver.eigenvalues()(top).real())
      top = i;
  const double lambda = solver.eigenvalues()(top).real();
  Eigen::VectorXd v = solver.eigenvectors().col(top).real();
  if (v.sum() < 0)
    v = -v;
  if (!(lambda > 0) || std::fabs(solver.eigenvalues()(top).imag()) > kTolerances.perron_residual * lambda ||
      v.minCoeff() <= 0)
    throw Error(Errc::no_convergence, "transfer matrix has no positive Perron vector");
  v /= v.sum();
  if ((A * v - lambda * v).cwiseAbs().maxCoeff() > kTolerances.perron_residual * lambda)
    throw Error(Errc::no_convergence, "Perron vector residual above tolerance");

  Matrix P(static_cast<std::size_t>(q), std::vector<double>(static_cast<std::size_t>(q)));
  for (Eigen::Index a = 0; a < q; ++a) {
    double row = 0;
    for (Eigen::Index b = 0; b < q; ++b)
      row += P[a][b] = A(a, b) * v(b) / (lambda * v(a));
    for (Eigen::Index b = 0; b < q; ++b)
      P[a][b] /= row;  // removes rounding drift only
  }
  TransferResult r{std::log2(lambda), lambda, std::vector<double>(v.data(), v.data() + q),
                   AnalyticMeasure::markov1d(std::move(P))};
  return r;
}

double markov_potential_mean(const AnalyticMeasure& mu, const LocalPotential& psi) {
  const auto& mk = mu.as_markov();
  if (psi.w != 2 || psi.spec != LatticeSpec(1, Kind::onesided) || psi.alphabet_size != mk.transition.size())
    throw Error(Errc::invalid_argument, "needs a pair potential over the chain's alphabet");
  double mean = 0;
  const std::size_t q = mk.transition.size();
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      mean += mk.initial[a] * mk.transition[a][b] * psi.table[a * q + b];
  return mean;
}

PressureReport estimate_pressure(const std::vector<std::pair<std::string, Pattern>>& samples,
                                 const LocalPotential& psi, std::uint64_t m, std::optional<double> oracle,
                                 const EncodeOptions& options) {
  if (samples.empty())
    throw Error(Errc::invalid_argument, "no samples to evaluate");
  PressureReport report;
  report.oracle_pressure = oracle;
  report.sup_estimate = -std::numeric_limits<double>::infinity();
  for (const auto& [label, p] : samples) {
    PressureRecord rec;
    rec.label = label;
    rec.rate = complexity_density(p, m, options).value;
    rec.psi_mean = potential_average(p, psi);
    rec.sum = rec.rate + rec.psi_mean;
    report.sup_estimate = std::max(report.sup_estimate, rec.sum);
    report.records.push_back(std::move(rec));
  }
  return report;
}

LocalPotential parse_pair_potential(const std::string& text) {
  std::map<std::pair<unsigned, unsigned>, double> entries;
  unsigned top = 0;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = line.substr(0, line.find('#'));
    std::stringstream ls(line);
    long a = 0, b = 0;
    double value = 0;
    if (!(ls >> a))
      continue;
    std::string extra;
    if (!(ls >> b >> value) || (ls >> extra))
      throw Error(Errc::invalid_argument, "potential lines must read 'a b value'");
    if (a < 0 || b < 0 || a > 255 || b > 255)
      throw Error(Errc::invalid_argument, "potential symbols must be in [0, 255]");
    if (!entries.emplace(std::pair{unsigned(a), unsigned(b)}, value).second)
      throw Error(Errc::invalid_argument, "duplicate potential entry");
    top = std::max({top, unsigned(a), unsigned(b)});
  }
  const unsigned q = std::max(top + 1, 2u);
  if (entries.size() != static_cast<std::size_t>(q) * q)
    throw Error(Errc::invalid_argument, "potential table must list every ordered pair");
  std::vector<std::vector<double>> values(q, std::vector<double>(q));
  for (const auto& [ab, v] : entries)
    values[ab.first][ab.second] = v;
  return LocalPotential::pair(q, values);
}

}  // namespace zdc
