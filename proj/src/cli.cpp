#include "zdc/cli.hpp"

#include "zdc/entropy.hpp"
#include "zdc/error.hpp"
#include "zdc/measures.hpp"
#include "zdc/pressure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>

namespace zdc::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-', 1);
    try {
      if (dash != std::string::npos) {
        const auto lo = std::stoull(item.substr(0, dash));
        const auto hi = std::stoull(item.substr(dash + 1));
        if (hi < lo || hi - lo > 100000)
          throw Error(Errc::invalid_argument, "bad range '" + item + "'");
        for (auto v = lo; v <= hi; ++v)
          out.push_back(v);
      } else {
        std::size_t used = 0;
        out.push_back(std::stoull(item, &used));
        if (used != item.size())
          throw Error(Errc::invalid_argument, "not an integer: '" + item + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(Errc::invalid_argument, "not an integer list: '" + text + "'");
    }
  }
  if (out.empty())
    throw Error(Errc::invalid_argument, "empty integer list");
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    out.push_back(item);
  return out;
}

struct MeasureFlags {
  std::string kind;
  std::string probs;
  std::string rows;
  std::string file;

  void add_to(CLI::App& app, bool required) {
    auto* k = app.add_option("--measure", kind, "bernoulli or markov1d")->check(CLI::IsMember({"bernoulli", "markov1d"}));
    auto* f = app.add_option("--measure-file", file, "key-value measure description");
    app.add_option("--probs", probs, "comma-separated symbol probabilities");
    app.add_option("--rows", rows, "transition rows, e.g. 0.9,0.1;0.2,0.8");
    if (required) {
      k->excludes(f);
      f->excludes(k);
    }
  }

  bool given() const { return !kind.empty() || !file.empty(); }

  AnalyticMeasure resolve() const {
    if (!file.empty()) {
      auto bytes = read_file(file);
      return parse_measure(std::string(bytes.begin(), bytes.end()));
    }
    if (kind == "bernoulli")
      return AnalyticMeasure::bernoulli(parse_real_list(probs));
    if (kind == "markov1d") {
      Matrix P;
      for (const auto& row : split(rows, ';'))
        P.push_back(parse_real_list(row));
      return AnalyticMeasure::markov1d(std::move(P));
    }
    throw Error(Errc::invalid_argument, "give --measure or --measure-file");
  }
};

Pattern sample_from(const AnalyticMeasure& mu, const Window& window, std::uint64_t seed) {
  if (mu.is_bernoulli())
    return sample_bernoulli(mu.as_bernoulli().probs, window, seed);
  if (window.spec != LatticeSpec(1, Kind::onesided))
    throw Error(Errc::invalid_argument, "Markov samples need --d 1 --kind onesided");
  return sample_markov1d(mu.as_markov().transition, window.n, seed);
}

EncodeOptions mode_options(const std::string& mode) {
  EncodeOptions opts;
  if (mode == "dense")
    opts.mode = XMode::dense;
  else if (mode == "sparse")
    opts.mode = XMode::sparse;
  return opts;
}

const char* kTsvHeader = "method\td\tkind\tn\tm\tseed\tvalue\n";

void tsv_row(std::ostream& out, const EntropyEstimate& e, const Pattern& p, const std::string& m,
             const std::string& seed) {
  out << method_name(e.method) << '\t' << p.spec().d << '\t' << kind_name(p.spec().kind) << '\t' << p.n() << '\t'
      << m << '\t' << seed << '\t' << fmt(e.value) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-frequency enumerative coder and entropy estimators for Z^d patterns", "zdc"};
  app.require_subcommand(1);

  unsigned d = 1;
  std::string kind = "onesided";
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::string input, output, m_list, mode = "auto", seed_label, n_list, seeds = "0", potential;
  std::uint64_t m = 0;
  unsigned alphabet = 2, jobs = 1;
  bool report = false, oracle = false;
  MeasureFlags measure;

  auto add_geometry = [&](CLI::App* sub, bool need_n) {
    sub->add_option("--d", d, "lattice dimension")->check(CLI::Range(1u, 255u));
    sub->add_option("--kind", kind, "onesided or twosided")->check(CLI::IsMember({"onesided", "twosided"}));
    if (need_n)
      sub->add_option("--n", n, "window parameter")->required()->check(CLI::PositiveNumber);
  };

  auto* sample = app.add_subcommand("sample", "draw a pattern from a measure");
  add_geometry(sample, true);
  measure.add_to(*sample, true);
  sample->add_option("--seed", seed, "64-bit seed");
  sample->add_option("-o,--output", output, "pattern file")->required();

  auto* encode_cmd = app.add_subcommand("encode", "compress a pattern file");
  encode_cmd->add_option("--m", m, "block parameter")->required()->check(CLI::PositiveNumber);
  encode_cmd->add_option("--mode", mode, "x-field mode")->check(CLI::IsMember({"auto", "dense", "sparse"}));
  encode_cmd->add_option("-i,--input", input, "pattern file")->required();
  encode_cmd->add_option("-o,--output", output, "container file")->required();
  encode_cmd->add_flag("--report", report, "print the code-length report as TSV");

  auto* decode_cmd = app.add_subcommand("decode", "decompress a container file");
  decode_cmd->add_option("-i,--input", input, "container file")->required();
  decode_cmd->add_option("-o,--output", output, "pattern file")->required();

  auto* entropy = app.add_subcommand("entropy", "plug-in and code-rate estimates of one pattern");
  entropy->add_option("--m", m_list, "block parameters, comma-separated")->required();
  entropy->add_option("-i,--input", input, "pattern file")->required();
  entropy->add_option("--seed", seed_label, "label for the seed column");
  measure.add_to(*entropy, false);

  auto* kdensity = app.add_subcommand("kdensity", "complexity density over sampled patterns");
  add_geometry(kdensity, false);
  kdensity->add_option("--n", n_list, "window parameters, comma-separated")->required();
  kdensity->add_option("--m", m_list, "block parameters, comma-separated")->required();
  kdensity->add_option("--seeds", seeds, "seeds, e.g. 0-9 or 1,5,7");
  kdensity->add_option("--jobs", jobs, "parallel seeds")->check(CLI::Range(1u, 256u));
  measure.add_to(*kdensity, true);

  auto* pressure = app.add_subcommand("pressure", "variational-principle report for pair potentials");
  pressure->add_option("--potential", potential, "potential table file")->required();
  pressure->add_option("--m", m, "block parameter")->required()->check(CLI::PositiveNumber);
  pressure->add_option("-i,--input", input, "pattern files, comma-separated")->required();
  pressure->add_flag("--oracle", oracle, "add the transfer-matrix pressure");

  auto* scan = app.add_subcommand("scan", "print the scan order of a window");
  add_geometry(scan, true);

  auto* census = app.add_subcommand("census", "payload-length census over every pattern of a window");
  add_geometry(census, true);
  census->add_option("--alphabet", alphabet, "alphabet size")->check(CLI::Range(2u, 256u));
  census->add_option("--m", m, "block parameter")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "zdc: " << e.what() << "\n";
    return 2;
  }

  try {
    const LatticeSpec spec(d, parse_kind(kind));
    if (sample->parsed()) {
      const Pattern p = sample_from(measure.resolve(), Window(spec, n), seed);
      write_file(output, write_pattern(p));
    } else if (encode_cmd->parsed()) {
      const Pattern p = read_pattern(read_file(input));
      const EncodedPattern e = encode(p, m, mode_options(mode));
      write_file(output, write_container(e));
      if (report) {
        const auto& r = e.report;
        out << "bits_header\tbits_x\tbits_y\tbits_z\ttotal\tbound_rhs\n"
            << r.bits_header << '\t' << r.bits_x << '\t' << r.bits_y << '\t' << r.bits_z << '\t' << r.total << '\t'
            << fmt(r.bound_rhs) << '\n';
      }
    } else if (decode_cmd->parsed()) {
      write_file(output, write_pattern(decode_container(read_file(input))));
    } else if (entropy->parsed()) {
      const Pattern p = read_pattern(read_file(input));
      const std::string label = seed_label.empty() ? "NA" : seed_label;
      out << kTsvHeader;
      for (auto mm : parse_uint_list(m_list)) {
        tsv_row(out, plugin_block_entropy(p, mm), p, std::to_string(mm), label);
        tsv_row(out, complexity_density(p, mm), p, std::to_string(mm), label);
      }
      if (measure.given())
        tsv_row(out, information_density(p, measure.resolve()), p, "NA", label);
    } else if (kdensity->parsed()) {
      const AnalyticMeasure mu = measure.resolve();
      const auto ns = parse_uint_list(n_list);
      const auto ms = parse_uint_list(m_list);
      const auto seed_values = parse_uint_list(seeds);
      // One task per seed; rows are emitted in (n, m, seed) order regardless of jobs.
      auto run_seed = [&](std::uint64_t nn, std::uint64_t s) {
        const Pattern p = sample_from(mu, Window(spec, nn), s);
        std::ostringstream rows;
        for (auto mm : ms)
          tsv_row(rows, complexity_density(p, mm), p, std::to_string(mm), std::to_string(s));
        return rows.str();
      };
      out << kTsvHeader;
      for (auto nn : ns) {
        std::vector<std::string> chunks(seed_values.size());
        for (std::size_t first = 0; first < seed_values.size(); first += jobs) {
          std::vector<std::future<std::string>> running;
          const std::size_t last = std::min(seed_values.size(), first + jobs);
          for (std::size_t i = first; i < last; ++i)
            running.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_seed, nn,
                                         seed_values[i]));
          for (std::size_t i = first; i < last; ++i)
            chunks[i] = running[i - first].get();
        }
        for (const auto& c : chunks)
          out << c;
      }
    } else if (pressure->parsed()) {
      auto bytes = read_file(potential);
      const LocalPotential psi = parse_pair_potential(std::string(bytes.begin(), bytes.end()));
      std::vector<std::pair<std::string, Pattern>> samples;
      for (const auto& path : split(input, ','))
        samples.emplace_back(path, read_pattern(read_file(path)));
      std::optional<double> oracle_value;
      if (oracle)
        oracle_value = transfer_matrix_pressure(psi).pressure;
      const PressureReport rep = estimate_pressure(samples, psi, m, oracle_value);
      out << "label\trate\tpsi_mean\tsum\n";
      for (const auto& r : rep.records)
        out << r.label << '\t' << fmt(r.rate) << '\t' << fmt(r.psi_mean) << '\t' << fmt(r.sum) << '\n';
      out << "sup_estimate\tNA\tNA\t" << fmt(rep.sup_estimate) << '\n';
      if (rep.oracle_pressure)
        out << "oracle_pressure\tNA\tNA\t" << fmt(*rep.oracle_pressure) << '\n';
    } else if (scan->parsed()) {
      const Window w(spec, n);
      for (std::uint64_t j = 0; j < w.size(); ++j)
        out << format_site(scan_site(spec, j)) << '\t' << j << '\n';
    } else if (census->parsed()) {
      const auto counts = counting_census(spec, n, alphabet, m);
      out << "payload_bits\tcount\tcumulative\tbound\n";
      std::uint64_t cumulative = 0;
      for (const auto& [bits, c] : counts) {
        cumulative += c;
        // patterns with payload < bits + 1 versus 2^(bits+1) - 1
        out << bits << '\t' << c << '\t' << cumulative << '\t' << fmt(std::exp2(double(bits) + 1) - 1) << '\n';
      }
    }
  } catch (const Error& e) {
    err << "zdc: " << e.what() << "\n";
    return e.code() == Errc::invalid_argument ? 2 : 1;
  } catch (const std::exception& e) {
    err << "zdc: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace zdc::cli
