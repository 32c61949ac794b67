#include "glqec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "glqec/channel.hpp"
#include "glqec/combinatorics.hpp"
#include "glqec/decoders.hpp"
#include "glqec/dimension.hpp"
#include "glqec/errors.hpp"
#include "glqec/montecarlo.hpp"
#include "glqec/quantum_sim.hpp"
#include "glqec/spectral.hpp"

namespace glqec {

namespace {

double parse_number(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string header_line() {
  return "# glqec " + std::string(kVersion) + " generated " + timestamp();
}

void check_probability_grid(const std::vector<double>& grid) {
  for (double p : grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("grid value out of [0,1]: " + std::to_string(p));
    }
  }
}

// Output destination: a file when --out is set, else the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
    *stream_ << std::setprecision(12);
  }
  std::ostream& operator*() { return *stream_; }

  /// Resolved configuration next to the output file.
  void write_config(const CLI::App& app, int workers) const {
    if (path_.empty()) return;
    std::ofstream cfg(path_ + ".config.toml");
    cfg << header_line() << "\nworkers=" << workers << "\n";
    for (const auto* sub : app.get_subcommands()) {
      cfg << "\n[" << sub->get_name() << "]\n" << sub->config_to_str(true, false);
    }
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  if (text == "paper-grid") return reference_grid();
  std::vector<double> grid;
  if (text.starts_with("lin:") || text.starts_with("log:")) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw std::invalid_argument("grid must look like lin:a:b:k or log:a:b:k");
    const double a = parse_number(parts[1]);
    const double b = parse_number(parts[2]);
    const double k_value = parse_number(parts[3]);
    const int k = static_cast<int>(k_value);
    if (k < 1 || k != k_value) throw std::invalid_argument("grid point count must be a positive integer");
    const bool log_scale = parts[0] == "log";
    if (log_scale && !(a > 0 && b > 0)) throw std::invalid_argument("log grid needs positive bounds");
    for (int i = 0; i < k; ++i) {
      const double t = k == 1 ? 0.0 : static_cast<double>(i) / (k - 1);
      grid.push_back(log_scale ? std::exp(std::log(a) + t * (std::log(b) - std::log(a)))
                               : a + t * (b - a));
    }
    if (k > 1) grid.back() = b;
  } else {
    for (auto part : split(text, ',')) grid.push_back(parse_number(part));
  }
  check_probability_grid(grid);
  return grid;
}

int default_workers() {
  if (const char* env = std::getenv("GLQEC_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

namespace {

ErrorClassTable load_or_build_table(int n, DecoderKind decoder, int workers, const std::string& cache) {
  if (!cache.empty() && std::filesystem::exists(cache)) {
    std::ifstream in(cache);
    ErrorClassTable table = load_error_class_table(in);
    if (table.n() != n || table.decoder() != decoder) {
      throw std::invalid_argument("cached table " + cache + " was built for a different n or decoder");
    }
    return table;
  }
  ErrorClassTable table = build_error_class_table(n, decoder, workers);
  if (!cache.empty()) {
    std::ofstream out(cache);
    save_error_class_table(table, out);
  }
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss's-law error correction toolkit for 1+1D lattice gauge theories", "glqec"};
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "TOML/INI file with option values");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  int workers = default_workers();
  app.add_option("--workers", workers, "Worker threads (default: GLQEC_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  std::string out_path;

  // dims
  auto* dims = app.add_subcommand("dims", "Physical-subspace dimensions from transfer matrices");
  int dims_d = 2;
  int dims_n_max = 6;
  dims->add_option("--d", dims_d, "Gauge-field dimension")->check(CLI::Range(2, 64));
  dims->add_option("--n-max", dims_n_max, "Largest number of physical sites")->check(CLI::Range(1, 500));
  dims->add_option("--out", out_path, "Output CSV (default stdout)");

  // single-round
  auto* single = app.add_subcommand("single-round", "Single-round logical error rates");
  int single_n = 2;
  std::string single_grid = "log:1e-4:0.5:50";
  single->add_option("--n", single_n, "Physical sites")->check(CLI::PositiveNumber);
  single->add_option("--p-grid", single_grid, "lin:a:b:k, log:a:b:k, paper-grid or a list");
  single->add_option("--out", out_path, "Output CSV (default stdout)");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Dense density-matrix memory or simulation run");
  int evolve_n = 2;
  std::string evolve_theory = "u1-periodic";
  std::string evolve_channel = "glqec";
  std::string evolve_mode = "simulation";
  std::string evolve_decoder = "matching";
  HamiltonianParams params;
  double evolve_p = 0.08;
  int evolve_steps = 180;
  evolve->add_option("--n", evolve_n, "Physical sites (<= 3)")->check(CLI::PositiveNumber);
  evolve->add_option("--theory", evolve_theory, "u1-periodic, u1-nonperiodic or z2");
  evolve->add_option("--channel", evolve_channel, "noqec, uqec or glqec");
  evolve->add_option("--mode", evolve_mode, "memory or simulation");
  evolve->add_option("--p", evolve_p, "Bitflip probability")->check(CLI::Range(0.0, 1.0));
  evolve->add_option("--steps", evolve_steps, "Rounds")->check(CLI::NonNegativeNumber);
  evolve->add_option("--dt", params.dt, "Time step");
  evolve->add_option("--x", params.x, "Hopping coupling");
  evolve->add_option("--mu", params.mu, "Mass");
  evolve->add_option("--decoder", evolve_decoder, "extended-rrw or matching");
  evolve->add_option("--out", out_path, "Output CSV (default stdout)");

  // montecarlo
  auto* mc = app.add_subcommand("montecarlo", "Bitstring trajectory sampling of the electric energy");
  TrajectoryConfig mc_cfg;
  std::string mc_channel = "all";
  std::string mc_decoder = "matching";
  mc->add_option("--n", mc_cfg.n, "Physical sites")->check(CLI::PositiveNumber);
  mc->add_option("--p", mc_cfg.p, "Bitflip probability")->check(CLI::Range(0.0, 1.0));
  mc->add_option("--steps", mc_cfg.steps, "Rounds")->check(CLI::NonNegativeNumber);
  mc->add_option("--samples", mc_cfg.samples, "Trajectories per step")->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_cfg.seed, "Random seed");
  mc->add_option("--channel", mc_channel, "noqec, uqec, glqec or all");
  mc->add_option("--decoder", mc_decoder, "extended-rrw or matching");
  mc->add_option("--out", out_path, "Output CSV (default stdout)");

  // lambda2
  auto* l2 = app.add_subcommand("lambda2", "Second eigenvalue of the decoded memory channel");
  int l2_n = 2;
  std::string l2_decoder = "matching";
  std::string l2_grid = "0.08";
  std::string l2_cache;
  l2->add_option("--n", l2_n, "Physical sites (2..6)");
  l2->add_option("--decoder", l2_decoder, "extended-rrw or matching");
  l2->add_option("--p-grid,--p", l2_grid, "lin:a:b:k, log:a:b:k, paper-grid or a list");
  l2->add_option("--table-cache", l2_cache, "CSV file to load or store the error-class table");
  l2->add_option("--out", out_path, "Output CSV (default stdout)");

  // threshold
  auto* th = app.add_subcommand("threshold", "Mixing threshold of the decoded memory channel");
  int th_n = 6;
  std::string th_decoder = "matching";
  std::string th_grid = "paper-grid";
  std::string th_cache;
  th->add_option("--n", th_n, "Physical sites (2..6)");
  th->add_option("--decoder", th_decoder, "extended-rrw or matching");
  th->add_option("--p-grid", th_grid, "Grid to scan");
  th->add_option("--table-cache", th_cache, "CSV file to load or store the error-class table");
  th->add_option("--out", out_path, "Output JSON (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Sink sink(out_path, out);
    if (dims->parsed()) {
      *sink << header_line() << "\n";
      *sink << "n,d,dimension,lucas_2n,periodic_dimension,gap_ratio\n";
      for (int n = 1; n <= dims_n_max; ++n) {
        *sink << n << "," << dims_d << "," << physical_dimension(n, dims_d, DimensionLaw::NonPeriodicInteger)
              << ",";
        if (dims_d == 2) *sink << lucas(2 * n);
        *sink << "," << physical_dimension(n, dims_d, DimensionLaw::Modular) << ",";
        if (dims_d == 2) *sink << dimension_gap_ratio(n);
        *sink << "\n";
      }
    } else if (single->parsed()) {
      const auto grid = parse_grid(single_grid);
      *sink << header_line() << "\n" << "n,p,p_uqec,p_glqec,ratio\n";
      for (const auto& pt : single_round_curve(single_n, grid).points) {
        *sink << single_n << "," << pt.p << "," << pt.p_uqec << "," << pt.p_glqec << "," << pt.ratio << "\n";
      }
    } else if (evolve->parsed()) {
      ExperimentSettings s;
      s.mode = parse_mode(evolve_mode);
      s.channel = parse_channel(evolve_channel);
      s.spec = LatticeSpec(evolve_n, parse_theory(evolve_theory));
      s.params = params;
      s.p = evolve_p;
      s.steps = evolve_steps;
      s.decoder = parse_decoder(evolve_decoder);
      const auto records = run_experiment(s);
      *sink << header_line() << "\n"
            << "step,fidelity,physicality,electric_energy,pair_prob,trace_distance\n";
      for (const auto& r : records) {
        *sink << r.step << "," << r.observables.fidelity_vacuum << "," << r.observables.physicality << ","
              << r.observables.electric_energy << "," << r.observables.single_pair_probability << ","
              << r.trace_distance << "\n";
      }
    } else if (mc->parsed()) {
      mc_cfg.decoder = parse_decoder(mc_decoder);
      std::vector<Channel> channels;
      if (mc_channel == "all") {
        channels = {Channel::NoQEC, Channel::UQEC, Channel::GLQEC};
      } else {
        channels = {parse_channel(mc_channel)};
      }
      *sink << header_line() << "\n" << "step,channel,mean_HE,std_HE\n";
      for (Channel c : channels) {
        mc_cfg.channel = c;
        for (const auto& stat : estimate_electric_energy(mc_cfg, workers)) {
          *sink << stat.step << "," << channel_name(c) << "," << stat.mean << "," << stat.stddev << "\n";
        }
      }
    } else if (l2->parsed()) {
      const auto grid = parse_grid(l2_grid);
      const DecoderKind decoder = parse_decoder(l2_decoder);
      const ErrorClassTable table = load_or_build_table(l2_n, decoder, workers, l2_cache);
      *sink << header_line() << "\n" << "n,p,decoder,lambda2\n";
      for (double p : grid) {
        *sink << l2_n << "," << p << "," << decoder_name(decoder) << "," << glqec_lambda2(table, p) << "\n";
      }
    } else if (th->parsed()) {
      const auto grid = parse_grid(th_grid);
      const DecoderKind decoder = parse_decoder(th_decoder);
      const ErrorClassTable table = load_or_build_table(th_n, decoder, workers, th_cache);
      const ThresholdResult result = mixing_threshold(table, grid);
      nlohmann::ordered_json j;
      j["tool"] = "glqec " + std::string(kVersion);
      j["generated"] = timestamp();
      j["n"] = th_n;
      j["decoder"] = decoder_name(decoder);
      if (result.p_th) {
        j["p_th"] = *result.p_th;
        j["uncertainty"] = result.uncertainty;
      } else {
        j["p_th"] = nullptr;
        j["uncertainty"] = nullptr;
      }
      *sink << j.dump(2) << "\n";
    }
    sink.write_config(app, workers);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace glqec
