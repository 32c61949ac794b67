#include "glqec/montecarlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "glqec/combinatorics.hpp"
#include "glqec/lattice.hpp"

namespace glqec {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

void validate(const TrajectoryConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("need n >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("need samples >= 1");
  if (cfg.steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("p out of [0,1]");
  if (cfg.channel == Channel::GLQEC && cfg.n < 2) throw std::invalid_argument("GLQEC needs n >= 2");
}

}  // namespace

std::vector<BasisState> sample_trajectory(const TrajectoryConfig& cfg, std::uint64_t index) {
  validate(cfg);
  const LatticeSpec spec(cfg.n);
  const ParityCheck pc = build_parity_check(spec);
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(index)));
  const double rate = cfg.channel == Channel::UQEC ? p3(cfg.p) : cfg.p;
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  BasisState state = vacuum_state(spec);
  Recovery recovery(static_cast<std::size_t>(spec.qubits()));
  std::vector<BasisState> out;
  out.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  out.push_back(state);
  for (int step = 1; step <= cfg.steps; ++step) {
    for (std::size_t q = 0; q < state.size(); ++q) {
      if (uniform() < rate) state.flip(q);
    }
    if (cfg.channel == Channel::GLQEC) {
      const Syndrome syn = syndrome_of_state(pc, state);
      if (cfg.decoder == DecoderKind::ExtendedRrw) {
        decode_extended_rrw(syn.span(), recovery.span());
      } else {
        decode_matching(syn.span(), recovery.span());
      }
      state ^= recovery;
      if (!syndrome_of_state(pc, state).is_zero()) {
        throw std::logic_error("trajectory left the code space at step " + std::to_string(step));
      }
    }
    out.push_back(state);
  }
  return out;
}

int electric_energy(const BasisState& state) {
  int count = 0;
  for (std::size_t q = 1; q < state.size(); q += 2) count += state[q] ? 0 : 1;
  return count;
}

EnergyStat summarize_samples(int step, const std::vector<double>& values) {
  EnergyStat stat{step, 0, 0};
  if (values.empty()) return stat;
  double sum = 0;
  for (double v : values) sum += v;
  stat.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0;
    for (double v : values) sq += (v - stat.mean) * (v - stat.mean);
    stat.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return stat;
}

std::vector<EnergyStat> estimate_electric_energy(const TrajectoryConfig& cfg, int workers) {
  validate(cfg);
  workers = std::max(1, std::min(workers, cfg.samples));
  const auto samples = static_cast<std::size_t>(cfg.samples);
  const auto rounds = static_cast<std::size_t>(cfg.steps) + 1;
  // energies[trajectory][step], filled by index so the result is independent
  // of the worker count
  std::vector<std::vector<double>> energies(samples);
  auto work = [&](int w) {
    for (std::size_t t = static_cast<std::size_t>(w); t < samples; t += static_cast<std::size_t>(workers)) {
      const auto states = sample_trajectory(cfg, t);
      energies[t].reserve(rounds);
      for (const auto& s : states) energies[t].push_back(electric_energy(s));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::vector<EnergyStat> out;
  out.reserve(rounds);
  std::vector<double> column(samples);
  for (std::size_t r = 0; r < rounds; ++r) {
    for (std::size_t t = 0; t < samples; ++t) column[t] = energies[t][r];
    out.push_back(summarize_samples(static_cast<int>(r), column));
  }
  return out;
}

double noqec_energy_model(int n, double p, int step) {
  return n * (1.0 - std::pow(1.0 - 2.0 * p, step));
}

}  // namespace glqec
