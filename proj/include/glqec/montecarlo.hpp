#pragma once

#include <cstdint>
#include <vector>

#include "glqec/bitstring.hpp"
#include "glqec/channel.hpp"
#include "glqec/decoders.hpp"

namespace glqec {

struct TrajectoryConfig {
  int n = 5;
  double p = 0.08;
  int steps = 100;
  DecoderKind decoder = DecoderKind::Matching;
  int samples = 100;
  std::uint64_t seed = 1;
  Channel channel = Channel::GLQEC;
};

/// splitmix64 finalizer, used to derive per-trajectory seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// States at rounds 0..steps of trajectory `index`, starting from the vacuum.
/// Deterministic in (seed, index). GLQEC states are checked to be in the code
/// space after every recovery.
std::vector<BasisState> sample_trajectory(const TrajectoryConfig& cfg, std::uint64_t index = 0);

/// Number of links at flux -1.
int electric_energy(const BasisState& state);

struct EnergyStat {
  int step = 0;
  double mean = 0;
  double stddev = 0;  // sample standard deviation across trajectories
};

EnergyStat summarize_samples(int step, const std::vector<double>& values);

/// Per-round mean and spread of the electric energy over cfg.samples
/// trajectories, run on `workers` threads.
std::vector<EnergyStat> estimate_electric_energy(const TrajectoryConfig& cfg, int workers = 1);

/// n (1 - (1-2p)^r): each link relaxes independently under raw bitflips.
double noqec_energy_model(int n, double p, int step);

}  // namespace glqec
