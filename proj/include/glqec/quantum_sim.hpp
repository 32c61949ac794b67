#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "glqec/channel.hpp"
#include "glqec/decoders.hpp"
#include "glqec/lattice.hpp"

namespace glqec {

using DensityMatrix = Eigen::MatrixXcd;

/// Dense simulation is limited to n <= 3 (4096 basis states).
inline constexpr int kMaxDenseSites = 3;

struct HamiltonianParams {
  double x = 0.6;   // hopping
  double mu = 0.1;  // mass
  double dt = 1.0 / 3.0;
};

// Basis index i holds the state whose qubit q is bit (4n-1-q) of i.

/// x sum_s (psi_s^dag U_{s,s+1} psi_{s+1} + h.c.), with Jordan-Wigner strings
/// over site qubits (including the one closing the periodic boundary).
Eigen::MatrixXcd hopping_term(const LatticeSpec& spec, double x);
/// Diagonal: links at flux -1 for U(1), (2/pi^2) sum (2Z + I) for Z2.
Eigen::VectorXd electric_diagonal(const LatticeSpec& spec);
/// Diagonal: mu sum_s (-1)^s n_s with n_s = (I - Z)/2.
Eigen::VectorXd mass_diagonal(const LatticeSpec& spec, double mu);

Eigen::MatrixXcd build_hamiltonian(const LatticeSpec& spec, const HamiltonianParams& params);

/// exp(-i dt H) from the eigendecomposition of H. Throws if H is not Hermitian.
Eigen::MatrixXcd unitary_propagator(const Eigen::MatrixXcd& h, double dt);
DensityMatrix evolution_step(const DensityMatrix& rho, const Eigen::MatrixXcd& unitary);
DensityMatrix evolution_step(const DensityMatrix& rho, const Eigen::MatrixXcd& h, double dt);

/// rho -> (1-p) rho + p X_q rho X_q on one qubit, in place.
void apply_qubit_bitflip(DensityMatrix& rho, int qubits, int qubit, double p);
/// Every qubit in turn.
void apply_bitflip_channel(DensityMatrix& rho, int qubits, double p);

/// f(b) = b xor decode(syndrome_of_state(b)) for every basis index b.
std::vector<std::uint64_t> recovery_fold_map(const LatticeSpec& spec, DecoderKind decoder);
/// rho'[f(i), f(j)] += rho[i, j].
DensityMatrix apply_glqec_recovery(const DensityMatrix& rho, const std::vector<std::uint64_t>& fold);
DensityMatrix apply_glqec_recovery(const DensityMatrix& rho, const LatticeSpec& spec,
                                   DecoderKind decoder);

struct ObservableSet {
  double fidelity_vacuum = 0;
  double physicality = 0;
  double electric_energy = 0;
  double single_pair_probability = 0;
};

ObservableSet measure_observables(const DensityMatrix& rho, const LatticeSpec& spec);

/// Probability of the mod-2 physical (code) subspace.
double code_space_probability(const DensityMatrix& rho, const LatticeSpec& spec);

DensityMatrix basis_projector(std::uint64_t index, std::uint64_t dim);
/// Uniform state on the channel's steady subspace: all states, or the code
/// space for GLQEC.
DensityMatrix steady_state(const LatticeSpec& spec, Channel channel);

/// Half the sum of absolute eigenvalues of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

enum class Mode { Memory, Simulation };

Mode parse_mode(std::string_view name);

struct ExperimentSettings {
  Mode mode = Mode::Memory;
  Channel channel = Channel::NoQEC;
  LatticeSpec spec{2};
  HamiltonianParams params;
  double p = 0.08;
  int steps = 180;
  DecoderKind decoder = DecoderKind::Matching;
};

struct StepRecord {
  int step = 0;
  ObservableSet observables;
  double trace_distance = 0;
  double trace = 1;
};

/// Starts from the vacuum and records step 0 plus every round.
std::vector<StepRecord> run_experiment(const ExperimentSettings& settings);

}  // namespace glqec
