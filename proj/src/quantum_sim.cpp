#include "glqec/quantum_sim.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "glqec/combinatorics.hpp"
#include "glqec/errors.hpp"

namespace glqec {

namespace {

std::uint64_t dense_dim(const LatticeSpec& spec) {
  if (spec.n() > kMaxDenseSites) {
    throw SizeLimitError("dense density matrices are limited to n <= " +
                         std::to_string(kMaxDenseSites) + ", got n=" + std::to_string(spec.n()));
  }
  return std::uint64_t{1} << spec.qubits();
}

struct BasisBits {
  int qubits;
  std::uint64_t mask(int q) const { return std::uint64_t{1} << (qubits - 1 - q); }
  bool get(std::uint64_t i, int q) const { return (i & mask(q)) != 0; }
};

// Occupied site modes on fermionic sites r < s.
int parity_below(const BasisBits& bits, std::uint64_t i, int s) {
  int parity = 0;
  for (int r = 0; r < s; ++r) parity ^= bits.get(i, 2 * r) ? 1 : 0;
  return parity;
}

BasisState basis_state(std::uint64_t i, int qubits) {
  return BasisState::from_index(i, static_cast<std::size_t>(qubits));
}

}  // namespace

Eigen::MatrixXcd hopping_term(const LatticeSpec& spec, double x) {
  const std::uint64_t dim = dense_dim(spec);
  const BasisBits bits{spec.qubits()};
  const int sites = spec.sites();
  const bool truncated = spec.theory() == Theory::U1NonPeriodic;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::uint64_t j = 0; j < dim; ++j) {
    for (int s = 0; s < sites; ++s) {
      const int t = (s + 1) % sites;
      // psi_t
      if (!bits.get(j, spec.site_qubit(t))) continue;
      int sign = parity_below(bits, j, t);
      std::uint64_t k = j ^ bits.mask(spec.site_qubit(t));
      // U_{s,s+1}: raises the flux; the truncated variant has no wrap-around
      const std::uint64_t link = bits.mask(spec.link_qubit(s));
      if (truncated && (k & link)) continue;
      k ^= link;
      // psi_s^dag
      if (bits.get(k, spec.site_qubit(s))) continue;
      sign ^= parity_below(bits, k, s);
      k ^= bits.mask(spec.site_qubit(s));
      const double amp = sign ? -x : x;
      h(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) += amp;
      h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += amp;
    }
  }
  return h;
}

Eigen::VectorXd electric_diagonal(const LatticeSpec& spec) {
  const std::uint64_t dim = dense_dim(spec);
  const BasisBits bits{spec.qubits()};
  Eigen::VectorXd diag(static_cast<Eigen::Index>(dim));
  const double z2_scale = 2.0 / (std::numbers::pi * std::numbers::pi);
  for (std::uint64_t i = 0; i < dim; ++i) {
    double e = 0;
    for (int s = 0; s < spec.links(); ++s) {
      const bool up = bits.get(i, spec.link_qubit(s));
      if (spec.theory() == Theory::Z2) {
        e += z2_scale * (up ? -1.0 : 3.0);  // 2Z + I
      } else {
        e += up ? 0.0 : 1.0;
      }
    }
    diag(static_cast<Eigen::Index>(i)) = e;
  }
  return diag;
}

Eigen::VectorXd mass_diagonal(const LatticeSpec& spec, double mu) {
  const std::uint64_t dim = dense_dim(spec);
  const BasisBits bits{spec.qubits()};
  Eigen::VectorXd diag(static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    double m = 0;
    for (int s = 0; s < spec.sites(); ++s) {
      if (bits.get(i, spec.site_qubit(s))) m += s % 2 == 0 ? 1.0 : -1.0;
    }
    diag(static_cast<Eigen::Index>(i)) = mu * m;
  }
  return diag;
}

Eigen::MatrixXcd build_hamiltonian(const LatticeSpec& spec, const HamiltonianParams& params) {
  Eigen::MatrixXcd h = hopping_term(spec, params.x);
  h.diagonal() += (electric_diagonal(spec) + mass_diagonal(spec, params.mu)).cast<std::complex<double>>();
  return h;
}

Eigen::MatrixXcd unitary_propagator(const Eigen::MatrixXcd& h, double dt) {
  if (h.rows() != h.cols()) throw std::invalid_argument("Hamiltonian must be square");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument("Hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXcd phases =
      (std::complex<double>(0.0, -dt) * solver.eigenvalues().cast<std::complex<double>>()).array().exp();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

DensityMatrix evolution_step(const DensityMatrix& rho, const Eigen::MatrixXcd& unitary) {
  DensityMatrix tmp;
  tmp.noalias() = unitary * rho;
  DensityMatrix out;
  out.noalias() = tmp * unitary.adjoint();
  return out;
}

DensityMatrix evolution_step(const DensityMatrix& rho, const Eigen::MatrixXcd& h, double dt) {
  return evolution_step(rho, unitary_propagator(h, dt));
}

void apply_qubit_bitflip(DensityMatrix& rho, int qubits, int qubit, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bitflip probability out of [0,1]");
  if (qubit < 0 || qubit >= qubits) throw std::invalid_argument("qubit index out of range");
  const auto dim = static_cast<std::uint64_t>(rho.rows());
  const std::uint64_t m = std::uint64_t{1} << (qubits - 1 - qubit);
  for (std::uint64_t j = 0; j < dim; ++j) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & m) continue;
      auto& a = rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      auto& b = rho(static_cast<Eigen::Index>(i ^ m), static_cast<Eigen::Index>(j ^ m));
      const std::complex<double> old_a = a;
      a = (1.0 - p) * a + p * b;
      b = (1.0 - p) * b + p * old_a;
    }
  }
}

void apply_bitflip_channel(DensityMatrix& rho, int qubits, double p) {
  if (rho.rows() != (Eigen::Index{1} << qubits)) {
    throw std::invalid_argument("density matrix size does not match qubit count");
  }
  for (int q = 0; q < qubits; ++q) apply_qubit_bitflip(rho, qubits, q, p);
}

std::vector<std::uint64_t> recovery_fold_map(const LatticeSpec& spec, DecoderKind decoder) {
  const std::uint64_t dim = dense_dim(spec);
  const int n = spec.n();
  const std::vector<std::uint64_t> recoveries = recovery_table(decoder, n);
  const std::uint64_t reference = build_parity_check(spec).reference.to_index();
  std::vector<std::uint64_t> fold(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    fold[b] = b ^ recoveries[packed_syndrome(n, b) ^ reference];
  }
  return fold;
}

DensityMatrix apply_glqec_recovery(const DensityMatrix& rho, const std::vector<std::uint64_t>& fold) {
  if (static_cast<std::size_t>(rho.rows()) != fold.size()) {
    throw std::invalid_argument("fold map size does not match density matrix");
  }
  DensityMatrix out = DensityMatrix::Zero(rho.rows(), rho.cols());
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    const auto fj = static_cast<Eigen::Index>(fold[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      out(static_cast<Eigen::Index>(fold[static_cast<std::size_t>(i)]), fj) += rho(i, j);
    }
  }
  return out;
}

DensityMatrix apply_glqec_recovery(const DensityMatrix& rho, const LatticeSpec& spec,
                                   DecoderKind decoder) {
  return apply_glqec_recovery(rho, recovery_fold_map(spec, decoder));
}

ObservableSet measure_observables(const DensityMatrix& rho, const LatticeSpec& spec) {
  const std::uint64_t dim = dense_dim(spec);
  if (static_cast<std::uint64_t>(rho.rows()) != dim) {
    throw std::invalid_argument("density matrix size does not match lattice");
  }
  const BasisBits bits{spec.qubits()};
  const GaussLaw law = physical_law(spec.theory());
  const Eigen::VectorXd energy = electric_diagonal(spec);
  ObservableSet out;
  out.fidelity_vacuum = rho(static_cast<Eigen::Index>(vacuum_state(spec).to_index()),
                            static_cast<Eigen::Index>(vacuum_state(spec).to_index()))
                            .real();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const double weight = rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    if (weight == 0.0) continue;
    out.electric_energy += weight * energy(static_cast<Eigen::Index>(i));
    if (is_physical(spec, basis_state(i, spec.qubits()), law)) out.physicality += weight;
    int electrons = 0;
    int positrons = 0;
    for (int s = 0; s < spec.sites(); ++s) {
      const bool bit = bits.get(i, spec.site_qubit(s));
      if (s % 2 == 0 && !bit) ++electrons;
      if (s % 2 == 1 && bit) ++positrons;
    }
    if (electrons == 1 && positrons == 1) out.single_pair_probability += weight;
  }
  return out;
}

double code_space_probability(const DensityMatrix& rho, const LatticeSpec& spec) {
  const std::uint64_t dim = dense_dim(spec);
  const std::uint64_t reference = build_parity_check(spec).reference.to_index();
  double total = 0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (packed_syndrome(spec.n(), i) == reference) {
      total += rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    }
  }
  return total;
}

DensityMatrix basis_projector(std::uint64_t index, std::uint64_t dim) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  DensityMatrix rho = DensityMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  rho(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return rho;
}

DensityMatrix steady_state(const LatticeSpec& spec, Channel channel) {
  const std::uint64_t dim = dense_dim(spec);
  const auto size = static_cast<Eigen::Index>(dim);
  if (channel != Channel::GLQEC) {
    return DensityMatrix::Identity(size, size) / static_cast<double>(dim);
  }
  const std::uint64_t reference = build_parity_check(spec).reference.to_index();
  const double weight = std::ldexp(1.0, -2 * spec.n());
  DensityMatrix rho = DensityMatrix::Zero(size, size);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (packed_syndrome(spec.n(), i) == reference) {
      rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weight;
    }
  }
  return rho;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

Mode parse_mode(std::string_view name) {
  if (name == "memory") return Mode::Memory;
  if (name == "simulation") return Mode::Simulation;
  throw std::invalid_argument("unknown mode '" + std::string(name) +
                              "' (expected memory or simulation)");
}

std::vector<StepRecord> run_experiment(const ExperimentSettings& settings) {
  const LatticeSpec& spec = settings.spec;
  const std::uint64_t dim = dense_dim(spec);
  if (settings.channel == Channel::GLQEC && spec.n() < 2) {
    throw std::invalid_argument("GLQEC needs n >= 2");
  }
  if (settings.steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (!(settings.p >= 0.0 && settings.p <= 1.0)) throw std::invalid_argument("p out of [0,1]");
  if (settings.mode == Mode::Simulation && !(settings.params.dt > 0.0)) {
    throw std::invalid_argument("dt must be positive");
  }

  Eigen::MatrixXcd unitary;
  if (settings.mode == Mode::Simulation) {
    unitary = unitary_propagator(build_hamiltonian(spec, settings.params), settings.params.dt);
  }
  std::vector<std::uint64_t> fold;
  if (settings.channel == Channel::GLQEC) fold = recovery_fold_map(spec, settings.decoder);
  const double flip_rate = settings.channel == Channel::UQEC ? p3(settings.p) : settings.p;
  const DensityMatrix steady = steady_state(spec, settings.channel);

  DensityMatrix rho = basis_projector(vacuum_state(spec).to_index(), dim);
  std::vector<StepRecord> records;
  records.reserve(static_cast<std::size_t>(settings.steps) + 1);
  auto record = [&](int step) {
    records.push_back({step, measure_observables(rho, spec), trace_distance(rho, steady),
                       rho.trace().real()});
  };
  record(0);
  for (int step = 1; step <= settings.steps; ++step) {
    if (settings.mode == Mode::Simulation) rho = evolution_step(rho, unitary);
    apply_bitflip_channel(rho, spec.qubits(), flip_rate);
    if (settings.channel == Channel::GLQEC) rho = apply_glqec_recovery(rho, fold);
    record(step);
  }
  return records;
}

}  // namespace glqec
