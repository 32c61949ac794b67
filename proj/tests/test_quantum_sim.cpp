#include "glqec/quantum_sim.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "glqec/combinatorics.hpp"
#include "glqec/errors.hpp"

using namespace glqec;
using cd = std::complex<double>;

namespace {

Eigen::MatrixXcd kron_chain(const std::vector<Eigen::MatrixXcd>& ops) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& op : ops) {
    Eigen::MatrixXcd next(out.rows() * op.rows(), out.cols() * op.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * op.rows(), j * op.cols(), op.rows(), op.cols()) = out(i, j) * op;
      }
    }
    out = next;
  }
  return out;
}

Eigen::MatrixXcd single(int qubits, int q, const Eigen::MatrixXcd& op) {
  std::vector<Eigen::MatrixXcd> ops(static_cast<std::size_t>(qubits), Eigen::MatrixXcd::Identity(2, 2));
  ops[static_cast<std::size_t>(q)] = op;
  return kron_chain(ops);
}

// Hamiltonian from explicit Pauli products, as an independent oracle.
Eigen::MatrixXcd operator_hamiltonian(const LatticeSpec& spec, const HamiltonianParams& params) {
  const int qubits = spec.qubits();
  const auto dim = Eigen::Index{1} << qubits;
  Eigen::MatrixXcd z(2, 2), lower(2, 2), raise(2, 2), x(2, 2), i2 = Eigen::MatrixXcd::Identity(2, 2);
  z << 1, 0, 0, -1;
  lower << 0, 1, 0, 0;  // |0><1|
  raise << 0, 0, 1, 0;  // |1><0|
  x << 0, 1, 1, 0;
  auto psi = [&](int s) {
    Eigen::MatrixXcd op = single(qubits, spec.site_qubit(s), lower);
    for (int r = 0; r < s; ++r) op = single(qubits, spec.site_qubit(r), z) * op;
    return op;
  };
  const Eigen::MatrixXcd link_op = spec.theory() == Theory::U1NonPeriodic ? raise : x;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < spec.sites(); ++s) {
    const Eigen::MatrixXcd a = psi(s).adjoint() * single(qubits, spec.link_qubit(s), link_op) * psi(s + 1 == spec.sites() ? 0 : s + 1);
    h += params.x * (a + a.adjoint());
    const Eigen::MatrixXcd number = psi(s).adjoint() * psi(s);
    h += params.mu * (s % 2 == 0 ? 1.0 : -1.0) * number;
    const Eigen::MatrixXcd zl = single(qubits, spec.link_qubit(s), z);
    if (spec.theory() == Theory::Z2) {
      h += 2.0 / (std::numbers::pi * std::numbers::pi) * (2.0 * zl + Eigen::MatrixXcd::Identity(dim, dim));
    } else {
      h += 0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + zl);
    }
  }
  (void)i2;
  return h;
}

DensityMatrix random_density(std::uint64_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = cd(normal(rng), normal(rng));
  }
  DensityMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

DensityMatrix code_projector(const LatticeSpec& spec) {
  return steady_state(spec, Channel::GLQEC) * std::ldexp(1.0, 2 * spec.n());
}

}  // namespace

TEST(Hamiltonian, MatchesOperatorProducts) {
  const HamiltonianParams params{0.6, 0.1, 1.0 / 3};
  for (int n = 1; n <= 2; ++n) {
    for (auto theory : {Theory::U1Periodic, Theory::U1NonPeriodic, Theory::Z2}) {
      const LatticeSpec spec(n, theory);
      const auto h = build_hamiltonian(spec, params);
      EXPECT_LT((h - operator_hamiltonian(spec, params)).cwiseAbs().maxCoeff(), 1e-12)
          << theory_name(theory) << " n=" << n;
      EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
  EXPECT_THROW(build_hamiltonian(LatticeSpec(4), params), SizeLimitError);
}

TEST(Hamiltonian, ElectricOnlyLimit) {
  const LatticeSpec spec(2);
  const auto h = build_hamiltonian(spec, {0.0, 0.0, 1.0});
  EXPECT_LT((h - Eigen::MatrixXcd(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
  const auto vac = static_cast<Eigen::Index>(vacuum_state(spec).to_index());
  EXPECT_EQ(h(vac, vac), cd(0.0, 0.0));
}

TEST(Hamiltonian, MassTermOnVacuum) {
  // Every even site mode is filled in the vacuum, so the staggered sum gives mu * n.
  for (int n = 1; n <= 3; ++n) {
    const LatticeSpec spec(n);
    const auto mass = mass_diagonal(spec, 0.1);
    EXPECT_NEAR(mass(static_cast<Eigen::Index>(vacuum_state(spec).to_index())), 0.1 * n, 1e-15);
  }
}

TEST(Hamiltonian, GaugeSymmetry) {
  const HamiltonianParams params{0.6, 0.1, 1.0 / 3};
  for (auto theory : {Theory::U1Periodic, Theory::U1NonPeriodic, Theory::Z2}) {
    const LatticeSpec spec(2, theory);
    const auto h = build_hamiltonian(spec, params);
    const auto code = code_projector(spec);
    EXPECT_LT((h * code - code * h).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::MatrixXcd integer = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
    for (const auto& b : enumerate_physical_states(spec, GaussLaw::NonPeriodicInteger)) {
      integer(static_cast<Eigen::Index>(b.to_index()), static_cast<Eigen::Index>(b.to_index())) = 1.0;
    }
    const double commutator = (h * integer - integer * h).cwiseAbs().maxCoeff();
    if (theory == Theory::U1NonPeriodic) {
      EXPECT_LT(commutator, 1e-12);
    } else {
      EXPECT_GT(commutator, 0.1);
    }
  }
}

TEST(Hamiltonian, TruncatedLinksDropWrapTransitions) {
  const HamiltonianParams params{0.6, 0.1, 1.0 / 3};
  const auto periodic = build_hamiltonian(LatticeSpec(2, Theory::U1Periodic), params);
  const auto truncated = build_hamiltonian(LatticeSpec(2, Theory::U1NonPeriodic), params);
  const Eigen::MatrixXcd diff = periodic - truncated;
  EXPECT_GT(diff.cwiseAbs().maxCoeff(), 0.1);
  for (Eigen::Index i = 0; i < diff.rows(); ++i) {
    for (Eigen::Index j = 0; j < diff.cols(); ++j) {
      if (std::abs(diff(i, j)) < 1e-15) continue;
      // only entries the truncated model lacks entirely
      EXPECT_EQ(truncated(i, j), cd(0.0, 0.0));
      // each such hop changes exactly one link qubit and two site qubits
      const auto changed = static_cast<std::uint64_t>(i ^ j);
      EXPECT_EQ(std::popcount(changed & 0x55u), 1);
      EXPECT_EQ(std::popcount(changed & 0xaau), 2);
    }
  }
}

TEST(Evolution, UnitaryProperties) {
  const LatticeSpec spec(2);
  const auto h = build_hamiltonian(spec, {0.6, 0.1, 1.0 / 3});
  const auto u = unitary_propagator(h, 1.0 / 3);
  EXPECT_LT((u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-12);
  const auto rho = random_density(256, 3);
  EXPECT_LT((evolution_step(rho, h, 0.0) - rho).cwiseAbs().maxCoeff(), 1e-12);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXcd v = solver.eigenvectors().col(7);
  const DensityMatrix eigen_rho = v * v.adjoint();
  EXPECT_LT((evolution_step(eigen_rho, u) - eigen_rho).cwiseAbs().maxCoeff(), 1e-10);

  const auto vac = basis_projector(vacuum_state(spec).to_index(), 256);
  const auto moved = evolution_step(vac, u);
  EXPECT_LT(measure_observables(moved, spec).fidelity_vacuum, 1.0 - 1e-3);
  EXPECT_NEAR(moved.trace().real(), 1.0, 1e-12);

  Eigen::MatrixXcd bad = h;
  bad(0, 1) += cd(0.0, 1.0);
  EXPECT_THROW(unitary_propagator(bad, 0.1), std::invalid_argument);
}

TEST(Channels, BitflipEqualsKrausSum) {
  const int qubits = 8;
  const double p = 0.13;
  const auto rho = random_density(256, 5);
  DensityMatrix kraus = DensityMatrix::Zero(256, 256);
  for (std::uint64_t v = 0; v < 256; ++v) {
    const int w = std::popcount(v);
    const double weight = std::pow(p, w) * std::pow(1 - p, qubits - w);
    for (Eigen::Index i = 0; i < 256; ++i) {
      for (Eigen::Index j = 0; j < 256; ++j) {
        kraus(i ^ static_cast<Eigen::Index>(v), j ^ static_cast<Eigen::Index>(v)) += weight * rho(i, j);
      }
    }
  }
  DensityMatrix fast = rho;
  apply_bitflip_channel(fast, qubits, p);
  EXPECT_LT((fast - kraus).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Channels, BitflipSpecialCases) {
  const auto rho = random_density(16, 9);
  DensityMatrix same = rho;
  apply_bitflip_channel(same, 4, 0.0);
  EXPECT_EQ(same, rho);

  DensityMatrix half = rho;
  apply_qubit_bitflip(half, 4, 2, 0.5);
  for (Eigen::Index i = 0; i < 16; ++i) {
    for (Eigen::Index j = 0; j < 16; ++j) EXPECT_NEAR(std::abs(half(i, j) - half(i ^ 2, j ^ 2)), 0.0, 1e-15);
  }

  // Diagonal states follow the classical flip kernel.
  Eigen::VectorXd probs = Eigen::VectorXd::Random(16).cwiseAbs();
  probs /= probs.sum();
  DensityMatrix diag = probs.cast<cd>().asDiagonal();
  apply_bitflip_channel(diag, 4, 0.2);
  for (int i = 0; i < 16; ++i) {
    double expected = 0;
    for (int j = 0; j < 16; ++j) {
      const int w = std::popcount(static_cast<unsigned>(i ^ j));
      expected += std::pow(0.2, w) * std::pow(0.8, 4 - w) * probs(j);
    }
    EXPECT_NEAR(diag(i, i).real(), expected, 1e-15);
  }
  EXPECT_THROW(apply_bitflip_channel(diag, 4, 1.2), std::invalid_argument);
}

TEST(Channels, GlqecFold) {
  const LatticeSpec spec(2);
  const auto fold = recovery_fold_map(spec, DecoderKind::Matching);
  const auto vac_index = vacuum_state(spec).to_index();
  const auto vac = basis_projector(vac_index, 256);
  EXPECT_EQ(apply_glqec_recovery(vac, fold), vac);

  // single flips of the vacuum come back
  for (int q = 0; q < 8; ++q) {
    const auto corrupted = basis_projector(vac_index ^ (1u << q), 256);
    EXPECT_EQ(apply_glqec_recovery(corrupted, fold), vac);
  }
  // equal mixture of two weight-1 corruptions
  const DensityMatrix mixed = 0.5 * (basis_projector(vac_index ^ 1u, 256) + basis_projector(vac_index ^ 8u, 256));
  EXPECT_LT((apply_glqec_recovery(mixed, fold) - vac).cwiseAbs().maxCoeff(), 1e-15);

  // noisy code-space state: coherences only join states with equal syndromes
  const auto code = code_projector(spec);
  DensityMatrix rho = code * random_density(256, 21) * code;
  rho /= rho.trace();
  apply_bitflip_channel(rho, 8, 0.2);
  const auto once = apply_glqec_recovery(rho, fold);
  EXPECT_LT((apply_glqec_recovery(once, fold) - once).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(code_space_probability(once, spec), 1.0, 1e-12);
  EXPECT_NEAR(once.trace().real(), 1.0, 1e-12);
}

TEST(Observables, ReferenceStates) {
  for (int n = 1; n <= 2; ++n) {
    const LatticeSpec spec(n);
    const auto dim = std::uint64_t{1} << spec.qubits();
    const auto vac = measure_observables(basis_projector(vacuum_state(spec).to_index(), dim), spec);
    EXPECT_EQ(vac.fidelity_vacuum, 1.0);
    EXPECT_EQ(vac.physicality, 1.0);
    EXPECT_EQ(vac.electric_energy, 0.0);
    EXPECT_EQ(vac.single_pair_probability, 0.0);
    EXPECT_NEAR(measure_observables(steady_state(spec, Channel::NoQEC), spec).electric_energy, n, 1e-12);
    if (n >= 2) {
      EXPECT_NEAR(measure_observables(steady_state(spec, Channel::GLQEC), spec).electric_energy, n, 1e-12);
    }
  }
  // one electron-positron pair on neighbouring sites with the flux between them lowered
  const LatticeSpec spec(2);
  auto pair = vacuum_state(spec);
  pair.flip(0);
  pair.flip(1);
  pair.flip(2);
  const auto obs = measure_observables(basis_projector(pair.to_index(), 256), spec);
  EXPECT_EQ(obs.single_pair_probability, 1.0);
  EXPECT_EQ(obs.physicality, 1.0);
  EXPECT_EQ(obs.electric_energy, 1.0);
}

TEST(Observables, TraceDistance) {
  const auto a = random_density(16, 1);
  EXPECT_NEAR(trace_distance(a, a), 0.0, 1e-12);
  EXPECT_NEAR(trace_distance(basis_projector(0, 16), basis_projector(3, 16)), 1.0, 1e-12);
  EXPECT_NEAR(trace_distance(basis_projector(0, 4), DensityMatrix::Identity(4, 4) / 4.0), 0.75, 1e-12);
}

TEST(Experiment, MemoryRunsPreserveTraceAndRelax) {
  for (auto channel : {Channel::NoQEC, Channel::GLQEC}) {
    ExperimentSettings s;
    s.channel = channel;
    const auto records = run_experiment(s);
    ASSERT_EQ(records.size(), 181u);
    for (const auto& r : records) EXPECT_NEAR(r.trace, 1.0, 1e-10);
    EXPECT_LT(records.back().trace_distance, 1e-3) << channel_name(channel);
  }
}

TEST(Experiment, Validation) {
  ExperimentSettings s;
  s.channel = Channel::GLQEC;
  s.spec = LatticeSpec(1);
  EXPECT_THROW(run_experiment(s), std::invalid_argument);
  s.spec = LatticeSpec(4);
  EXPECT_THROW(run_experiment(s), SizeLimitError);
  EXPECT_EQ(parse_mode("memory"), Mode::Memory);
  EXPECT_THROW(parse_mode("quench"), std::invalid_argument);
  EXPECT_EQ(parse_channel("uqec"), Channel::UQEC);
  EXPECT_THROW(parse_channel("qec"), std::invalid_argument);
}
