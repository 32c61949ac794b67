#include "glqec/lattice.hpp"

#include <stdexcept>
#include <string>

#include "glqec/errors.hpp"

namespace glqec {

Theory parse_theory(std::string_view name) {
  if (name == "u1-periodic") return Theory::U1Periodic;
  if (name == "u1-nonperiodic") return Theory::U1NonPeriodic;
  if (name == "z2") return Theory::Z2;
  throw std::invalid_argument("unknown theory '" + std::string(name) +
                              "' (expected u1-periodic, u1-nonperiodic or z2)");
}

std::string_view theory_name(Theory theory) {
  switch (theory) {
    case Theory::U1Periodic:
      return "u1-periodic";
    case Theory::U1NonPeriodic:
      return "u1-nonperiodic";
    case Theory::Z2:
      return "z2";
  }
  return "?";
}

GaussLaw physical_law(Theory theory) {
  return theory == Theory::U1NonPeriodic ? GaussLaw::NonPeriodicInteger : GaussLaw::Modular2;
}

LatticeSpec::LatticeSpec(int n, Theory theory) : n_(n), theory_(theory) {
  if (n < 1) {
    throw std::invalid_argument("lattice needs at least one physical site, got n=" +
                                std::to_string(n));
  }
}

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + " has length " + std::to_string(got) +
                                ", expected " + std::to_string(want));
  }
}

Syndrome apply_rows(const ParityCheck& pc, const BitString& v) {
  require_length(v.size(), static_cast<std::size_t>(pc.rows.cols()), "bitstring");
  Syndrome out(static_cast<std::size_t>(pc.rows.rows()));
  for (Eigen::Index r = 0; r < pc.rows.rows(); ++r) {
    std::uint8_t acc = 0;
    for (Eigen::Index c = 0; c < pc.rows.cols(); ++c) {
      acc ^= static_cast<std::uint8_t>(pc.rows(r, c) & v[static_cast<std::size_t>(c)]);
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

}  // namespace

ParityCheck build_parity_check(const LatticeSpec& spec) {
  ParityCheck pc;
  pc.n = spec.n();
  pc.rows = BinaryMatrix::Zero(spec.sites(), spec.qubits());
  for (int s = 0; s < spec.sites(); ++s) {
    pc.rows(s, spec.site_qubit(s)) ^= 1;
    pc.rows(s, spec.link_qubit(s)) ^= 1;
    pc.rows(s, spec.link_qubit(s - 1)) ^= 1;
  }
  // s0 is whatever a physical state measures; the vacuum is physical.
  pc.reference = apply_rows(pc, vacuum_state(spec));
  return pc;
}

Syndrome syndrome_of_error(const ParityCheck& pc, const ErrorPattern& e) {
  return apply_rows(pc, e);
}

Syndrome syndrome_of_state(const ParityCheck& pc, const BasisState& b) {
  return apply_rows(pc, b) ^ pc.reference;
}

std::uint64_t packed_syndrome(int n, std::uint64_t error) {
  const int qubits = 4 * n;
  const int checks = 2 * n;
  auto bit = [&](int q) { return (error >> (qubits - 1 - q)) & 1U; };
  std::uint64_t syn = 0;
  for (int s = 0; s < checks; ++s) {
    const int left_link = s == 0 ? qubits - 1 : 2 * s - 1;
    const std::uint64_t v = bit(2 * s) ^ bit(2 * s + 1) ^ bit(left_link);
    syn |= v << (checks - 1 - s);
  }
  return syn;
}

int gf2_rank(const BinaryMatrix& m) {
  BinaryMatrix a = m;
  int rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < a.rows(); ++r) {
      if (a(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(rank).swap(a.row(pivot));
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != rank && a(r, col)) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) ^= a(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

BasisState vacuum_state(const LatticeSpec& spec) {
  BasisState b(static_cast<std::size_t>(spec.qubits()));
  for (int s = 0; s < spec.sites(); ++s) {
    b[static_cast<std::size_t>(spec.site_qubit(s))] = s % 2 == 0 ? 1 : 0;
    b[static_cast<std::size_t>(spec.link_qubit(s))] = 1;
  }
  return b;
}

bool is_physical(const LatticeSpec& spec, const BasisState& b, GaussLaw law) {
  require_length(b.size(), static_cast<std::size_t>(spec.qubits()), "basis state");
  for (int s = 0; s < spec.sites(); ++s) {
    const int in = link_flux(b[static_cast<std::size_t>(spec.link_qubit(s - 1))]);
    const int out = link_flux(b[static_cast<std::size_t>(spec.link_qubit(s))]);
    const int charge = site_charge(s, b[static_cast<std::size_t>(spec.site_qubit(s))]);
    const int violation = out - in - charge;
    if (law == GaussLaw::Modular2 ? (violation % 2 != 0) : (violation != 0)) return false;
  }
  return true;
}

std::vector<BasisState> enumerate_physical_states(const LatticeSpec& spec, GaussLaw law) {
  if (spec.n() > 6) {
    throw SizeLimitError("physical-state enumeration is limited to n <= 6, got n=" +
                         std::to_string(spec.n()));
  }
  const auto qubits = static_cast<std::size_t>(spec.qubits());
  const std::uint64_t total = std::uint64_t{1} << qubits;
  std::vector<BasisState> out;
  for (std::uint64_t index = 0; index < total; ++index) {
    BasisState b = BasisState::from_index(index, qubits);
    if (is_physical(spec, b, law)) out.push_back(std::move(b));
  }
  return out;
}

KernelBasis::KernelBasis(const ParityCheck& pc) : pc_(pc), n_(pc.n) {
  const LatticeSpec spec(n_);
  for (int i = 0; i < spec.links(); ++i) {
    BitString g(static_cast<std::size_t>(spec.qubits()));
    g[static_cast<std::size_t>(spec.site_qubit(i))] ^= 1;
    g[static_cast<std::size_t>(spec.link_qubit(i))] ^= 1;
    g[static_cast<std::size_t>(spec.site_qubit(i + 1))] ^= 1;
    generators_.push_back(std::move(g));
  }
}

BitString KernelBasis::coordinates_of(const BitString& tau) const {
  if (!syndrome_of_error(pc_, tau).is_zero()) {
    throw std::invalid_argument("bitstring " + tau.to_string() + " is not in ker H_Z");
  }
  const LatticeSpec spec(n_);
  BitString coords(static_cast<std::size_t>(spec.links()));
  for (int i = 0; i < spec.links(); ++i) {
    coords[static_cast<std::size_t>(i)] = tau[static_cast<std::size_t>(spec.link_qubit(i))];
  }
  return coords;
}

BitString KernelBasis::element(const BitString& coords) const {
  require_length(coords.size(), generators_.size(), "kernel coordinates");
  BitString tau(static_cast<std::size_t>(4 * n_));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i]) tau ^= generators_[i];
  }
  return tau;
}

std::uint64_t KernelBasis::packed_coordinates(std::uint64_t tau) const {
  const int qubits = 4 * n_;
  const int links = 2 * n_;
  std::uint64_t coords = 0;
  for (int i = 0; i < links; ++i) {
    const std::uint64_t v = (tau >> (qubits - 2 - 2 * i)) & 1U;
    coords |= v << (links - 1 - i);
  }
  return coords;
}

std::uint64_t KernelBasis::packed_element(std::uint64_t coords) const {
  const int qubits = 4 * n_;
  const int links = 2 * n_;
  auto x = [&](int i) { return (coords >> (links - 1 - ((i + links) % links))) & 1U; };
  std::uint64_t tau = 0;
  for (int s = 0; s < links; ++s) {
    tau |= (x(s - 1) ^ x(s)) << (qubits - 1 - 2 * s);
    tau |= x(s) << (qubits - 2 - 2 * s);
  }
  return tau;
}

}  // namespace glqec
