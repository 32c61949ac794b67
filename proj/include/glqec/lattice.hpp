#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "glqec/bitstring.hpp"

namespace glqec {

/// Binary gauge-field variants of the 1+1D lattice.
enum class Theory {
  U1Periodic,     // truncated U(1), periodic electric field
  U1NonPeriodic,  // truncated U(1), non-periodic electric field
  Z2,
};

enum class GaussLaw {
  Modular2,            // charge conservation mod 2
  NonPeriodicInteger,  // integer flux difference equals charge
};

Theory parse_theory(std::string_view name);
std::string_view theory_name(Theory theory);

/// The Gauss's law each theory uses to define its own physical subspace.
GaussLaw physical_law(Theory theory);

/// Periodic 1+1D lattice of n physical sites (2n fermionic sites, 2n links).
///
/// Qubits are interleaved S_0, L_{0,1}, S_1, L_{1,2}, ..., S_{2n-1}, L_{2n-1,0};
/// site s lives on qubit 2s and link L_{s,s+1} on qubit 2s+1.
class LatticeSpec {
 public:
  LatticeSpec(int n, Theory theory = Theory::U1Periodic);

  int n() const { return n_; }
  Theory theory() const { return theory_; }
  int sites() const { return 2 * n_; }
  int links() const { return 2 * n_; }
  int qubits() const { return 4 * n_; }

  int site_qubit(int s) const { return 2 * wrap_site(s); }
  /// Qubit of link L_{s,s+1}.
  int link_qubit(int s) const { return 2 * wrap_site(s) + 1; }
  int wrap_site(int s) const { return ((s % sites()) + sites()) % sites(); }

 private:
  int n_;
  Theory theory_;
};

/// Electric flux carried by a link qubit: 0 -> -1, 1 -> 0.
inline int link_flux(std::uint8_t bit) { return bit ? 0 : -1; }

/// Charge of fermionic site s: even sites hold electrons (qubit 0 -> -1),
/// odd sites hold positrons (qubit 1 -> +1).
inline int site_charge(int s, std::uint8_t bit) {
  if (s % 2 == 0) return bit ? 0 : -1;
  return bit ? 1 : 0;
}

using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Gauss's-law parity checks H_Z together with the syndrome that every
/// physical basis state produces.
struct ParityCheck {
  int n = 0;
  BinaryMatrix rows;   // 2n x 4n
  Syndrome reference;  // s0, alternating 1,0,1,0,...
};

ParityCheck build_parity_check(const LatticeSpec& spec);

/// H_Z e over GF(2).
Syndrome syndrome_of_error(const ParityCheck& pc, const ErrorPattern& e);
/// H_Z b + s0 over GF(2); zero exactly for mod-2 physical states.
Syndrome syndrome_of_state(const ParityCheck& pc, const BasisState& b);

/// Packed syndrome of a packed error pattern (4n <= 64). Same bit order as
/// BitString::to_index.
std::uint64_t packed_syndrome(int n, std::uint64_t error);

/// Rank over GF(2).
int gf2_rank(const BinaryMatrix& m);

/// Strong-coupling vacuum: no particles, every link at flux 0.
BasisState vacuum_state(const LatticeSpec& spec);

bool is_physical(const LatticeSpec& spec, const BasisState& b, GaussLaw law);

/// Brute force over all 2^{4n} basis states, n <= 6.
std::vector<BasisState> enumerate_physical_states(const LatticeSpec& spec, GaussLaw law);

/// Basis of ker H_Z. Generator i is the weight-3 transition S_i L_{i,i+1} S_{i+1};
/// since site bits of a kernel element are fixed by its link bits, the
/// coordinates of an element are exactly its link bits.
class KernelBasis {
 public:
  explicit KernelBasis(const ParityCheck& pc);

  int dimension() const { return static_cast<int>(generators_.size()); }
  const std::vector<BitString>& generators() const { return generators_; }

  /// Throws std::invalid_argument if tau is not in the kernel.
  BitString coordinates_of(const BitString& tau) const;
  BitString element(const BitString& coords) const;

  /// Packed variants for 4n <= 64; coordinate i is bit (2n-1-i).
  std::uint64_t packed_coordinates(std::uint64_t tau) const;
  std::uint64_t packed_element(std::uint64_t coords) const;

 private:
  ParityCheck pc_;
  int n_;
  std::vector<BitString> generators_;
};

}  // namespace glqec
