#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "glqec/bitstring.hpp"

namespace glqec {

enum class DecoderKind { ExtendedRrw, Matching };

/// "extended-rrw" or "matching".
DecoderKind parse_decoder(std::string_view name);
std::string_view decoder_name(DecoderKind kind);

/// Length-4n flip pattern produced by a decoder.
using Recovery = BitString;

std::vector<int> flipped_qubits(const Recovery& r);

/// Single-flip action of the local three-check lookup table.
enum class LocalFlip { None, LeftLink, Site, RightLink, Unhandled };

LocalFlip lookup_rrw(std::uint8_t left, std::uint8_t center, std::uint8_t right);

/// Lengths of the maximal cyclic runs of ones. The all-ones syndrome is a
/// single run covering the whole cycle.
std::vector<int> runs_of_ones(std::span<const std::uint8_t> syndrome);

/// Sum over runs of ceil(length / 2).
int min_recovery_weight(std::span<const std::uint8_t> syndrome);
inline int min_recovery_weight(const Syndrome& s) { return min_recovery_weight(s.span()); }

// Decoders accept syndromes of even length 2n with n >= 2 and write a
// length-4n recovery. The span forms avoid allocation of the result.

/// Left-to-right lookup decoder with the (1,1,1) extension, the all-ones
/// special case and the leftward scan for the start of a run.
void decode_extended_rrw(std::span<const std::uint8_t> syndrome, std::span<std::uint8_t> recovery);
Recovery decode_extended_rrw(const Syndrome& syndrome);

/// Exact minimum-weight matching on the cycle of checks, where each link
/// qubit joins two neighbouring checks and each site qubit joins its check to
/// the boundary. Solved by dynamic programming over the link flips with the
/// wrap-around link fixed in turn. Among minimum-weight recoveries it picks
/// the one with the most site flips, then the lexicographically smallest.
void decode_matching(std::span<const std::uint8_t> syndrome, std::span<std::uint8_t> recovery);
Recovery decode_matching(const Syndrome& syndrome);

Recovery decode(DecoderKind kind, const Syndrome& syndrome);

/// Packed recovery for every packed syndrome of an n-site lattice
/// (2^{2n} entries, 2 <= n <= 12).
std::vector<std::uint64_t> recovery_table(DecoderKind kind, int n);

}  // namespace glqec
