#include "glqec/decoders.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <limits>
#include <string>
#include <map>
#include <tuple>

#include "glqec/lattice.hpp"

using namespace glqec;

namespace {

// For every syndrome, the best error by (weight, most site flips, text order),
// found by enumerating all 2^{4n} errors.
std::vector<std::uint64_t> brute_force_best(int n) {
  const int qubits = 4 * n;
  std::uint64_t site_mask = 0;
  for (int s = 0; s < 2 * n; ++s) site_mask |= std::uint64_t{1} << (qubits - 1 - 2 * s);
  using Key = std::tuple<int, int, std::string>;
  std::vector<Key> best(std::uint64_t{1} << (2 * n), Key{std::numeric_limits<int>::max(), 0, ""});
  std::vector<std::uint64_t> out(best.size());
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << qubits); ++e) {
    const auto syn = packed_syndrome(n, e);
    const Key key{std::popcount(e), -std::popcount(e & site_mask),
                  BitString::from_index(e, static_cast<std::size_t>(qubits)).to_string()};
    if (key < best[syn]) {
      best[syn] = key;
      out[syn] = e;
    }
  }
  return out;
}

}  // namespace

TEST(Decoders, Names) {
  EXPECT_EQ(parse_decoder("matching"), DecoderKind::Matching);
  EXPECT_EQ(decoder_name(parse_decoder("extended-rrw")), "extended-rrw");
  EXPECT_THROW(parse_decoder("mwpm"), std::invalid_argument);
}

TEST(Decoders, LookupTable) {
  EXPECT_EQ(lookup_rrw(0, 0, 0), LocalFlip::None);
  EXPECT_EQ(lookup_rrw(1, 1, 0), LocalFlip::LeftLink);
  EXPECT_EQ(lookup_rrw(0, 1, 0), LocalFlip::Site);
  EXPECT_EQ(lookup_rrw(0, 1, 1), LocalFlip::RightLink);
  EXPECT_EQ(lookup_rrw(1, 1, 1), LocalFlip::Unhandled);
  EXPECT_EQ(lookup_rrw(1, 0, 1), LocalFlip::Unhandled);
}

TEST(Decoders, RunsOfOnes) {
  EXPECT_EQ(runs_of_ones(Syndrome::from_string("0000").span()), std::vector<int>{});
  EXPECT_EQ(runs_of_ones(Syndrome::from_string("1111").span()), std::vector<int>{4});
  EXPECT_EQ(runs_of_ones(Syndrome::from_string("1001").span()), std::vector<int>{2});
  EXPECT_EQ(runs_of_ones(Syndrome::from_string("110101").span()).size(), 2u);
  EXPECT_EQ(min_recovery_weight(Syndrome::from_string("111011")), 3);
  EXPECT_EQ(min_recovery_weight(Syndrome::from_string("111111")), 3);
}

TEST(Decoders, ExtendedRrwHandCases) {
  // single check -> its site
  EXPECT_EQ(decode_extended_rrw(Syndrome::from_string("0100")).to_string(), "00100000");
  // two adjacent checks -> the link between them
  EXPECT_EQ(decode_extended_rrw(Syndrome::from_string("0110")).to_string(), "00010000");
  // run wrapping the boundary
  EXPECT_EQ(decode_extended_rrw(Syndrome::from_string("1001")).to_string(), "00000001");
  // all ones -> every other link starting at L_{0,1}
  EXPECT_EQ(decode_extended_rrw(Syndrome::from_string("1111")).to_string(), "01000100");
  EXPECT_THROW(decode_extended_rrw(Syndrome::from_string("11")), std::invalid_argument);
  EXPECT_THROW(decode_matching(Syndrome::from_string("101")), std::invalid_argument);
}

TEST(Decoders, MinimumWeightOracle) {
  for (int n = 2; n <= 3; ++n) {
    const auto best = brute_force_best(n);
    for (std::uint64_t s = 0; s < best.size(); ++s) {
      const auto syn = Syndrome::from_index(s, static_cast<std::size_t>(2 * n));
      EXPECT_EQ(min_recovery_weight(syn), std::popcount(best[s])) << syn.to_string();
    }
  }
}

TEST(Decoders, MatchingTieBreakOracle) {
  for (int n = 2; n <= 3; ++n) {
    const auto best = brute_force_best(n);
    for (std::uint64_t s = 0; s < best.size(); ++s) {
      const auto syn = Syndrome::from_index(s, static_cast<std::size_t>(2 * n));
      EXPECT_EQ(decode_matching(syn).to_index(), best[s]) << syn.to_string();
    }
  }
}

TEST(Decoders, ExhaustiveValidity) {
  for (int n = 2; n <= 6; ++n) {
    const auto pc = build_parity_check(LatticeSpec(n));
    for (auto kind : {DecoderKind::ExtendedRrw, DecoderKind::Matching}) {
      const auto table = recovery_table(kind, n);
      for (std::uint64_t s = 0; s < table.size(); ++s) {
        ASSERT_EQ(packed_syndrome(n, table[s]), s);
        const auto syn = Syndrome::from_index(s, static_cast<std::size_t>(2 * n));
        ASSERT_EQ(std::popcount(table[s]), min_recovery_weight(syn)) << syn.to_string();
      }
      for (int q = 0; q < 4 * n; ++q) {
        ErrorPattern e(static_cast<std::size_t>(4 * n));
        e.flip(static_cast<std::size_t>(q));
        EXPECT_EQ(decode(kind, syndrome_of_error(pc, e)), e);
      }
    }
  }
  EXPECT_THROW(recovery_table(DecoderKind::Matching, 1), std::invalid_argument);
}

TEST(Decoders, LargeLatticeSpans) {
  // n = 50: random syndromes decode to valid minimum-weight recoveries
  const int n = 50;
  const auto pc = build_parity_check(LatticeSpec(n));
  std::uint64_t state = 12345;
  for (int trial = 0; trial < 50; ++trial) {
    Syndrome syn(2 * n);
    for (std::size_t i = 0; i < syn.size(); ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      syn[i] = static_cast<std::uint8_t>((state >> 62) == 0);
    }
    for (auto kind : {DecoderKind::ExtendedRrw, DecoderKind::Matching}) {
      const auto r = decode(kind, syn);
      EXPECT_EQ(syndrome_of_error(pc, r), syn);
      EXPECT_EQ(static_cast<int>(r.weight()), min_recovery_weight(syn));
    }
  }
  EXPECT_EQ(flipped_qubits(Recovery::from_string("0101")), (std::vector<int>{1, 3}));
}
