#include "glqec/decoders.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "glqec/errors.hpp"

namespace glqec {

DecoderKind parse_decoder(std::string_view name) {
  if (name == "extended-rrw") return DecoderKind::ExtendedRrw;
  if (name == "matching") return DecoderKind::Matching;
  throw std::invalid_argument("unknown decoder '" + std::string(name) +
                              "' (expected extended-rrw or matching)");
}

std::string_view decoder_name(DecoderKind kind) {
  return kind == DecoderKind::ExtendedRrw ? "extended-rrw" : "matching";
}

std::vector<int> flipped_qubits(const Recovery& r) {
  std::vector<int> out;
  for (std::size_t q = 0; q < r.size(); ++q) {
    if (r[q]) out.push_back(static_cast<int>(q));
  }
  return out;
}

LocalFlip lookup_rrw(std::uint8_t left, std::uint8_t center, std::uint8_t right) {
  const int window = (left << 2) | (center << 1) | right;
  switch (window) {
    case 0b000:
      return LocalFlip::None;
    case 0b110:
      return LocalFlip::LeftLink;
    case 0b010:
      return LocalFlip::Site;
    case 0b011:
      return LocalFlip::RightLink;
    default:
      return LocalFlip::Unhandled;
  }
}

std::vector<int> runs_of_ones(std::span<const std::uint8_t> syndrome) {
  const auto m = syndrome.size();
  std::vector<int> runs;
  const auto first_zero = std::find(syndrome.begin(), syndrome.end(), std::uint8_t{0});
  if (m == 0) return runs;
  if (first_zero == syndrome.end()) {
    runs.push_back(static_cast<int>(m));
    return runs;
  }
  // Walk the cycle starting just after a zero so no run is split.
  const auto start = static_cast<std::size_t>(first_zero - syndrome.begin());
  int current = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    if (syndrome[(start + i) % m]) {
      ++current;
    } else if (current > 0) {
      runs.push_back(current);
      current = 0;
    }
  }
  return runs;
}

int min_recovery_weight(std::span<const std::uint8_t> syndrome) {
  int weight = 0;
  for (int len : runs_of_ones(syndrome)) weight += (len + 1) / 2;
  return weight;
}

namespace {

void check_shapes(std::span<const std::uint8_t> syndrome, std::span<std::uint8_t> recovery) {
  const auto m = syndrome.size();
  if (m < 4 || m % 2 != 0) {
    throw std::invalid_argument("decoders need a syndrome of even length >= 4 (n >= 2), got " +
                                std::to_string(m));
  }
  if (recovery.size() != 2 * m) {
    throw std::invalid_argument("recovery buffer must have length 2 * syndrome length");
  }
}

}  // namespace

void decode_extended_rrw(std::span<const std::uint8_t> syndrome, std::span<std::uint8_t> recovery) {
  check_shapes(syndrome, recovery);
  const auto m = static_cast<int>(syndrome.size());
  std::fill(recovery.begin(), recovery.end(), std::uint8_t{0});
  auto link = [&](int s) { recovery[static_cast<std::size_t>(2 * ((s % m + m) % m) + 1)] ^= 1; };
  auto site = [&](int s) { recovery[static_cast<std::size_t>(2 * s)] ^= 1; };

  if (std::all_of(syndrome.begin(), syndrome.end(), [](auto b) { return b == 1; })) {
    for (int s = 0; s < m; s += 2) link(s);
    return;
  }

  std::vector<std::uint8_t> syn(syndrome.begin(), syndrome.end());
  auto at = [&](int s) -> std::uint8_t& { return syn[static_cast<std::size_t>((s % m + m) % m)]; };

  int start = 0;
  while (at(start) == 1) start = (start - 1 + m) % m;

  for (int i = 0; i < m; ++i) {
    const int s = (start + i) % m;
    const std::uint8_t l = at(s - 1);
    const std::uint8_t c = at(s);
    const std::uint8_t r = at(s + 1);
    if (c == 0) continue;
    if (l == 0 && r == 0) {
      at(s) = 0;
      site(s);
    } else if (l == 0 && r == 1) {
      at(s) = 0;
      at(s + 1) = 0;
      link(s);
    } else {
      // (1,1,0) from the table, (1,1,1) by extension: use the left link
      at(s) = 0;
      at(s - 1) = 0;
      link(s - 1);
    }
  }
}

Recovery decode_extended_rrw(const Syndrome& syndrome) {
  Recovery r(2 * syndrome.size());
  decode_extended_rrw(syndrome.span(), r.span());
  return r;
}

void decode_matching(std::span<const std::uint8_t> syndrome, std::span<std::uint8_t> recovery) {
  check_shapes(syndrome, recovery);
  const auto m = static_cast<int>(syndrome.size());
  // Flipping links x_0..x_{m-1} forces site flips S_s = syn_s ^ x_{s-1} ^ x_s.
  // Cost of a choice is weight * scale + links, so minimising it minimises
  // weight first and then prefers site (boundary) flips.
  const int scale = m + 1;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;

  std::vector<std::uint8_t> best;
  int best_cost = kInf;
  std::vector<std::uint8_t> bits(2 * static_cast<std::size_t>(m));
  std::vector<std::array<int, 2>> cost(static_cast<std::size_t>(m) + 1);

  for (int wrap = 0; wrap <= 1; ++wrap) {
    auto options = [&](int s) { return s == m - 1 ? std::pair{wrap, wrap} : std::pair{0, 1}; };
    auto local = [&](int s, int prev, int x) {
      const int site_bit = syndrome[static_cast<std::size_t>(s)] ^ prev ^ x;
      return (site_bit + x) * scale + x;
    };
    cost[static_cast<std::size_t>(m)] = {0, 0};
    for (int s = m - 1; s >= 0; --s) {
      for (int prev = 0; prev <= 1; ++prev) {
        int c = kInf;
        const auto [lo, hi] = options(s);
        for (int x = lo; x <= hi; ++x) {
          c = std::min(c, local(s, prev, x) + cost[static_cast<std::size_t>(s) + 1][x]);
        }
        cost[static_cast<std::size_t>(s)][prev] = c;
      }
    }
    const int total = cost[0][wrap];

    // Walk forward choosing the lexicographically smallest optimal option.
    int prev = wrap;
    for (int s = 0; s < m; ++s) {
      const auto [lo, hi] = options(s);
      int chosen = -1;
      std::pair<int, int> chosen_bits{2, 2};
      for (int x = lo; x <= hi; ++x) {
        if (local(s, prev, x) + cost[static_cast<std::size_t>(s) + 1][x] !=
            cost[static_cast<std::size_t>(s)][prev]) {
          continue;
        }
        const std::pair<int, int> candidate{syndrome[static_cast<std::size_t>(s)] ^ prev ^ x, x};
        if (candidate < chosen_bits) {
          chosen_bits = candidate;
          chosen = x;
        }
      }
      bits[2 * static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(chosen_bits.first);
      bits[2 * static_cast<std::size_t>(s) + 1] = static_cast<std::uint8_t>(chosen_bits.second);
      prev = chosen;
    }
    if (total < best_cost || (total == best_cost && bits < best)) {
      best_cost = total;
      best = bits;
    }
  }
  std::copy(best.begin(), best.end(), recovery.begin());
}

Recovery decode_matching(const Syndrome& syndrome) {
  Recovery r(2 * syndrome.size());
  decode_matching(syndrome.span(), r.span());
  return r;
}

Recovery decode(DecoderKind kind, const Syndrome& syndrome) {
  return kind == DecoderKind::ExtendedRrw ? decode_extended_rrw(syndrome)
                                          : decode_matching(syndrome);
}

std::vector<std::uint64_t> recovery_table(DecoderKind kind, int n) {
  if (n < 2) throw std::invalid_argument("decoders need n >= 2");
  if (n > 12) throw SizeLimitError("recovery tables are limited to n <= 12");
  const auto m = static_cast<std::size_t>(2 * n);
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::uint64_t> table(count);
  Recovery r(2 * m);
  for (std::uint64_t s = 0; s < count; ++s) {
    const Syndrome syn = Syndrome::from_index(s, m);
    if (kind == DecoderKind::ExtendedRrw) {
      decode_extended_rrw(syn.span(), r.span());
    } else {
      decode_matching(syn.span(), r.span());
    }
    table[s] = r.to_index();
  }
  return table;
}

}  // namespace glqec
