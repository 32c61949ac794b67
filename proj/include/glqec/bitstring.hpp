#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glqec {

/// Fixed-length string of bits. Index 0 is the leftmost character of the
/// text form and the most significant bit of the packed integer form.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size) : bits_(size, 0) {}
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses "0101..." text. Throws std::invalid_argument on other characters.
  static BitString from_string(std::string_view text);
  /// Unpacks the low `size` bits of `index`, bit (size-1-i) becoming entry i.
  static BitString from_index(std::uint64_t index, std::size_t size);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits_[i]; }

  void flip(std::size_t i) { bits_[i] ^= 1U; }

  std::size_t weight() const;
  bool is_zero() const { return weight() == 0; }

  /// Packed form; requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;

  std::span<const std::uint8_t> span() const { return bits_; }
  std::span<std::uint8_t> span() { return bits_; }

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString lhs, const BitString& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Qubit configuration of the lattice.
using BasisState = BitString;
/// Set of bitflips, one entry per qubit.
using ErrorPattern = BitString;
/// Gauss's-law check outcomes after the reference offset has been removed.
using Syndrome = BitString;

}  // namespace glqec
