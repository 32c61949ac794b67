#include "glqec/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace glqec {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) {
      throw std::invalid_argument("BitString entries must be 0 or 1");
    }
  }
}

BitString BitString::from_string(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.bits_[i] = 1;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring text may only contain '0' and '1': " +
                                  std::string(text));
    }
  }
  return out;
}

BitString BitString::from_index(std::uint64_t index, std::size_t size) {
  if (size > 64) {
    throw std::invalid_argument("packed bitstrings hold at most 64 bits");
  }
  BitString out(size);
  for (std::size_t i = 0; i < size; ++i) {
    out.bits_[i] = static_cast<std::uint8_t>((index >> (size - 1 - i)) & 1U);
  }
  return out;
}

std::size_t BitString::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t BitString::to_index() const {
  if (bits_.size() > 64) {
    throw std::length_error("bitstring too long to pack into 64 bits");
  }
  std::uint64_t index = 0;
  for (auto b : bits_) {
    index = (index << 1U) | b;
  }
  return index;
}

std::string BitString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("bitstring length mismatch in xor");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] ^= other.bits_[i];
  }
  return *this;
}

}  // namespace glqec
