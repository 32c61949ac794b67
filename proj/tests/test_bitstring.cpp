#include "glqec/bitstring.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using glqec::BitString;

TEST(BitString, TextRoundTrip) {
  const auto b = BitString::from_string("1101");
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[2], 0);
  EXPECT_EQ(b.to_string(), "1101");
  EXPECT_EQ(b.weight(), 3u);
  EXPECT_THROW(BitString::from_string("10x"), std::invalid_argument);
}

TEST(BitString, IndexIsMostSignificantFirst) {
  EXPECT_EQ(BitString::from_string("1000").to_index(), 8u);
  EXPECT_EQ(BitString::from_index(1, 4).to_string(), "0001");
  for (std::uint64_t i = 0; i < 256; ++i) EXPECT_EQ(BitString::from_index(i, 8).to_index(), i);
  EXPECT_THROW(BitString(65).to_index(), std::length_error);
}

TEST(BitString, XorAndOrdering) {
  const auto a = BitString::from_string("1100");
  const auto b = BitString::from_string("1010");
  EXPECT_EQ((a ^ b).to_string(), "0110");
  EXPECT_TRUE((a ^ a).is_zero());
  EXPECT_LT(b, a);
  auto c = a;
  c.flip(3);
  EXPECT_EQ(c.to_string(), "1101");
}
