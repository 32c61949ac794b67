#pragma once

#include <string_view>

namespace glqec {

/// Logical noise channel applied once per round.
enum class Channel {
  NoQEC,  // raw bitflips at rate p
  UQEC,   // bitflips at the repetition-code logical rate p3(p)
  GLQEC,  // bitflips at p, then Gauss's-law decoding
};

/// "noqec", "uqec" or "glqec".
Channel parse_channel(std::string_view name);
std::string_view channel_name(Channel channel);

}  // namespace glqec
