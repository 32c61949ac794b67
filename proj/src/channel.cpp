#include "glqec/channel.hpp"

#include <stdexcept>
#include <string>

namespace glqec {

Channel parse_channel(std::string_view name) {
  if (name == "noqec") return Channel::NoQEC;
  if (name == "uqec") return Channel::UQEC;
  if (name == "glqec") return Channel::GLQEC;
  throw std::invalid_argument("unknown channel '" + std::string(name) +
                              "' (expected noqec, uqec or glqec)");
}

std::string_view channel_name(Channel channel) {
  switch (channel) {
    case Channel::NoQEC:
      return "noqec";
    case Channel::UQEC:
      return "uqec";
    case Channel::GLQEC:
      return "glqec";
  }
  return "?";
}

}  // namespace glqec
