#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpo {

/// Malformed text input; `position()` is the byte offset where parsing stopped.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wpo
