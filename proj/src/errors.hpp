#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noncross {

// Malformed text input. offset is the 0-based character position of the
// first offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A feasibility bound was exceeded. The message names the cheaper path.
class bound_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace noncross
