#pragma once

#include <stdexcept>
#include <string>

namespace gridlock {

// An enumeration or table build exceeded its configured cap: the instance is
// too large for exhaustive checking, and partial output must not be trusted.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gridlock
