#pragma once

#include <stdexcept>
#include <string>

namespace nco {

// Raised when a numerical kernel fails to meet its accuracy contract
// (eigensolver non-convergence, constraint sampling failure, ...).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nco
