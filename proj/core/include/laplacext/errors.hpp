#pragma once

#include <stdexcept>
#include <string>

namespace laplacext {

// Invalid input: bad parameters, incompatible series lattices, schema
// violations. The CLI maps this to exit code 2.
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure at runtime: quadrature that does not converge,
// overflow of an internal representation. The CLI maps this to exit code 1.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace laplacext
