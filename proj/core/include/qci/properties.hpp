#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qci {

struct PropertyCheck {
  std::string module;
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::string first_failure;  // instance description
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  std::size_t instances = 0;
  std::vector<PropertyCheck> checks;
  bool ok() const;
};

// Randomized invariants of the polynomial, Groebner, quotient and Koszul
// layers on `instances` artinian quotients with at most 4 variables and
// relations of degree at most 3. Instance i draws from derived_stream(seed, i).
PropertyReport run_property_suite(std::uint64_t seed, std::size_t instances = 100, std::uint32_t prime = 101);

}  // namespace qci
