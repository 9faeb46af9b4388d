#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "maxgenus/field.hpp"
#include "maxgenus/polynomial.hpp"

namespace testing {

inline maxgenus::Polynomial P(const std::string& text, const maxgenus::Field& field) {
  return maxgenus::parse_polynomial(text, field);
}

inline maxgenus::Polynomial W(const std::string& text, const maxgenus::Field& field) {
  return maxgenus::parse_polynomial(text, field, maxgenus::Ring::XYW);
}

inline maxgenus::FieldElement random_nonzero(const maxgenus::Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(1, field.characteristic() - 1);
  return field.from_residue(dist(rng));
}

inline maxgenus::FieldElement random_element(const maxgenus::Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  return field.from_residue(dist(rng));
}

}  // namespace testing
