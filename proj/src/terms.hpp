#pragma once

// Shared term-list text format for field elements and quaternions:
//   (1/2) + (1/2)r5 - (1/4)i + r2k
#include "bgw/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bgw::detail {

struct Term {
  Rational coeff;
  int radicand = 1;
  char unit = 0;  // 0, 'i', 'j' or 'k'
};

void append_term(std::string& out, const Term& t, bool first);
// Throws std::invalid_argument on malformed input or a unit outside `units`.
std::vector<Term> parse_terms(std::string_view text, std::string_view units);

}  // namespace bgw::detail
