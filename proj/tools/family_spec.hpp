#pragma once

#include <string>
#include <vector>

#include "twoalg/family.hpp"

namespace twoalg {

// "green:l", "kk:n", "random:n,m,(k1,...,km),seed", "empty:n", or a path to a family JSON file.
Family parse_family_spec(const std::string& spec);

// "1,0,-2" -> {1, 0, -2}; empty text gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace twoalg
