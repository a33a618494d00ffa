#pragma once

// The acceptance suite shared by `twoalg demo` and the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoalg/family.hpp"

namespace twoalg::suite {

struct Options {
  std::uint64_t seed = 1;
  bool quick = false;
};

struct NamedFamily {
  std::string name;
  Family family;
};

struct DcatCase {
  std::string name;
  Family family;
  std::vector<int> delta;
};

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  nlohmann::json report;
};

// Empty family, Green 2..6, KK 1..3 and seeded random (G)-families with n, m <= 4.
std::vector<NamedFamily> oracle_families(const Options& o);
// Seeded equidimensional families with n <= 3, k <= 2, m <= 3 and a grading δ.
std::vector<DcatCase> dcat_cases(const Options& o);
// Seeded n = 2, k = 1 families followed by hand-built adversarial ones.
std::vector<NamedFamily> curve_families(const Options& o);

// Criteria 1..9; criterion 10 reruns 1..9 and compares the JSON byte for byte.
Criterion run_criterion(int id, const Options& o);
std::vector<Criterion> run_all(const Options& o);

std::string summary_line(const Criterion& c);
nlohmann::json to_json(const std::vector<Criterion>& cs, const Options& o);

}  // namespace twoalg::suite
