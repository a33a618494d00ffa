#pragma once

#include <vector>

#include "twoalg/exactla.hpp"

namespace testing {

inline twoalg::Subspace span(int n, std::vector<std::vector<twoalg::Scalar>> rows) {
  return twoalg::Subspace::span(n, rows);
}

inline twoalg::Subspace line(int a, int b) { return twoalg::Subspace::span(2, {{a, b}}); }

inline std::vector<std::vector<twoalg::Scalar>> rows(const twoalg::Matrix& m) { return m.to_rows(); }

}  // namespace testing
