#pragma once

#include <cstdint>
#include <vector>

#include "grinv/mat.hpp"
#include "grinv/linalg.hpp"
#include "grinv/rng.hpp"

namespace grinv::testing {

inline MatQ random_mat(SplitMix64& rng, std::size_t rows, std::size_t cols, std::int64_t bound = 9) {
  MatQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(rng.uniform(-bound, bound), rng.uniform(1, 4));
  return m;
}

inline MatQ random_invertible_mat(SplitMix64& rng, std::size_t n, std::int64_t bound = 9) {
  while (true) {
    MatQ m = random_mat(rng, n, n, bound);
    if (rank(m) == n) return m;
  }
}

inline std::vector<MatQ> random_right_factors(SplitMix64& rng, std::size_t s, std::size_t d) {
  std::vector<MatQ> h;
  for (std::size_t i = 0; i < s; ++i) h.push_back(random_invertible_mat(rng, d, 5));
  return h;
}

}  // namespace grinv::testing
