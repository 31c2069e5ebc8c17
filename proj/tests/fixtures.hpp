#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "eqlines/construct.hpp"
#include "eqlines/golay.hpp"
#include "eqlines/seidel.hpp"

namespace eqlines::testing {

inline const GolayCode& golay_code() {
  static const GolayCode code = generate_code(build_generator());
  return code;
}

inline const LineSystem& asche_lines() {
  static const LineSystem s = asche_system(golay_code());
  return s;
}

inline const LineSystem& final_lines() {
  static const LineSystem s = final_system(golay_code());
  return s;
}

inline const SeidelMatrix& seidel_54() {
  static const SeidelMatrix s = seidel_from(final_lines());
  return s;
}

inline SeidelMatrix random_seidel(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::int8_t> e(n * n, 0);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int8_t v = coin(rng) ? 1 : -1;
      e[i * n + j] = v;
      e[j * n + i] = v;
    }
  }
  return SeidelMatrix::from_entries(n, std::move(e));
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<int> random_signs(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> s(n);
  for (auto& v : s) v = coin(rng) ? 1 : -1;
  return s;
}

}  // namespace eqlines::testing
