#pragma once

#include <cstdint>
#include <random>

#include "ut3/linalg.hpp"

namespace ut3 {

/**
 * Seeded source of test data. The engine is std::mt19937_64, whose output
 * sequence is fixed by the standard; values are mapped to doubles by hand
 * rather than through std::uniform_real_distribution, which is
 * implementation-defined. Same seed, same numbers on every platform.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  Complex complex() { return {symmetric(), symmetric()}; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  Matrix matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex();
    return m;
  }

  Vector vector(Eigen::Index n) { return matrix(n, 1).col(0); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ut3
