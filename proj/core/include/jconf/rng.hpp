#pragma once

#include <cstdint>
#include <random>

#include "jconf/scalar.hpp"

namespace jconf {

// Deterministic source of small exact scalars for sampled checks.
// Coefficients are uniform over numerators {-3..3} and denominators {1,2}.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  Rational rat() {
    Rational q(uniform(-3, 3), uniform(1, 2));
    q.canonicalize();
    return q;
  }
  Scalar real_scalar() { return Scalar(rat()); }
  Scalar complex_scalar() { return Scalar(rat(), rat(), 0, 0, 0); }
  Scalar scalar(bool complex) { return complex ? complex_scalar() : real_scalar(); }

 private:
  std::mt19937_64 eng_;
};

constexpr std::uint64_t kDefaultSeed = 12345;

}  // namespace jconf
