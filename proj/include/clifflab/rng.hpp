#pragma once
#include <complex>
#include <cstdint>
#include <random>

namespace clifflab {

// All randomized checks draw from this generator so a seed pins the
// whole run.  mt19937_64 + explicit distributions; never std::rand.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double normal(double mean = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mean, sd)(eng_);
  }
  std::complex<double> normal_complex() { return {normal(), normal()}; }
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {  // inclusive
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(eng_);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace clifflab
