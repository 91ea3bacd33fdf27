#pragma once

#include <random>

#include "appell/rat.hpp"

namespace appell::test {

// Small random rationals for property checks; independent of the verify
// module's sampler.
class Sampler {
 public:
  explicit Sampler(unsigned seed) : engine_(seed) {}

  Rat rat() {
    return Rat(std::uniform_int_distribution<long>(-99, 99)(engine_),
               std::uniform_int_distribution<long>(1, 20)(engine_));
  }
  Rat nonzero() {
    for (;;) {
      Rat r = rat();
      if (!r.is_zero()) return r;
    }
  }
  Rat open_unit() {
    const long den = std::uniform_int_distribution<long>(2, 20)(engine_);
    return Rat(std::uniform_int_distribution<long>(-(den - 1), den - 1)(engine_), den);
  }
  RatVector vec(std::size_t n) {
    RatVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rat());
    return v;
  }

 private:
  std::mt19937 engine_;
};

inline RatVector rats(std::initializer_list<Rat> xs) { return RatVector(xs); }

}  // namespace appell::test
