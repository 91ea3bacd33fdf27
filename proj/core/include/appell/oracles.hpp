#pragma once

// Independent classical implementations used only to cross-check the
// matrix constructions. Nothing here calls into the transfer-matrix code.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "appell/rat.hpp"

namespace appell::oracles {

/// B_0..B_m from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1.
RatVector bernoulli_numbers(std::size_t m);

/// G_n = 2 (1 - 2^n) B_n.
RatVector genocchi_numbers(std::size_t m);

enum class ClassicalFamily { Hermite, Legendre, Chebyshev1, Chebyshev2, Laguerre };

/// Values of the classical polynomials by their three-term recurrences.
/// `alpha` is used only for Laguerre (L_n^(alpha)).
RatVector three_term(ClassicalFamily family, std::size_t m, const Rat& x,
                     const Rat& alpha = Rat(0));

/// E_0(x)..E_m(x) by truncated power-series division of 2 e^{xt} by e^t + 1.
RatVector euler_poly_values(std::size_t m, const Rat& x);

/// Outcome of comparing a matrix-route vector against an oracle vector.
struct OracleReport {
  std::string family;
  std::size_t m = 0;
  std::vector<Rat> checked_points;
  bool pass = true;
  /// First mismatch: point and entry index, with both values.
  std::optional<std::string> first_mismatch;

  /// Records one comparison; keeps the first mismatch only.
  void check(const Rat& point, const RatVector& expected, const RatVector& actual);
};

}  // namespace appell::oracles
