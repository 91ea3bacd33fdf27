#include "appell/oracles.hpp"

#include <gmpxx.h>

namespace appell::oracles {

namespace {

// Deliberately separate from the library's binomial helper.
mpz_class choose(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Rat integer(const mpz_class& z) { return Rat(mpq_class(z)); }

}  // namespace

RatVector bernoulli_numbers(std::size_t m) {
  RatVector b(m + 1);
  b[0] = Rat(1);
  for (std::size_t n = 1; n <= m; ++n) {
    // C(n+1, n) B_n = -sum_{k<n} C(n+1, k) B_k
    Rat acc;
    for (std::size_t k = 0; k < n; ++k) acc += integer(choose(n + 1, k)) * b[k];
    b[n] = -acc / Rat(static_cast<long>(n + 1));
  }
  return b;
}

RatVector genocchi_numbers(std::size_t m) {
  const RatVector b = bernoulli_numbers(m);
  RatVector g(m + 1);
  mpz_class two_pow = 1;
  for (std::size_t n = 0; n <= m; ++n) {
    g[n] = Rat(2) * (Rat(1) - integer(two_pow)) * b[n];
    two_pow *= 2;
  }
  return g;
}

RatVector three_term(ClassicalFamily family, std::size_t m, const Rat& x, const Rat& alpha) {
  RatVector v(m + 1);
  v[0] = Rat(1);
  if (m == 0) return v;
  const Rat two_x = Rat(2) * x;
  switch (family) {
    case ClassicalFamily::Hermite:
      v[1] = two_x;
      for (std::size_t n = 1; n < m; ++n) {
        v[n + 1] = two_x * v[n] - Rat(2 * static_cast<long>(n)) * v[n - 1];
      }
      break;
    case ClassicalFamily::Legendre:
      v[1] = x;
      for (std::size_t n = 1; n < m; ++n) {
        const long nn = static_cast<long>(n);
        v[n + 1] = (Rat(2 * nn + 1) * x * v[n] - Rat(nn) * v[n - 1]) / Rat(nn + 1);
      }
      break;
    case ClassicalFamily::Chebyshev1:
      v[1] = x;
      for (std::size_t n = 1; n < m; ++n) v[n + 1] = two_x * v[n] - v[n - 1];
      break;
    case ClassicalFamily::Chebyshev2:
      v[1] = two_x;
      for (std::size_t n = 1; n < m; ++n) v[n + 1] = two_x * v[n] - v[n - 1];
      break;
    case ClassicalFamily::Laguerre:
      v[1] = Rat(1) + alpha - x;
      for (std::size_t n = 1; n < m; ++n) {
        const long nn = static_cast<long>(n);
        v[n + 1] = ((Rat(2 * nn + 1) + alpha - x) * v[n] - (Rat(nn) + alpha) * v[n - 1]) /
                   Rat(nn + 1);
      }
      break;
  }
  return v;
}

RatVector euler_poly_values(std::size_t m, const Rat& x) {
  // numerator a_n = 2 x^n / n!, denominator b_n = 1/n! (+1 at n = 0)
  RatVector a(m + 1);
  RatVector b(m + 1);
  Rat inv_fact(1);
  Rat x_pow(1);
  for (std::size_t n = 0; n <= m; ++n) {
    if (n > 0) {
      inv_fact /= Rat(static_cast<long>(n));
      x_pow *= x;
    }
    a[n] = Rat(2) * x_pow * inv_fact;
    b[n] = inv_fact;
  }
  b[0] += Rat(1);
  // q = a / b, term by term
  RatVector q(m + 1);
  for (std::size_t n = 0; n <= m; ++n) {
    Rat acc = a[n];
    for (std::size_t k = 0; k < n; ++k) acc -= q[k] * b[n - k];
    q[n] = acc / b[0];
  }
  RatVector e(m + 1);
  mpz_class fact = 1;
  for (std::size_t n = 0; n <= m; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    e[n] = q[n] * integer(fact);
  }
  return e;
}

void OracleReport::check(const Rat& point, const RatVector& expected, const RatVector& actual) {
  checked_points.push_back(point);
  if (first_mismatch) return;
  if (expected.size() != actual.size()) {
    pass = false;
    first_mismatch = "length " + std::to_string(actual.size()) + " vs expected " +
                     std::to_string(expected.size()) + " at x=" + point.str();
    return;
  }
  for (std::size_t n = 0; n < expected.size(); ++n) {
    if (expected[n] != actual[n]) {
      pass = false;
      first_mismatch = "x=" + point.str() + " n=" + std::to_string(n) + ": got " +
                       actual[n].str() + ", oracle " + expected[n].str();
      return;
    }
  }
}

}  // namespace appell::oracles
