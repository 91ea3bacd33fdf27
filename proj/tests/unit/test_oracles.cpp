#include <doctest.h>

#include "appell/oracles.hpp"
#include "sampling.hpp"

using namespace appell;
using appell::oracles::ClassicalFamily;
using appell::test::rats;

TEST_CASE("Bernoulli numbers") {
  CHECK(oracles::bernoulli_numbers(2) == rats({1, Rat(-1, 2), Rat(1, 6)}));
  CHECK(oracles::bernoulli_numbers(3)[3] == Rat(0));
  CHECK(oracles::bernoulli_numbers(4)[4] == Rat(-1, 30));
  CHECK(oracles::bernoulli_numbers(12)[12] == Rat(-691, 2730));
}

TEST_CASE("Genocchi numbers") {
  CHECK(oracles::genocchi_numbers(2) == rats({0, 1, -1}));
  const RatVector g4 = oracles::genocchi_numbers(4);
  CHECK(g4[3] == Rat(0));
  CHECK(g4[4] == Rat(1));
  CHECK(oracles::genocchi_numbers(0) == rats({0}));
  CHECK(oracles::genocchi_numbers(6)[6] == Rat(-3));
}

TEST_CASE("three-term recurrences") {
  CHECK(oracles::three_term(ClassicalFamily::Chebyshev1, 3, Rat(1)) == rats({1, 1, 1, 1}));
  CHECK(oracles::three_term(ClassicalFamily::Legendre, 2, Rat(1)) == rats({1, 1, 1}));
  CHECK(oracles::three_term(ClassicalFamily::Hermite, 2, Rat(0)) == rats({1, 0, -2}));
  CHECK(oracles::three_term(ClassicalFamily::Chebyshev2, 3, Rat(1)) == rats({1, 2, 3, 4}));
  CHECK(oracles::three_term(ClassicalFamily::Laguerre, 2, Rat(0), Rat(1)) == rats({1, 2, 3}));
  CHECK(oracles::three_term(ClassicalFamily::Hermite, 0, Rat(5)) == rats({1}));
  // L_2(x) = (x^2 - 4x + 2)/2 at x = 1: -1/2
  CHECK(oracles::three_term(ClassicalFamily::Laguerre, 2, Rat(1))[2] == Rat(-1, 2));
}

TEST_CASE("Euler polynomial values by series division") {
  CHECK(oracles::euler_poly_values(3, Rat(1, 2))[1] == Rat(0));
  CHECK(oracles::euler_poly_values(2, Rat(0)) == rats({1, Rat(-1, 2), 0}));
  CHECK(oracles::euler_poly_values(1, Rat(1)) == rats({1, Rat(1, 2)}));
  // E_3(x) = x^3 - 3x^2/2 + 1/4
  CHECK(oracles::euler_poly_values(3, Rat(2))[3] == Rat(8) - Rat(6) + Rat(1, 4));
}

TEST_CASE("Euler values satisfy E_n(x+1) + E_n(x) = 2 x^n") {
  test::Sampler s(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Rat x = s.rat();
    const RatVector a = oracles::euler_poly_values(10, x);
    const RatVector b = oracles::euler_poly_values(10, x + Rat(1));
    for (unsigned n = 0; n <= 10; ++n) CHECK(a[n] + b[n] == Rat(2) * x.pow(n));
  }
}

TEST_CASE("oracle report keeps the first mismatch") {
  oracles::OracleReport report{"bernoulli", 2, {}, true, std::nullopt};
  report.check(Rat(0), rats({1, 2}), rats({1, 2}));
  CHECK(report.pass);
  report.check(Rat(1, 2), rats({1, 2}), rats({1, 3}));
  report.check(Rat(1), rats({1, 2}), rats({0, 2}));
  CHECK_FALSE(report.pass);
  CHECK(report.checked_points.size() == 3);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(report.first_mismatch->find("x=1/2 n=1") != std::string::npos);
}
