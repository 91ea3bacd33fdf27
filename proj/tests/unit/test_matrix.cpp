#include <doctest.h>

#include "appell/errors.hpp"
#include "appell/matrix.hpp"
#include "sampling.hpp"

using namespace appell;
using appell::test::rats;

namespace {

LTMatrix rows(std::initializer_list<RatVector> r) { return LTMatrix::from_rows(std::vector<RatVector>(r)); }

LTMatrix random_unit_lower(test::Sampler& s, std::size_t order) {
  LTMatrix a = LTMatrix::identity(order);
  for (std::size_t i = 1; i < order; ++i) {
    for (std::size_t j = 0; j < i; ++j) a.set(i, j, s.rat());
  }
  return a;
}

}  // namespace

TEST_CASE("creation matrix") {
  CHECK(creation_matrix(0) == rows({{0}}));
  CHECK(creation_matrix(2) == rows({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}}));
  const LTMatrix h3 = creation_matrix(3);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(h3(i, j) == (i == j + 1 ? Rat(static_cast<long>(i)) : Rat(0)));
    }
  }
}

TEST_CASE("generalized Pascal matrix") {
  CHECK(pascal_generalized(2, Rat(1)) == rows({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
  CHECK(pascal_generalized(2, Rat(0)) == LTMatrix::identity(3));
  CHECK(pascal_generalized(2, Rat(1, 2)) ==
        rows({{1, 0, 0}, {Rat(1, 2), 1, 0}, {Rat(1, 4), 1, 1}}));
}

TEST_CASE("diagonal matrices") {
  CHECK(diag_geometric(2, Rat(-1)) == diagonal_matrix(rats({1, -1, 1})));
  CHECK(diag_geometric(3, Rat(2)) == diagonal_matrix(rats({1, 2, 4, 8})));
  CHECK(diag_geometric(1, Rat(1)) == LTMatrix::identity(2));
  try {
    (void)diag_geometric(3, Rat(0));
    FAIL("expected ZeroScale");
  } catch (const AppellError& e) {
    CHECK(e.kind() == ErrorKind::ZeroScale);
  }
  CHECK(diag_factorial(3) == diagonal_matrix(rats({1, 1, 2, 6})));
  CHECK(diag_factorial(0) == rows({{1}}));
  CHECK(diag_factorial(4) == diagonal_matrix(rats({1, 1, 2, 6, 24})));
}

TEST_CASE("series of H") {
  CHECK(series_of_H(rats({1, 0, 0, 0}), 3) == LTMatrix::identity(4));
  CHECK(series_of_H(rats({1, 1, 1}), 2) == pascal_generalized(2, Rat(1)));
  const LTMatrix expected = rows({{1, 0, 0}, {Rat(-1, 2), 1, 0}, {Rat(1, 6), -1, 1}});
  CHECK(series_of_H(rats({1, Rat(-1, 2), Rat(1, 6)}), 2) == expected);
  CHECK(series_of_H_closed_form(rats({1, Rat(-1, 2), Rat(1, 6)}), 2) == expected);
  CHECK_THROWS_AS((void)series_of_H(rats({1, 2}), 2), AppellError);
  CHECK_THROWS_AS((void)series_of_H_closed_form(rats({1, 2, 3, 4}), 2), AppellError);
}

TEST_CASE("triangular inverse") {
  CHECK(lt_inverse(LTMatrix::identity(4)) == LTMatrix::identity(4));
  const LTMatrix a = rows({{2, 0}, {1, 2}});
  const LTMatrix inv = lt_inverse(a);
  CHECK(inv == rows({{Rat(1, 2), 0}, {Rat(-1, 4), Rat(1, 2)}}));
  CHECK(a * inv == LTMatrix::identity(2));

  const LTMatrix singular = rows({{1, 0, 0}, {1, 0, 0}, {1, 1, 1}});
  try {
    (void)lt_inverse(singular);
    FAIL("expected SingularMatrix");
  } catch (const AppellError& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 1);
  }
}

TEST_CASE("products") {
  const LTMatrix h = creation_matrix(2);
  LTMatrix hh(3);
  hh.set(2, 0, Rat(2));
  CHECK(h * h == hh);
  CHECK(mat_pow(h, 3).is_zero());
  CHECK(mat_pow(h, 0) == LTMatrix::identity(3));
  const RatVector v = rats({Rat(1, 2), -3, 7});
  CHECK(mat_vec(LTMatrix::identity(3), v) == v);
  CHECK_THROWS_AS((void)mat_mul(h, creation_matrix(3)), AppellError);
  CHECK_THROWS_AS((void)mat_vec(h, rats({1, 2})), AppellError);
}

TEST_CASE("lower-triangular structure is enforced") {
  LTMatrix a(3);
  CHECK_THROWS_AS(a.set(0, 1, Rat(1)), AppellError);
  CHECK_NOTHROW(a.set(0, 1, Rat(0)));
  CHECK_THROWS_AS((void)LTMatrix::from_rows({rats({1, 1}), rats({0, 1})}), AppellError);
  CHECK_THROWS_AS((void)LTMatrix::from_rows({rats({1}), rats({0, 1})}), AppellError);
  CHECK_THROWS_AS(LTMatrix(0), AppellError);
}

TEST_CASE("property: nilpotency of the creation matrix up to m = 32") {
  for (std::size_t m = 0; m <= 32; ++m) {
    CAPTURE(m);
    const LTMatrix h = creation_matrix(m);
    const auto s = static_cast<unsigned>(m + 1);
    CHECK(mat_pow(h, s).is_zero());
    CHECK(mat_pow(h, s + 1).is_zero());
    if (m > 0) CHECK_FALSE(mat_pow(h, s - 1).is_zero());
  }
}

TEST_CASE("property: Pascal group law and exponential identity") {
  test::Sampler s(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = static_cast<std::size_t>(trial % 12);
    const Rat x = s.rat();
    const Rat y = s.rat();
    CAPTURE(m);
    CHECK(pascal_generalized(m, x) * pascal_generalized(m, y) == pascal_generalized(m, x + y));
    RatVector powers(m + 1, Rat(1));
    for (std::size_t k = 1; k <= m; ++k) powers[k] = powers[k - 1] * x;
    CHECK(series_of_H(powers, m) == pascal_generalized(m, x));
  }
}

TEST_CASE("property: both series paths agree") {
  test::Sampler s(12);
  for (std::size_t m = 0; m <= 16; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      const RatVector c = s.vec(m + 1);
      CHECK(series_of_H(c, m) == series_of_H_closed_form(c, m));
    }
  }
}

TEST_CASE("property: P(-x) = D[-1] P(x) D[-1]") {
  test::Sampler s(13);
  for (std::size_t m = 0; m <= 12; ++m) {
    const Rat x = s.rat();
    const LTMatrix flip = diag_geometric(m, Rat(-1));
    CHECK(pascal_generalized(m, -x) == flip * pascal_generalized(m, x) * flip);
  }
}

TEST_CASE("property: triangular inverse round trip") {
  test::Sampler s(14);
  for (std::size_t m = 0; m <= 12; ++m) {
    const LTMatrix a = random_unit_lower(s, m + 1);
    const LTMatrix inv = lt_inverse(a);
    CHECK(a * inv == LTMatrix::identity(m + 1));
    CHECK(inv * a == LTMatrix::identity(m + 1));
  }
}
