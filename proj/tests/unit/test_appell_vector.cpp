#include <doctest.h>

#include "appell/appell_vector.hpp"
#include "appell/errors.hpp"
#include "appell/oracles.hpp"
#include "sampling.hpp"

using namespace appell;
using appell::test::rats;

namespace {

AppellVector av_of(FamilyKind kind, std::size_t m) {
  switch (kind) {
    case FamilyKind::LaguerreModified:
      return appell_vector(FamilySpec::laguerre_modified(Rat(-2, 3)), m);
    case FamilyKind::GeneralizedEuler:
      return appell_vector(FamilySpec::generalized_euler(Rat(3, 5)), m);
    case FamilyKind::Custom:
      return appell_vector(FamilySpec::custom(rats({Rat(1, 2), 3, -1, Rat(5, 4)})), m);
    default:
      return appell_vector(FamilySpec::simple(kind), m);
  }
}

std::vector<Rat> sample(test::Sampler& s, std::size_t n) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.rat());
  return out;
}

}  // namespace

TEST_CASE("Appell vector rows are the polynomial coefficients") {
  const AppellVector mono = av_of(FamilyKind::Monomial, 3);
  CHECK(evaluate(mono, Rat(3)) == rats({1, 3, 9, 27}));
  CHECK(av_of(FamilyKind::Bernoulli, 2).matrix().row(2) == rats({Rat(1, 6), -1, 1}));
  // Genocchi: G_2(x) = 2x - 1, degree 1 < 2
  CHECK(av_of(FamilyKind::Genocchi, 2).matrix().row(2) == rats({-1, 2, 0}));
}

TEST_CASE("monomial vector") {
  CHECK(monomial_vector(3, Rat(0)) == rats({1, 0, 0, 0}));
  CHECK(monomial_vector(2, Rat(-1, 2)) == rats({1, Rat(-1, 2), Rat(1, 4)}));
}

TEST_CASE("evaluate") {
  for (FamilyKind kind : all_family_kinds()) {
    const AppellVector av = av_of(kind, 6);
    CHECK(evaluate(av, Rat(0)) == av.transfer().coeffs);
  }
  // B_1(1/2) = 0, B_2(1/2) = 1/4 - 1/2 + 1/6
  CHECK(evaluate(av_of(FamilyKind::Bernoulli, 2), Rat(1, 2)) == rats({1, 0, Rat(-1, 12)}));
}

TEST_CASE("derivative") {
  CHECK(derivative(av_of(FamilyKind::Monomial, 2)).coefficients() == creation_matrix(2));
  const AppellVector b = av_of(FamilyKind::Bernoulli, 2);
  const LTMatrix db = derivative(b).coefficients();
  RatVector twice_b1 = b.matrix().row(1);
  for (auto& r : twice_b1) r *= Rat(2);
  CHECK(db.row(2) == twice_b1);
  // d/dx G_2 = 2 G_1 = 2
  const PolynomialVector dg = derivative(av_of(FamilyKind::Genocchi, 2));
  CHECK(dg.coefficients().row(2) == rats({2, 0, 0}));
  CHECK(dg.evaluate(Rat(17, 3))[2] == Rat(2));
}

TEST_CASE("translate") {
  const AppellVector b = av_of(FamilyKind::Bernoulli, 2);
  CHECK(translate(b, Rat(0), Rat(5, 7)) == evaluate(b, Rat(5, 7)));
  CHECK(translate(av_of(FamilyKind::Monomial, 2), Rat(1), Rat(1)) == rats({1, 2, 4}));
  const RatVector b_at_1 = translate(b, Rat(1), Rat(0));
  CHECK(b_at_1 == rats({1, Rat(1, 2), Rat(1, 6)}));
  CHECK(b_at_1 == diag_geometric(2, Rat(-1)) * evaluate(b, Rat(0)));
}

TEST_CASE("forward difference") {
  CHECK(forward_difference(av_of(FamilyKind::Monomial, 2), Rat(0)) == rats({0, 1, 1}));
  CHECK(forward_difference(av_of(FamilyKind::Bernoulli, 2), Rat(0)) == rats({0, 1, 0}));
  test::Sampler s(41);
  for (FamilyKind kind : all_family_kinds()) {
    const AppellVector av = av_of(kind, 8);
    const Rat x = s.rat();
    const RatVector a = evaluate(av, x + Rat(1));
    const RatVector b = evaluate(av, x);
    RatVector want(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) want[i] = a[i] - b[i];
    CHECK(forward_difference(av, x) == want);
  }
}

TEST_CASE("scale argument") {
  const AppellVector b = av_of(FamilyKind::Bernoulli, 2);
  for (ScaleRoute route : {ScaleRoute::Pascal, ScaleRoute::Diagonal, ScaleRoute::Direct}) {
    CHECK(scale_argument(b, Rat(1), Rat(3, 4), route) == evaluate(b, Rat(3, 4)));
    CHECK(scale_argument(av_of(FamilyKind::Monomial, 2), Rat(2), Rat(1), route) == rats({1, 2, 4}));
    CHECK(scale_argument(b, Rat(2), Rat(1, 2), route) == rats({1, Rat(1, 2), Rat(1, 6)}));
  }
  // a = 0 is fine on the Pascal route, ZeroScale on the diagonal one
  CHECK(scale_argument(b, Rat(0), Rat(3), ScaleRoute::Pascal) == evaluate(b, Rat(0)));
  try {
    (void)scale_argument(b, Rat(0), Rat(3), ScaleRoute::Diagonal);
    FAIL("expected ZeroScale");
  } catch (const AppellError& e) {
    CHECK(e.kind() == ErrorKind::ZeroScale);
  }
}

TEST_CASE("symmetry") {
  test::Sampler s(42);
  const std::vector<Rat> xs = sample(s, 20);
  CHECK(symmetry_holds(av_of(FamilyKind::Bernoulli, 12), Rat(1), xs));
  CHECK(symmetry_holds(av_of(FamilyKind::Euler, 12), Rat(1), xs));
  CHECK_FALSE(symmetry_holds(av_of(FamilyKind::Monomial, 12), Rat(1), xs));
  // even families are symmetric about h = 0
  CHECK(symmetry_holds(av_of(FamilyKind::HermiteMonic, 12), Rat(0), xs));
  CHECK_FALSE(symmetry_holds(av_of(FamilyKind::Bernoulli, 12), Rat(2), xs));
}

TEST_CASE("odd coefficients") {
  for (FamilyKind kind : {FamilyKind::HermiteMonic, FamilyKind::LegendreModified,
                          FamilyKind::ChebyshevFirstModified, FamilyKind::ChebyshevSecondModified}) {
    CHECK(odd_coeffs_vanish(FamilySpec::simple(kind), 16));
  }
  CHECK_FALSE(odd_coeffs_vanish(FamilySpec::simple(FamilyKind::Bernoulli), 16));
  CHECK(odd_coeffs_vanish(FamilySpec::simple(FamilyKind::Monomial), 16));
  CHECK_FALSE(odd_coeffs_vanish(FamilySpec::simple(FamilyKind::Genocchi), 4));
  CHECK(odd_coeffs_vanish(FamilySpec::custom(rats({2, 0, 5, 0, -1})), 4));
  CHECK_FALSE(odd_coeffs_vanish(FamilySpec::custom(rats({2, 0, 5, 1})), 4));
}

TEST_CASE("general recurrence") {
  CHECK(recurrence_eval(FamilySpec::simple(FamilyKind::Monomial), 3, Rat(2)) == rats({1, 2, 4, 8}));
  CHECK(recurrence_eval(FamilySpec::simple(FamilyKind::Bernoulli), 2, Rat(0)) ==
        rats({1, Rat(-1, 2), Rat(1, 6)}));
  const auto euler = FamilySpec::simple(FamilyKind::Euler);
  CHECK(recurrence_eval(euler, 2, Rat(1)) == evaluate(appell_vector(euler, 2), Rat(1)));
  try {
    (void)recurrence_eval(FamilySpec::simple(FamilyKind::Genocchi), 3, Rat(1));
    FAIL("expected NotInvertible");
  } catch (const AppellError& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("combine") {
  const AppellVector b = av_of(FamilyKind::Bernoulli, 5);
  const AppellVector e = av_of(FamilyKind::Euler, 5);
  CHECK(combine({b, e}, {Rat(1), Rat(0)}).vector.matrix() == b.matrix());
  const CombineResult half = combine({b, b}, {Rat(1, 2), Rat(1, 2)});
  CHECK(half.vector.matrix() == b.matrix());
  CHECK_FALSE(half.degenerate);

  const CombineResult diff =
      combine({av_of(FamilyKind::Bernoulli, 1), av_of(FamilyKind::Euler, 1)}, {Rat(1), Rat(-1)});
  CHECK(diff.vector.transfer().coeffs == rats({0, 0}));
  CHECK(diff.degenerate);

  // still satisfies the Appell ODE
  const CombineResult mix = combine({b, e}, {Rat(2, 3), Rat(-5)});
  CHECK(derivative(mix.vector).coefficients() == creation_matrix(5) * mix.vector.matrix());

  CHECK_THROWS_AS((void)combine({b, av_of(FamilyKind::Euler, 4)}, {Rat(1), Rat(1)}), AppellError);
  CHECK_THROWS_AS((void)combine({b}, {Rat(1), Rat(1)}), AppellError);
}

TEST_CASE("compose") {
  const std::size_t m = 12;
  const AppellVector mono = av_of(FamilyKind::Monomial, m);
  const AppellVector b = av_of(FamilyKind::Bernoulli, m);
  const AppellVector e = av_of(FamilyKind::Euler, m);
  CHECK(compose(b, mono).matrix() == b.matrix());
  CHECK(compose(b, b).matrix() == av_of(FamilyKind::Bernoulli2Iterated, m).matrix());
  CHECK(compose(b, e).matrix() == av_of(FamilyKind::BernoulliEulerMixed, m).matrix());
  CHECK(compose(b, e).matrix() == compose(e, b).matrix());
  const AppellVector w = compose(av_of(FamilyKind::HermiteMonic, m), e);
  CHECK(derivative(w).coefficients() == creation_matrix(m) * w.matrix());
  CHECK_THROWS_AS((void)compose(b, av_of(FamilyKind::Euler, 3)), AppellError);
}

TEST_CASE("classical reconstructions") {
  CHECK(classical_hermite(2, Rat(0)) == rats({1, 0, -2}));
  CHECK(classical_hermite(1, Rat(1)) == rats({1, 2}));
  CHECK(classical_hermite(2, Rat(1)) == rats({1, 2, 2}));

  const Rat x(7, 3);
  CHECK(classical_laguerre(1, Rat(0), x).generalized == rats({1, Rat(1) - x}));
  CHECK(classical_laguerre(2, Rat(0), Rat(0)).generalized == rats({1, 1, 1}));
  CHECK(classical_laguerre(2, Rat(1), Rat(0)).generalized == rats({1, 2, 3}));

  CHECK(classical_legendre(2, Rat(0)) == rats({1, 0, Rat(-1, 2)}));
  CHECK(classical_chebyshev1(3, Rat(1, 2)) == rats({1, Rat(1, 2), Rat(-1, 2), -1}));
  CHECK(classical_chebyshev2(2, Rat(1, 2)) == rats({1, 1, 0}));

  for (const Rat& bad : {Rat(1), Rat(-1), Rat(3, 2)}) {
    try {
      (void)classical_legendre(3, bad);
      FAIL("expected DomainError");
    } catch (const AppellError& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
    }
    CHECK_THROWS_AS((void)classical_chebyshev1(3, bad), AppellError);
    CHECK_THROWS_AS((void)classical_chebyshev2(3, bad), AppellError);
  }
}

TEST_CASE("Laguerre ladder relation L(x) = P(-1) Lcal(x)") {
  test::Sampler s(43);
  for (int trial = 0; trial < 5; ++trial) {
    const Rat alpha = s.rat();
    const Rat x = s.rat();
    const LaguerreValues v = classical_laguerre(8, alpha, x);
    CHECK(v.ladder == pascal_generalized(8, Rat(-1)) * v.generalized);
    for (std::size_t n = 0; n <= 8; ++n) {
      CHECK(v.ladder[n] ==
            oracles::three_term(oracles::ClassicalFamily::Laguerre, n, x,
                                alpha - Rat(static_cast<long>(n)))[n]);
    }
  }
}

TEST_CASE("property: ODE, translation, multiplication and recurrence for every family") {
  test::Sampler s(44);
  for (FamilyKind kind : all_family_kinds()) {
    CAPTURE(family_name(kind));
    for (std::size_t m = 0; m <= 16; m += 4) {
      const AppellVector av = av_of(kind, m);
      CHECK(derivative(av).coefficients() == creation_matrix(m) * av.matrix());
    }
    const AppellVector av = av_of(kind, 10);
    for (int trial = 0; trial < 10; ++trial) {
      const Rat x = s.rat();
      const Rat y = s.rat();
      const Rat a = s.nonzero();
      CHECK(translate(av, y, x) == evaluate(av, x + y));
      const RatVector direct = scale_argument(av, a, x, ScaleRoute::Direct);
      CHECK(scale_argument(av, a, x, ScaleRoute::Pascal) == direct);
      CHECK(scale_argument(av, a, x, ScaleRoute::Diagonal) == direct);
      if (av.transfer().invertible()) {
        CHECK(recurrence_eval_from_gamma(gamma_from_coefficients(av.transfer().coeffs), x) ==
              evaluate(av, x));
      }
    }
  }
}

TEST_CASE("property: even families reflect, others do not") {
  test::Sampler s(45);
  for (FamilyKind kind : all_family_kinds()) {
    const AppellVector av = av_of(kind, 10);
    const LTMatrix flip = diag_geometric(10, Rat(-1));
    const Rat x = s.nonzero();
    const bool reflects = evaluate(av, -x) == flip * evaluate(av, x);
    CAPTURE(family_name(kind));
    CHECK(reflects == (is_even_family(kind) || kind == FamilyKind::Monomial));
  }
}

TEST_CASE("property: classical reconstructions match the recurrences") {
  test::Sampler s(46);
  using oracles::ClassicalFamily;
  for (int trial = 0; trial < 20; ++trial) {
    const Rat x = s.rat();
    const Rat u = s.open_unit();
    const Rat alpha = s.rat();
    CHECK(classical_hermite(16, x) == oracles::three_term(ClassicalFamily::Hermite, 16, x));
    CHECK(classical_laguerre(16, alpha, x).generalized ==
          oracles::three_term(ClassicalFamily::Laguerre, 16, x, alpha));
    CHECK(classical_legendre(16, u) == oracles::three_term(ClassicalFamily::Legendre, 16, u));
    CHECK(classical_chebyshev1(16, u) == oracles::three_term(ClassicalFamily::Chebyshev1, 16, u));
    CHECK(classical_chebyshev2(16, u) == oracles::three_term(ClassicalFamily::Chebyshev2, 16, u));
  }
}
