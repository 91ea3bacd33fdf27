#include "appell/appell_vector.hpp"

#include <string>

#include "appell/errors.hpp"

namespace appell {

namespace {

void require_same_degree(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw AppellError(ErrorKind::DimensionMismatch, std::string(op) + ": degree bound " +
                                                        std::to_string(a) + " vs " +
                                                        std::to_string(b));
  }
}

// Entry (i,j) of D[s] M D[s]^{-1} is M_ij s^(i-j). For an even family only
// even i-j carry nonzero entries, so s^(i-j) = (1 - x^2)^((i-j)/2).
LTMatrix conjugate_even(const LTMatrix& m, const Rat& x) {
  if (Rat(1) <= x * x) {
    throw AppellError(ErrorKind::DomainError,
                      "classical reconstruction needs x in (-1, 1), got " + x.str());
  }
  const Rat s2 = Rat(1) - x * x;
  LTMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::size_t d = i - j;
      if (d % 2 == 1) {
        if (!m(i, j).is_zero()) {
          throw AppellError(ErrorKind::IdentityViolation,
                            "odd-offset entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") of an even family is nonzero");
        }
        continue;
      }
      out.set(i, j, m(i, j) * s2.pow(static_cast<unsigned>(d / 2)));
    }
  }
  return out;
}

RatVector classical_even(FamilyKind kind, std::size_t m, const Rat& x) {
  const TransferMatrix tm = transfer_matrix(FamilySpec::simple(kind), m);
  return conjugate_even(tm.matrix, x) * monomial_vector(m, x);
}

}  // namespace

RatVector monomial_vector(std::size_t m, const Rat& x) {
  RatVector out(m + 1);
  out[0] = Rat(1);
  for (std::size_t k = 1; k <= m; ++k) out[k] = out[k - 1] * x;
  return out;
}

RatVector PolynomialVector::evaluate(const Rat& x) const {
  return coefficients_ * monomial_vector(degree_bound(), x);
}

AppellVector appell_vector(const FamilySpec& spec, std::size_t m) {
  return AppellVector(transfer_matrix(spec, m));
}

RatVector evaluate(const AppellVector& av, const Rat& x) {
  return av.matrix() * monomial_vector(av.degree_bound(), x);
}

PolynomialVector derivative(const AppellVector& av) {
  const LTMatrix& m = av.matrix();
  LTMatrix d(m.order());
  for (std::size_t n = 0; n < m.order(); ++n) {
    for (std::size_t k = 1; k <= n; ++k) d.set(n, k - 1, Rat(static_cast<long>(k)) * m(n, k));
  }
  return PolynomialVector(std::move(d));
}

RatVector translate(const AppellVector& av, const Rat& y, const Rat& x) {
  return pascal_generalized(av.degree_bound(), y) * evaluate(av, x);
}

RatVector forward_difference(const AppellVector& av, const Rat& x) {
  const std::size_t m = av.degree_bound();
  const LTMatrix step = pascal_generalized(m, Rat(1)) - LTMatrix::identity(m + 1);
  return step * evaluate(av, x);
}

RatVector scale_argument(const AppellVector& av, const Rat& a, const Rat& x, ScaleRoute route) {
  const std::size_t m = av.degree_bound();
  switch (route) {
    case ScaleRoute::Pascal:
      return pascal_generalized(m, (a - Rat(1)) * x) * evaluate(av, x);
    case ScaleRoute::Diagonal:
      return av.matrix() * (diag_geometric(m, a) * monomial_vector(m, x));
    case ScaleRoute::Direct:
      return evaluate(av, a * x);
  }
  throw AppellError(ErrorKind::InvalidFamily, "unknown scale route");
}

bool symmetry_holds(const AppellVector& av, const Rat& h, const std::vector<Rat>& sample_xs) {
  const LTMatrix flip = diag_geometric(av.degree_bound(), Rat(-1));
  if (evaluate(av, h) != flip * evaluate(av, Rat(0))) return false;
  for (const Rat& x : sample_xs) {
    if (evaluate(av, h - x) != flip * evaluate(av, x)) {
      throw AppellError(ErrorKind::IdentityViolation,
                        "p(h - x) != D[-1] p(x) at h=" + h.str() + ", x=" + x.str());
    }
  }
  return true;
}

bool odd_coeffs_vanish(const RatVector& coeffs) {
  for (std::size_t n = 1; n < coeffs.size(); n += 2) {
    if (!coeffs[n].is_zero()) return false;
  }
  if (coeffs.front().is_zero()) return true;
  const RatVector gamma = gamma_from_coefficients(coeffs);
  for (std::size_t n = 1; n < gamma.size(); n += 2) {
    if (!gamma[n].is_zero()) {
      throw AppellError(ErrorKind::IdentityViolation,
                        "odd c_n vanish but gamma_" + std::to_string(n) + " = " + gamma[n].str());
    }
  }
  return true;
}

bool odd_coeffs_vanish(const FamilySpec& spec, std::size_t m) {
  return odd_coeffs_vanish(taylor_coefficients(spec, m));
}

RatVector recurrence_eval_from_gamma(const RatVector& gamma, const Rat& x) {
  if (gamma.empty() || gamma.front().is_zero()) {
    throw AppellError(ErrorKind::NotInvertible, "recurrence needs gamma_0 != 0");
  }
  const RatVector xi = monomial_vector(gamma.size() - 1, x);
  RatVector p(gamma.size());
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    Rat acc = xi[n];
    for (std::size_t k = 0; k < n; ++k) {
      acc -= binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * gamma[n - k] * p[k];
    }
    p[n] = acc / gamma[0];
  }
  return p;
}

RatVector recurrence_eval(const FamilySpec& spec, std::size_t m, const Rat& x) {
  return recurrence_eval_from_gamma(gamma_coefficients(spec, m), x);
}

CombineResult combine(const std::vector<AppellVector>& avs, const std::vector<Rat>& weights) {
  if (avs.empty() || avs.size() != weights.size()) {
    throw AppellError(ErrorKind::DimensionMismatch,
                      "combine needs one weight per vector and at least one vector");
  }
  const std::size_t m = avs.front().degree_bound();
  LTMatrix sum(m + 1);
  std::string label = "combine(";
  for (std::size_t i = 0; i < avs.size(); ++i) {
    require_same_degree(m, avs[i].degree_bound(), "combine");
    sum = sum + weights[i] * avs[i].matrix();
    if (i) label += " + ";
    label += weights[i].str() + "*" + avs[i].transfer().label;
  }
  label += ")";
  auto tm = TransferMatrix::from_matrix(std::move(sum), std::move(label));
  const bool degenerate = !tm.invertible();
  return CombineResult{AppellVector(std::move(tm)), degenerate};
}

AppellVector compose(const AppellVector& outer, const AppellVector& inner) {
  require_same_degree(outer.degree_bound(), inner.degree_bound(), "compose");
  return AppellVector(TransferMatrix::from_matrix(
      outer.matrix() * inner.matrix(),
      "compose(" + outer.transfer().label + ", " + inner.transfer().label + ")"));
}

RatVector classical_hermite(std::size_t m, const Rat& x) {
  const AppellVector av = appell_vector(FamilySpec::simple(FamilyKind::HermiteMonic), m);
  return diag_geometric(m, Rat(2)) * evaluate(av, x);
}

LaguerreValues classical_laguerre(std::size_t m, const Rat& alpha, const Rat& x) {
  const AppellVector av = appell_vector(FamilySpec::laguerre_modified(alpha), m);
  // L(x) = D_f^{-1} D[-1] (I - H)^alpha xi(x)
  RatVector ladder = lt_inverse(diag_factorial(m)) * (diag_geometric(m, Rat(-1)) * evaluate(av, x));
  // L(x) = P(-1) Lcal(x), and P(-1)^{-1} = P(1)
  RatVector generalized = pascal_generalized(m, Rat(1)) * ladder;
  return LaguerreValues{std::move(generalized), std::move(ladder)};
}

RatVector classical_legendre(std::size_t m, const Rat& x) {
  return classical_even(FamilyKind::LegendreModified, m, x);
}

RatVector classical_chebyshev1(std::size_t m, const Rat& x) {
  return classical_even(FamilyKind::ChebyshevFirstModified, m, x);
}

RatVector classical_chebyshev2(std::size_t m, const Rat& x) {
  RatVector u = classical_even(FamilyKind::ChebyshevSecondModified, m, x);
  // D_{m+1} = diag(1, 2, ..., m+1)
  for (std::size_t n = 0; n < u.size(); ++n) u[n] *= Rat(static_cast<long>(n + 1));
  return u;
}

}  // namespace appell
