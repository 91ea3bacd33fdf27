#pragma once

#include <cstddef>
#include <vector>

#include "appell/families.hpp"
#include "appell/matrix.hpp"
#include "appell/rat.hpp"

namespace appell {

/// xi(x) = (1, x, ..., x^m); entry 0 is 1 even at x = 0.
RatVector monomial_vector(std::size_t m, const Rat& x);

/// A vector of polynomials p_0..p_m stored as coefficient rows:
/// row n, column k holds the coefficient of x^k in p_n.
class PolynomialVector {
 public:
  explicit PolynomialVector(LTMatrix coefficients) : coefficients_(std::move(coefficients)) {}

  const LTMatrix& coefficients() const { return coefficients_; }
  std::size_t degree_bound() const { return coefficients_.degree_bound(); }
  RatVector evaluate(const Rat& x) const;

 private:
  LTMatrix coefficients_;
};

/// p(x) = M xi(x). Row n of M is the coefficient row of p_n.
class AppellVector {
 public:
  explicit AppellVector(TransferMatrix tm) : tm_(std::move(tm)) {}

  const TransferMatrix& transfer() const { return tm_; }
  const LTMatrix& matrix() const { return tm_.matrix; }
  std::size_t degree_bound() const { return tm_.degree_bound(); }
  PolynomialVector polynomials() const { return PolynomialVector(tm_.matrix); }

 private:
  TransferMatrix tm_;
};

AppellVector appell_vector(const FamilySpec& spec, std::size_t m);

RatVector evaluate(const AppellVector& av, const Rat& x);

/// Term-by-term derivative of each p_n. For an Appell vector the resulting
/// coefficient matrix equals H M.
PolynomialVector derivative(const AppellVector& av);

/// P(y) p(x), which equals p(x + y).
RatVector translate(const AppellVector& av, const Rat& y, const Rat& x);

/// (P - I) p(x) = p(x + 1) - p(x).
RatVector forward_difference(const AppellVector& av, const Rat& x);

enum class ScaleRoute {
  Pascal,    ///< P((a-1)x) p(x)
  Diagonal,  ///< M D[a] xi(x); a = 0 is a ZeroScale error
  Direct,    ///< evaluate at a*x
};

/// p(a x) computed along the chosen route.
RatVector scale_argument(const AppellVector& av, const Rat& a, const Rat& x,
                         ScaleRoute route = ScaleRoute::Pascal);

/// True iff p(h) = D[-1] p(0). When true, also checks p(h - x) = D[-1] p(x)
/// at every sample and throws IdentityViolation if any fails.
bool symmetry_holds(const AppellVector& av, const Rat& h, const std::vector<Rat>& sample_xs);

/// True iff every odd-index c_n vanishes. When true and c_0 != 0 the odd
/// gamma_n must vanish as well; IdentityViolation otherwise.
bool odd_coeffs_vanish(const FamilySpec& spec, std::size_t m);
bool odd_coeffs_vanish(const RatVector& coeffs);

/// p_0(x)..p_m(x) from the gamma sequence alone:
///   p_n(x) = (x^n - sum_{k<n} C(n,k) gamma_{n-k} p_k(x)) / gamma_0.
/// Throws NotInvertible for c_0 = 0.
RatVector recurrence_eval(const FamilySpec& spec, std::size_t m, const Rat& x);
RatVector recurrence_eval_from_gamma(const RatVector& gamma, const Rat& x);

struct CombineResult {
  AppellVector vector;
  /// c_0 of the combination vanished; the result satisfies the Appell ODE but
  /// its degrees fall short (Appell only in the weak sense).
  bool degenerate;
};

/// sum_i weights[i] * avs[i]. Throws DimensionMismatch on differing m or
/// mismatched list lengths.
CombineResult combine(const std::vector<AppellVector>& avs, const std::vector<Rat>& weights);

/// Substitutes u_k(x) for x^k in each outer polynomial: transfer matrix
/// M_outer M_inner.
AppellVector compose(const AppellVector& outer, const AppellVector& inner);

/// Classical Hermite H_0(x)..H_m(x) = D[2] M xi(x).
RatVector classical_hermite(std::size_t m, const Rat& x);

struct LaguerreValues {
  /// L_n^(alpha)(x), n = 0..m
  RatVector generalized;
  /// L_n^(alpha-n)(x), n = 0..m; equals P(-1) applied to `generalized`.
  RatVector ladder;
};

LaguerreValues classical_laguerre(std::size_t m, const Rat& alpha, const Rat& x);

/// Classical Legendre / Chebyshev values for x in (-1, 1). The conjugation
/// by D[sqrt(1-x^2)] is carried out through (1-x^2)^((i-j)/2), which is
/// rational because only even i-j occur. DomainError when x^2 >= 1.
RatVector classical_legendre(std::size_t m, const Rat& x);
RatVector classical_chebyshev1(std::size_t m, const Rat& x);
RatVector classical_chebyshev2(std::size_t m, const Rat& x);

}  // namespace appell
