#include "appell/families.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "appell/errors.hpp"

namespace appell {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 14> kNames{{
    {FamilyKind::Monomial, "monomial"},
    {FamilyKind::Bernoulli, "bernoulli"},
    {FamilyKind::Euler, "euler"},
    {FamilyKind::HermiteMonic, "hermite-monic"},
    {FamilyKind::LaguerreModified, "laguerre-modified"},
    {FamilyKind::LegendreModified, "legendre-modified"},
    {FamilyKind::ChebyshevFirstModified, "chebyshev1-modified"},
    {FamilyKind::ChebyshevSecondModified, "chebyshev2-modified"},
    {FamilyKind::Genocchi, "genocchi"},
    {FamilyKind::Bernoulli2Iterated, "bernoulli-2it"},
    {FamilyKind::Euler2Iterated, "euler-2it"},
    {FamilyKind::BernoulliEulerMixed, "bernoulli-euler"},
    {FamilyKind::GeneralizedEuler, "generalized-euler"},
    {FamilyKind::Custom, "custom"},
}};

// Weights w_n of sum_n w_n H^n for the even families, only n = 2k is nonzero.
template <typename EvenWeight>
RatVector even_weights(std::size_t m, EvenWeight weight_of_k) {
  RatVector w(m + 1);
  for (std::size_t k = 0; 2 * k <= m; ++k) w[2 * k] = weight_of_k(static_cast<unsigned>(k));
  return w;
}

Rat alternating(unsigned k) { return (k % 2 == 0) ? Rat(1) : Rat(-1); }

// E_{1,2}(H) = sum_n H^n / (n+1)!
LTMatrix mittag_leffler_12(std::size_t m) {
  RatVector w(m + 1);
  for (std::size_t n = 0; n <= m; ++n) w[n] = factorial(static_cast<unsigned>(n + 1)).reciprocal();
  return polynomial_in_H(m, w);
}

LTMatrix pascal_plus_identity(std::size_t m) {
  return pascal_generalized(m, Rat(1)) + LTMatrix::identity(m + 1);
}

LTMatrix build_matrix(const FamilySpec& spec, std::size_t m) {
  const std::size_t order = m + 1;
  switch (spec.kind()) {
    case FamilyKind::Monomial:
      return LTMatrix::identity(order);
    case FamilyKind::Bernoulli:
      return lt_inverse(mittag_leffler_12(m));
    case FamilyKind::Euler:
      return Rat(2) * lt_inverse(pascal_plus_identity(m));
    case FamilyKind::HermiteMonic:
      // e^{-H^2/4}
      return polynomial_in_H(m, even_weights(m, [](unsigned k) {
                               return alternating(k) / (Rat(4).pow(k) * factorial(k));
                             }));
    case FamilyKind::LaguerreModified: {
      // (I - H)^alpha = sum_n C(alpha, n) (-H)^n
      RatVector w(order);
      for (std::size_t n = 0; n <= m; ++n) {
        const auto nn = static_cast<unsigned>(n);
        w[n] = alternating(nn) * generalized_binomial(*spec.alpha(), nn);
      }
      return polynomial_in_H(m, w);
    }
    case FamilyKind::LegendreModified:
      // J_0(H)
      return polynomial_in_H(m, even_weights(m, [](unsigned k) {
                               const Rat f = factorial(k);
                               return alternating(k) / (Rat(4).pow(k) * f * f);
                             }));
    case FamilyKind::ChebyshevFirstModified:
      // cos H
      return polynomial_in_H(
          m, even_weights(m, [](unsigned k) { return alternating(k) / factorial(2 * k); }));
    case FamilyKind::ChebyshevSecondModified:
      // sinc H
      return polynomial_in_H(
          m, even_weights(m, [](unsigned k) { return alternating(k) / factorial(2 * k + 1); }));
    case FamilyKind::Genocchi:
      return Rat(2) * (creation_matrix(m) * lt_inverse(pascal_plus_identity(m)));
    case FamilyKind::Bernoulli2Iterated: {
      const LTMatrix e = mittag_leffler_12(m);
      return lt_inverse(e * e);
    }
    case FamilyKind::Euler2Iterated: {
      const LTMatrix q = pascal_plus_identity(m);
      return Rat(4) * lt_inverse(q * q);
    }
    case FamilyKind::BernoulliEulerMixed:
      return Rat(2) * lt_inverse(pascal_plus_identity(m) * mittag_leffler_12(m));
    case FamilyKind::GeneralizedEuler: {
      const Rat& g = *spec.gamma_bar();
      // M^{-1} = (1 - g) I + g P
      return lt_inverse((Rat(1) - g) * LTMatrix::identity(order) +
                        g * pascal_generalized(m, Rat(1)));
    }
    case FamilyKind::Custom: {
      RatVector c(order);
      const RatVector& given = *spec.custom_coeffs();
      for (std::size_t n = 0; n < std::min(order, given.size()); ++n) c[n] = given[n];
      return series_of_H(c, m);
    }
  }
  throw AppellError(ErrorKind::InvalidFamily, "unhandled family kind");
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<FamilyKind>& all_family_kinds() {
  static const std::vector<FamilyKind> kinds = [] {
    std::vector<FamilyKind> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

bool is_even_family(FamilyKind kind) {
  return kind == FamilyKind::HermiteMonic || kind == FamilyKind::LegendreModified ||
         kind == FamilyKind::ChebyshevFirstModified || kind == FamilyKind::ChebyshevSecondModified;
}

FamilySpec FamilySpec::simple(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::LaguerreModified:
      throw AppellError(ErrorKind::InvalidFamily, "laguerre-modified requires alpha");
    case FamilyKind::GeneralizedEuler:
      throw AppellError(ErrorKind::InvalidFamily, "generalized-euler requires gamma-bar");
    case FamilyKind::Custom:
      throw AppellError(ErrorKind::InvalidFamily, "custom requires coefficients");
    default:
      return FamilySpec(kind);
  }
}

FamilySpec FamilySpec::laguerre_modified(Rat alpha) {
  // alpha > -1 matters only for orthogonality; the matrix exists for any alpha.
  FamilySpec s(FamilyKind::LaguerreModified);
  s.alpha_ = std::move(alpha);
  return s;
}

FamilySpec FamilySpec::generalized_euler(Rat gamma_bar) {
  FamilySpec s(FamilyKind::GeneralizedEuler);
  s.gamma_bar_ = std::move(gamma_bar);
  return s;
}

FamilySpec FamilySpec::custom(RatVector coeffs) {
  if (coeffs.empty() || coeffs.front().is_zero()) {
    throw AppellError(ErrorKind::InvalidFamily, "custom family requires c0 != 0");
  }
  FamilySpec s(FamilyKind::Custom);
  s.custom_coeffs_ = std::move(coeffs);
  return s;
}

std::string FamilySpec::label() const {
  std::string out(name());
  if (alpha_) out += "(alpha=" + alpha_->str() + ")";
  if (gamma_bar_) out += "(gamma-bar=" + gamma_bar_->str() + ")";
  if (custom_coeffs_) out += to_string(*custom_coeffs_);
  return out;
}

TransferMatrix TransferMatrix::from_matrix(LTMatrix matrix, std::string label,
                                           std::optional<FamilySpec> spec) {
  RatVector coeffs = matrix.column(0);
  return TransferMatrix{std::move(spec), std::move(label), std::move(matrix), std::move(coeffs)};
}

TransferMatrix transfer_matrix(const FamilySpec& spec, std::size_t m) {
  return TransferMatrix::from_matrix(build_matrix(spec, m), spec.label(), spec);
}

RatVector taylor_coefficients(const FamilySpec& spec, std::size_t m) {
  return transfer_matrix(spec, m).coeffs;
}

RatVector gamma_from_coefficients(const RatVector& coeffs) {
  if (coeffs.empty() || coeffs.front().is_zero()) {
    throw AppellError(ErrorKind::NotInvertible, "transfer matrix singular (c0 = 0)", 0);
  }
  const Rat inv_c0 = coeffs.front().reciprocal();
  RatVector gamma(coeffs.size());
  gamma[0] = inv_c0;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    Rat acc;
    for (std::size_t s = 0; s < k; ++s) {
      acc += binomial(static_cast<unsigned>(k), static_cast<unsigned>(s)) * coeffs[k - s] *
             gamma[s];
    }
    gamma[k] = -inv_c0 * acc;
  }
  return gamma;
}

RatVector gamma_coefficients(const FamilySpec& spec, std::size_t m) {
  return gamma_from_coefficients(taylor_coefficients(spec, m));
}

Rat generalized_binomial(const Rat& alpha, unsigned n) {
  Rat out(1);
  for (unsigned k = 0; k < n; ++k) {
    out *= alpha - Rat(static_cast<long>(k));
    out /= Rat(static_cast<long>(k + 1));
  }
  return out;
}

}  // namespace appell
