#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appell/matrix.hpp"
#include "appell/rat.hpp"

namespace appell {

enum class FamilyKind {
  Monomial,
  Bernoulli,
  Euler,
  HermiteMonic,
  LaguerreModified,
  LegendreModified,
  ChebyshevFirstModified,
  ChebyshevSecondModified,
  Genocchi,
  Bernoulli2Iterated,
  Euler2Iterated,
  BernoulliEulerMixed,
  GeneralizedEuler,
  Custom,
};

/// Stable external name ("bernoulli", "hermite-monic", ...).
std::string_view family_name(FamilyKind kind);
/// Inverse of family_name; nullopt for unknown names.
std::optional<FamilyKind> parse_family_kind(std::string_view name);
const std::vector<FamilyKind>& all_family_kinds();

/// Families whose generating factor is even in t.
bool is_even_family(FamilyKind kind);

/// Identifies a polynomial family together with exactly the parameters it
/// needs. Use the named constructors; a Custom family must have c0 != 0.
class FamilySpec {
 public:
  static FamilySpec simple(FamilyKind kind);
  static FamilySpec laguerre_modified(Rat alpha);
  static FamilySpec generalized_euler(Rat gamma_bar);
  static FamilySpec custom(RatVector coeffs);

  FamilyKind kind() const { return kind_; }
  std::string_view name() const { return family_name(kind_); }
  const std::optional<Rat>& alpha() const { return alpha_; }
  const std::optional<Rat>& gamma_bar() const { return gamma_bar_; }
  const std::optional<RatVector>& custom_coeffs() const { return custom_coeffs_; }

  /// Human-readable label, e.g. "laguerre-modified(alpha=1/2)".
  std::string label() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  explicit FamilySpec(FamilyKind kind) : kind_(kind) {}

  FamilyKind kind_;
  std::optional<Rat> alpha_;
  std::optional<Rat> gamma_bar_;
  std::optional<RatVector> custom_coeffs_;
};

/// M = f(H) for one family at degree bound m, plus its Taylor data
/// c_n = p_n(0) (the first column of M).
struct TransferMatrix {
  /// Absent for matrices derived by combine/compose rather than a family.
  std::optional<FamilySpec> spec;
  std::string label;
  LTMatrix matrix;
  RatVector coeffs;

  std::size_t degree_bound() const { return matrix.degree_bound(); }
  bool invertible() const { return !coeffs.front().is_zero(); }

  /// Wraps a matrix that is already a function of H.
  static TransferMatrix from_matrix(LTMatrix matrix, std::string label,
                                    std::optional<FamilySpec> spec = std::nullopt);
};

TransferMatrix transfer_matrix(const FamilySpec& spec, std::size_t m);

RatVector taylor_coefficients(const FamilySpec& spec, std::size_t m);

/// gamma_0..gamma_m with M^{-1} = sum gamma_k H^k / k!, from the recurrence
///   gamma_0 = 1/c_0,  gamma_k = -(1/c_0) sum_{s<k} C(k,s) c_{k-s} gamma_s.
/// Throws NotInvertible when c_0 = 0 (Genocchi).
RatVector gamma_coefficients(const FamilySpec& spec, std::size_t m);
RatVector gamma_from_coefficients(const RatVector& coeffs);

/// alpha (alpha-1) ... (alpha-n+1) / n!; 1 for n = 0.
Rat generalized_binomial(const Rat& alpha, unsigned n);

}  // namespace appell
