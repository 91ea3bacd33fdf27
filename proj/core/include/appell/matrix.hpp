#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "appell/rat.hpp"

namespace appell {

/// Dense lower-triangular square matrix of exact rationals.
///
/// Storage is the full (m+1)^2 row-major block; entries above the diagonal
/// are kept at zero and set() refuses to make them nonzero. The order is the
/// number of rows, i.e. m+1 for degree bound m.
class LTMatrix {
 public:
  explicit LTMatrix(std::size_t order);

  static LTMatrix identity(std::size_t order);
  /// Builds from square rows. Throws DimensionMismatch on ragged input and
  /// on any nonzero entry above the diagonal.
  static LTMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t order() const { return order_; }
  std::size_t degree_bound() const { return order_ - 1; }

  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rat value);

  std::span<const Rat> row_span(std::size_t i) const;
  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatVector diagonal() const;
  std::vector<RatVector> rows() const;

  bool is_zero() const;

  friend bool operator==(const LTMatrix& a, const LTMatrix& b) = default;

 private:
  std::size_t order_;
  std::vector<Rat> entries_;
};

LTMatrix operator+(const LTMatrix& a, const LTMatrix& b);
LTMatrix operator-(const LTMatrix& a, const LTMatrix& b);
LTMatrix operator*(const Rat& s, const LTMatrix& a);
LTMatrix operator*(const LTMatrix& a, const LTMatrix& b);
RatVector operator*(const LTMatrix& a, const RatVector& v);

LTMatrix mat_mul(const LTMatrix& a, const LTMatrix& b);
RatVector mat_vec(const LTMatrix& a, const RatVector& v);
/// a^s by repeated multiplication; a^0 is the identity.
LTMatrix mat_pow(const LTMatrix& a, unsigned s);

/// Creation matrix H: entry (i, i-1) = i, zero elsewhere. Nilpotent, H^(m+1) = 0.
LTMatrix creation_matrix(std::size_t m);

/// P(x) = e^{xH}, entry (i,j) = C(i,j) x^(i-j). P(1) is the Pascal matrix.
LTMatrix pascal_generalized(std::size_t m, const Rat& x);

/// D[l] = diag(l^0, ..., l^m). Throws ZeroScale for l = 0.
LTMatrix diag_geometric(std::size_t m, const Rat& l);

/// D_f = diag(0!, 1!, ..., m!).
LTMatrix diag_factorial(std::size_t m);

LTMatrix diagonal_matrix(const RatVector& d);

/// sum_n weights[n] H^n, accumulated by repeated multiplication with H.
/// Weights beyond index m are ignored (H^n = 0 there); missing ones are zero.
LTMatrix polynomial_in_H(std::size_t m, std::span<const Rat> weights);

/// f(H) = sum_n c_n H^n / n! via explicit powers of H.
/// Throws DimensionMismatch unless coeffs.size() == m+1.
LTMatrix series_of_H(std::span<const Rat> coeffs, std::size_t m);

/// Same matrix as series_of_H from the closed form (i,j) -> C(i,j) c_{i-j}.
LTMatrix series_of_H_closed_form(std::span<const Rat> coeffs, std::size_t m);

/// Exact inverse by forward substitution. Throws SingularMatrix carrying the
/// index of the first zero diagonal entry.
LTMatrix lt_inverse(const LTMatrix& a);

}  // namespace appell
