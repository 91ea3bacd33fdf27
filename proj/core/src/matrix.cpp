#include "appell/matrix.hpp"

#include <algorithm>
#include <string>

#include "appell/errors.hpp"

namespace appell {

namespace {

void require_same_order(const LTMatrix& a, const LTMatrix& b, const char* op) {
  if (a.order() != b.order()) {
    throw AppellError(ErrorKind::DimensionMismatch,
                      std::string(op) + ": order " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  }
}

}  // namespace

LTMatrix::LTMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) throw AppellError(ErrorKind::DimensionMismatch, "matrix order must be >= 1");
}

LTMatrix LTMatrix::identity(std::size_t order) {
  LTMatrix out(order);
  for (std::size_t i = 0; i < order; ++i) out.entries_[i * order + i] = Rat(1);
  return out;
}

LTMatrix LTMatrix::from_rows(const std::vector<RatVector>& rows) {
  LTMatrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw AppellError(ErrorKind::DimensionMismatch,
                        "row " + std::to_string(i) + " has length " +
                            std::to_string(rows[i].size()) + ", expected " +
                            std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) out.set(i, j, rows[i][j]);
  }
  return out;
}

const Rat& LTMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= order_ || j >= order_) {
    throw AppellError(ErrorKind::DimensionMismatch, "matrix index out of range");
  }
  return entries_[i * order_ + j];
}

void LTMatrix::set(std::size_t i, std::size_t j, Rat value) {
  if (i >= order_ || j >= order_) {
    throw AppellError(ErrorKind::DimensionMismatch, "matrix index out of range");
  }
  if (j > i && !value.is_zero()) {
    throw AppellError(ErrorKind::DimensionMismatch,
                      "nonzero entry above the diagonal at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  }
  entries_[i * order_ + j] = std::move(value);
}

std::span<const Rat> LTMatrix::row_span(std::size_t i) const {
  return std::span<const Rat>(entries_).subspan(i * order_, order_);
}

RatVector LTMatrix::row(std::size_t i) const {
  auto s = row_span(i);
  return RatVector(s.begin(), s.end());
}

RatVector LTMatrix::column(std::size_t j) const {
  RatVector out(order_);
  for (std::size_t i = 0; i < order_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatVector LTMatrix::diagonal() const {
  RatVector out(order_);
  for (std::size_t i = 0; i < order_; ++i) out[i] = (*this)(i, i);
  return out;
}

std::vector<RatVector> LTMatrix::rows() const {
  std::vector<RatVector> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(row(i));
  return out;
}

bool LTMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

LTMatrix operator+(const LTMatrix& a, const LTMatrix& b) {
  require_same_order(a, b, "add");
  LTMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, a(i, j) + b(i, j));
  }
  return out;
}

LTMatrix operator-(const LTMatrix& a, const LTMatrix& b) {
  require_same_order(a, b, "subtract");
  LTMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, a(i, j) - b(i, j));
  }
  return out;
}

LTMatrix operator*(const Rat& s, const LTMatrix& a) {
  LTMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, s * a(i, j));
  }
  return out;
}

LTMatrix operator*(const LTMatrix& a, const LTMatrix& b) { return mat_mul(a, b); }

RatVector operator*(const LTMatrix& a, const RatVector& v) { return mat_vec(a, v); }

LTMatrix mat_mul(const LTMatrix& a, const LTMatrix& b) {
  require_same_order(a, b, "mat_mul");
  const std::size_t n = a.order();
  LTMatrix out(n);
  // Both factors are lower triangular, so only j <= k <= i contributes.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rat acc;
      for (std::size_t k = j; k <= i; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

RatVector mat_vec(const LTMatrix& a, const RatVector& v) {
  if (v.size() != a.order()) {
    throw AppellError(ErrorKind::DimensionMismatch,
                      "mat_vec: order " + std::to_string(a.order()) + " vs vector length " +
                          std::to_string(v.size()));
  }
  RatVector out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    Rat acc;
    for (std::size_t k = 0; k <= i; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      acc += a(i, k) * v[k];
    }
    out[i] = std::move(acc);
  }
  return out;
}

LTMatrix mat_pow(const LTMatrix& a, unsigned s) {
  LTMatrix out = LTMatrix::identity(a.order());
  for (unsigned k = 0; k < s; ++k) out = mat_mul(out, a);
  return out;
}

LTMatrix creation_matrix(std::size_t m) {
  LTMatrix h(m + 1);
  for (std::size_t i = 1; i <= m; ++i) h.set(i, i - 1, Rat(static_cast<long>(i)));
  return h;
}

LTMatrix pascal_generalized(std::size_t m, const Rat& x) {
  LTMatrix p(m + 1);
  // powers[d] = x^d; x^0 = 1 even for x = 0.
  RatVector powers(m + 1);
  powers[0] = Rat(1);
  for (std::size_t d = 1; d <= m; ++d) powers[d] = powers[d - 1] * x;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      p.set(i, j, binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) * powers[i - j]);
    }
  }
  return p;
}

LTMatrix diag_geometric(std::size_t m, const Rat& l) {
  if (l.is_zero()) throw AppellError(ErrorKind::ZeroScale, "D[l] requires l != 0");
  LTMatrix d(m + 1);
  Rat power(1);
  for (std::size_t k = 0; k <= m; ++k) {
    d.set(k, k, power);
    power *= l;
  }
  return d;
}

LTMatrix diag_factorial(std::size_t m) {
  LTMatrix d(m + 1);
  Rat f(1);
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) f *= Rat(static_cast<long>(k));
    d.set(k, k, f);
  }
  return d;
}

LTMatrix diagonal_matrix(const RatVector& d) {
  LTMatrix out(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) out.set(k, k, d[k]);
  return out;
}

LTMatrix polynomial_in_H(std::size_t m, std::span<const Rat> weights) {
  const LTMatrix h = creation_matrix(m);
  LTMatrix power = LTMatrix::identity(m + 1);
  LTMatrix sum(m + 1);
  const std::size_t terms = std::min(weights.size(), m + 1);
  for (std::size_t n = 0; n < terms; ++n) {
    if (n > 0) power = mat_mul(power, h);
    if (!weights[n].is_zero()) sum = sum + weights[n] * power;
  }
  return sum;
}

LTMatrix series_of_H(std::span<const Rat> coeffs, std::size_t m) {
  if (coeffs.size() != m + 1) {
    throw AppellError(ErrorKind::DimensionMismatch,
                      "series_of_H: " + std::to_string(coeffs.size()) +
                          " coefficients for degree bound " + std::to_string(m));
  }
  RatVector weights(m + 1);
  Rat inv_fact(1);
  for (std::size_t n = 0; n <= m; ++n) {
    if (n > 0) inv_fact /= Rat(static_cast<long>(n));
    weights[n] = coeffs[n] * inv_fact;
  }
  return polynomial_in_H(m, weights);
}

LTMatrix series_of_H_closed_form(std::span<const Rat> coeffs, std::size_t m) {
  if (coeffs.size() != m + 1) {
    throw AppellError(ErrorKind::DimensionMismatch,
                      "series_of_H_closed_form: " + std::to_string(coeffs.size()) +
                          " coefficients for degree bound " + std::to_string(m));
  }
  LTMatrix out(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      out.set(i, j, binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) * coeffs[i - j]);
    }
  }
  return out;
}

LTMatrix lt_inverse(const LTMatrix& a) {
  const std::size_t n = a.order();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      throw AppellError(ErrorKind::SingularMatrix,
                        "singular triangular matrix: zero diagonal at index " + std::to_string(k),
                        k);
    }
  }
  LTMatrix inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv.set(j, j, a(j, j).reciprocal());
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat acc;
      for (std::size_t k = j; k < i; ++k) {
        if (a(i, k).is_zero() || inv(k, j).is_zero()) continue;
        acc += a(i, k) * inv(k, j);
      }
      inv.set(i, j, -acc / a(i, i));
    }
  }
  return inv;
}

}  // namespace appell
