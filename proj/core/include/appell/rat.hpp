#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace appell {

/// Exact rational number backed by GMP. Always held in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class q);

  /// Parses "p/q" or "p" with an optional leading sign on p. Anything else
  /// (decimals, whitespace, zero denominators) is a ParseError.
  static Rat parse(std::string_view text);

  /// Canonical "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  Rat pow(unsigned exponent) const;
  Rat reciprocal() const;

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using RatVector = std::vector<Rat>;

Rat factorial(unsigned n);
/// C(n, k); zero when k > n.
Rat binomial(unsigned n, unsigned k);

std::string to_string(const RatVector& v);

}  // namespace appell
