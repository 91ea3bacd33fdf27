#include "appell/rat.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "appell/errors.hpp"

namespace appell {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw AppellError(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) {
    throw AppellError(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw AppellError(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw AppellError(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  Rat out;
  out.q_ = mpq_class(mpz_class(num), mpz_class(den));
  return out;
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw AppellError(ErrorKind::DivisionByZero, "reciprocal of zero");
  return Rat(mpq_class(q_.get_den(), q_.get_num()));
}

Rat& Rat::operator+=(const Rat& other) {
  q_ += other.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  q_ -= other.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  q_ *= other.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw AppellError(ErrorKind::DivisionByZero, "division by zero");
  q_ /= other.q_;
  return *this;
}

Rat Rat::operator-() const {
  Rat out;
  out.q_ = -q_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(mpq_class(f));
}

Rat binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(mpq_class(b));
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace appell
