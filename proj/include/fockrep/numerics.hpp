#pragma once

// Exact arithmetic: big rationals, falling factorials, generalized binomials
// and the two summation identities used for the W_{1+inf} cocycle.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fockrep {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Scalar(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Scalar parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Scalar(Integer(strip_plus(s)));
      return Scalar(Integer(strip_plus(s.substr(0, slash))), Integer(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Integer numerator() const { return value_.get_num(); }
  [[nodiscard]] Integer denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) < 0; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static std::string strip_plus(std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    return s;
  }

  mpq_class value_{0};
};

/// Integer power of a scalar; negative exponents invert (base must be nonzero).
inline Scalar pow(const Scalar& base, std::int64_t exponent) {
  if (exponent == 0) return Scalar(1);
  if (base.is_zero()) {
    if (exponent < 0) throw std::domain_error("pow: zero to a negative power");
    return Scalar(0);
  }
  auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return exponent > 0 ? Scalar(num, den) : Scalar(den, num);
}

/// (a)_b = a(a-1)...(a-b+1) for b >= 0, and 0 for b < 0.
inline Integer falling_factorial(const Integer& a, std::int64_t b) {
  if (b < 0) return 0;
  Integer result = 1;
  Integer factor = a;
  for (std::int64_t i = 0; i < b; ++i) {
    result *= factor;
    if (result == 0) break;
    --factor;
  }
  return result;
}

inline Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Generalized binomial (a)_b / b!, zero for b < 0.
inline Scalar binomial(const Integer& a, std::int64_t b) {
  if (b < 0) return Scalar(0);
  Scalar r(falling_factorial(a, b), factorial(b));
  if (!r.is_integer()) throw std::logic_error("binomial: non-integral result");
  return r;
}

inline Integer sign_power(std::int64_t e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

/// sum_{b=0}^{m-1} (b-m)_l (b)_s, summed literally.
inline Integer appendix_lemma_lhs_i(std::int64_t m, std::int64_t l, std::int64_t s) {
  Integer sum = 0;
  for (std::int64_t b = 0; b < m; ++b) sum += falling_factorial(Integer(b - m), l) * falling_factorial(Integer(b), s);
  return sum;
}

/// (-1)^l l! s! binom(m+l, m-s-1).
inline Integer appendix_lemma_rhs_i(std::int64_t m, std::int64_t l, std::int64_t s) {
  Scalar v = Scalar(Integer(sign_power(l) * factorial(l) * factorial(s))) * binomial(Integer(m + l), m - s - 1);
  return v.numerator();
}

/// sum_{b=-m}^{-1} (b+m)_l (b)_s, summed literally.
inline Integer appendix_lemma_lhs_ii(std::int64_t m, std::int64_t l, std::int64_t s) {
  Integer sum = 0;
  for (std::int64_t b = -m; b <= -1; ++b) sum += falling_factorial(Integer(b + m), l) * falling_factorial(Integer(b), s);
  return sum;
}

/// (-1)^s l! s! binom(m+s, m-l-1).
inline Integer appendix_lemma_rhs_ii(std::int64_t m, std::int64_t l, std::int64_t s) {
  Scalar v = Scalar(Integer(sign_power(s) * factorial(l) * factorial(s))) * binomial(Integer(m + s), m - l - 1);
  return v.numerator();
}

}  // namespace fockrep
