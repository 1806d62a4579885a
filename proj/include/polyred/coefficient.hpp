#ifndef POLYRED_COEFFICIENT_HPP
#define POLYRED_COEFFICIENT_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace polyred {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept in lowest terms with a positive denominator, so
/// equality is structural. Division by zero throws std::domain_error.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT: integers promote implicitly
  Coefficient(mpq_class re, mpq_class im = 0);

  /// Parses a rational written as "p/q" or "p" (base 10).
  static mpq_class parse_rational(std::string_view text);
  static Coefficient from_strings(std::string_view re, std::string_view im);
  static Coefficient rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Coefficient conj() const { return Coefficient(re_, -im_); }
  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  Coefficient operator-() const { return Coefficient(-re_, -im_); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// "3", "-1/2", "1/2+3i", "-i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

Coefficient pow(const Coefficient& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace polyred

#endif  // POLYRED_COEFFICIENT_HPP
