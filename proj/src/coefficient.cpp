#include "polyred/coefficient.hpp"

#include <stdexcept>

namespace polyred {

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

mpq_class Coefficient::parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

Coefficient Coefficient::from_strings(std::string_view re, std::string_view im) {
  return Coefficient(parse_rational(re), parse_rational(im));
}

Coefficient Coefficient::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Coefficient(mpq_class(num, den));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero coefficient");
  if (is_real()) return Coefficient(1 / re_);
  const mpq_class norm = re_ * re_ + im_ * im_;
  return Coefficient(re_ / norm, -im_ / norm);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Coefficient::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  std::string im;
  if (im_ == 1) {
    im = "i";
  } else if (im_ == -1) {
    im = "-i";
  } else {
    im = im_.get_str() + "i";
  }
  if (!out.empty() && sgn(im_) > 0) out += "+";
  return out + im;
}

Coefficient pow(const Coefficient& base, unsigned exponent) {
  Coefficient result(1);
  Coefficient b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

}  // namespace polyred
