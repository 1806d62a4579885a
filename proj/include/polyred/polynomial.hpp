#ifndef POLYRED_POLYNOMIAL_HPP
#define POLYRED_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polyred/coefficient.hpp"

namespace polyred {

/// Exponent vector z_1^{e_1}...z_n^{e_n}; its length is the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) {}

  static Monomial unit(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exp_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exp_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exp_; }

  unsigned degree() const;
  /// Sum of the exponents restricted to `vars`.
  unsigned degree_in(std::span<const std::size_t> vars) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exponent difference; requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exp_;
};

/// Graded-lexicographic order, descending: higher total degree first, ties
/// broken lexicographically with z_1 most significant.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
///
/// Terms are kept in graded-lex descending order and no zero coefficient is
/// ever stored, so two polynomials are equal iff their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coefficient, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Coefficient& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Coefficient& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Largest degree in the variables `vars` over all terms; -1 for zero.
  int degree_in(std::span<const std::size_t> vars) const;

  Coefficient coefficient(const Monomial& m) const;
  Coefficient constant_term() const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coefficient& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Coefficient& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coefficient& c) { return a *= c; }
  friend Polynomial operator*(const Coefficient& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable rendering, e.g. "z1^2*z2 - 1/2*z1 + 3". Variables are
  /// named z1..zn unless `names` is given.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_same_ring(const Polynomial& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// p(subs_1, ..., subs_m): substitutes polynomial `subs[i]` for variable i.
/// All substitutes must share one ring; the result lives in that ring.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> subs);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Sum of the terms of total degree exactly `c`.
Polynomial homogeneous_part(const Polynomial& p, unsigned c);

/// Sum of the terms whose degree in `vars` is exactly `c`.
Polynomial homogeneous_part_in(const Polynomial& p, std::span<const std::size_t> vars, unsigned c);

/// Sets the variables `vars` to zero.
Polynomial substitute_zero(const Polynomial& p, std::span<const std::size_t> vars);

/// Moves p into a ring of `nvars` variables, variable i going to slot
/// `target[i]`. Slots not hit by `target` do not occur in the result.
Polynomial remap(const Polynomial& p, std::size_t nvars, std::span<const std::size_t> target);

/// Exact quotient p / q. Throws std::domain_error if q does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

/// Substitutes z_i -> scale * z_i for every variable.
Polynomial scale_variables(const Polynomial& p, const Coefficient& scale);

}  // namespace polyred

#endif  // POLYRED_POLYNOMIAL_HPP
