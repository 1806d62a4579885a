#ifndef POLYRED_GRADED_SERIES_HPP
#define POLYRED_GRADED_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyred/polynomial.hpp"

namespace polyred {

/// Truncated power series in the bookkeeping indeterminate theta whose
/// coefficients are polynomials: sum_{r=0}^{order} theta^r * grade(r).
///
/// Products drop every grade above `order` eagerly.
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(std::size_t nvars, unsigned order);

  /// theta^grade * p, truncated at `order`.
  static GradedSeries monomial(const Polynomial& p, unsigned order, unsigned grade = 0);

  std::size_t nvars() const { return nvars_; }
  unsigned order() const { return order_; }
  const Polynomial& grade(unsigned r) const { return grades_.at(r); }
  Polynomial& grade(unsigned r) { return grades_.at(r); }
  const std::vector<Polynomial>& grades() const { return grades_; }

  bool is_zero() const;
  std::optional<unsigned> lowest_nonzero_grade() const;

  /// Same series viewed at a different truncation order.
  GradedSeries truncated(unsigned order) const;
  /// Multiplication by theta^k; grades pushed past `order` are dropped.
  GradedSeries shifted_up(unsigned k) const;
  /// Division by theta^k; throws if a grade below k is nonzero.
  GradedSeries shifted_down(unsigned k) const;

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  GradedSeries& operator*=(const Coefficient& c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(GradedSeries a, const Coefficient& c) { return a *= c; }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.nvars_ == b.nvars_ && a.grades_ == b.grades_;
  }

 private:
  void check_compatible(const GradedSeries& o) const;

  std::size_t nvars_ = 0;
  unsigned order_ = 0;
  std::vector<Polynomial> grades_;
};

/// exp(x) for x with vanishing grade 0.
GradedSeries exp_series(const GradedSeries& x);
/// log(1 + x) for x with vanishing grade 0.
GradedSeries log1p_series(const GradedSeries& x);

/// Vector of graded series sharing ring and order; component i is G_i.
class GradedSeriesVector {
 public:
  GradedSeriesVector() = default;
  explicit GradedSeriesVector(std::vector<GradedSeries> components);

  std::size_t size() const { return components_.size(); }
  unsigned order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const GradedSeries& operator[](std::size_t i) const { return components_[i]; }
  GradedSeries& operator[](std::size_t i) { return components_[i]; }
  const std::vector<GradedSeries>& components() const { return components_; }

  /// Grade r of every component.
  std::vector<Polynomial> grade(unsigned r) const;
  /// Sum over grades <= r of every component (theta set to 1).
  std::vector<Polynomial> collapse(unsigned max_grade) const;

  friend bool operator==(const GradedSeriesVector& a, const GradedSeriesVector& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<GradedSeries> components_;
  std::size_t nvars_ = 0;
  unsigned order_ = 0;
};

/// Substitutes graded series for the `active` variables of p.
///
/// Variable active[a] is replaced by subs[a] (or by theta*subs[a] when
/// `theta_scaled`); any other variable of p is a parameter and keeps its
/// slot, which requires the substitutes to live in p's ring. The result is
/// truncated at `order`.
GradedSeries substitute(const Polynomial& p, std::span<const std::size_t> active,
                        std::span<const GradedSeries> subs, unsigned order, bool theta_scaled);

/// Convenience overload: every variable of p is active.
GradedSeries substitute(const Polynomial& p, std::span<const GradedSeries> subs, unsigned order,
                        bool theta_scaled);

/// Solves G = sources + theta^{-1} W(theta G) grade by grade through `order`.
///
/// W = `nonlinear` must have degree >= 2 in the active variables in every
/// term, so a term of active degree k carries theta^{k-1}. Parameters (the
/// non-active variables) ride along as coefficients.
GradedSeriesVector fixed_point_inverse(std::span<const Polynomial> nonlinear, std::span<const std::size_t> active,
                                       std::span<const Polynomial> sources, unsigned order);

}  // namespace polyred

#endif  // POLYRED_GRADED_SERIES_HPP
