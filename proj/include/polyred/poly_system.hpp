#ifndef POLYRED_POLY_SYSTEM_HPP
#define POLYRED_POLY_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyred/polynomial.hpp"

namespace polyred {

/// A polynomial map C^n -> C^m given by its coordinate functions, together
/// with a declared degree bound d (an element of P_{n,d} when m = n).
class PolySystem {
 public:
  PolySystem() = default;
  /// Throws std::invalid_argument if a component lives in another ring or
  /// exceeds the declared bound. Without a bound, the actual degree is used.
  PolySystem(std::size_t nvars, std::vector<Polynomial> components,
             std::optional<unsigned> degree_bound = std::nullopt);

  static PolySystem identity(std::size_t n, unsigned degree_bound = 1);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return components_.size(); }
  bool is_square() const { return components_.size() == nvars_; }
  unsigned degree_bound() const { return degree_bound_; }
  /// Actual total degree (max over components), 0 for constant/empty systems.
  unsigned degree() const;

  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }

  /// Same components, different declared bound (validated).
  PolySystem with_degree_bound(unsigned bound) const;

  friend bool operator==(const PolySystem& a, const PolySystem& b) {
    return a.nvars_ == b.nvars_ && a.degree_bound_ == b.degree_bound_ && a.components_ == b.components_;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Polynomial> components_;
  unsigned degree_bound_ = 0;
};

/// f o g, with f.nvars() == g.size(); the result lives in g's ring.
PolySystem compose(const PolySystem& f, const PolySystem& g);

/// Componentwise composition of raw component lists.
std::vector<Polynomial> compose(std::span<const Polynomial> f, std::span<const Polynomial> g);

/// The variables z_0..z_{n-1} of an n-variable ring.
std::vector<Polynomial> ring_variables(std::size_t n);

}  // namespace polyred

#endif  // POLYRED_POLY_SYSTEM_HPP
