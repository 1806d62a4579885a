#ifndef POLYRED_INVERSION_HPP
#define POLYRED_INVERSION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyred/polynomial.hpp"

namespace polyred {

enum class InverseStatus { certified, not_invertible, undetermined };

std::string to_string(InverseStatus s);

/// Result of inverting y = P(x; p) in the active variables x, with the
/// remaining variables p treated as parameters.
struct InversionResult {
  InverseStatus status = InverseStatus::undetermined;
  /// Components of P^{-1}(y; p), one per active variable, in the same ring
  /// as P: the slot of active variable a now stands for y_a.
  std::vector<Polynomial> inverse;
  /// det of the Jacobian with respect to the active variables.
  Polynomial jacobian_determinant;
  /// Non-constant determinant, first nonzero series grade above the cap, or
  /// composition residual.
  std::optional<Polynomial> witness;
  unsigned degree_cap = 0;
  unsigned classical_bound = 0;
  /// "trivial", "affine closed form" or "fixed-point series".
  std::string route;
  std::string detail;
};

/// d^(m-1) for a map of degree d (at least 1) in m variables.
unsigned classical_degree_bound(unsigned degree, std::size_t m);

/// Polynomial inverse of the map x -> P(x; p) valid identically in p.
///
/// A non-constant (or zero) Jacobian determinant is reported at once as
/// not_invertible. Otherwise the linear part L(p) is inverted through its
/// adjugate and the normalized map is inverted by the theta-graded fixed
/// point through grade `degree_cap` (default: the classical bound); the
/// truncation to degree `degree_cap` is kept only if both compositions are
/// the identity. A failure is a certificate of non-invertibility when the
/// cap reaches the classical bound and undetermined otherwise.
InversionResult invert_map(std::span<const Polynomial> components, std::span<const std::size_t> active,
                           std::optional<unsigned> degree_cap = std::nullopt);

/// components(active <- replacement, parameters unchanged).
std::vector<Polynomial> substitute_active(std::span<const Polynomial> components, std::span<const std::size_t> active,
                                          std::span<const Polynomial> replacement);

}  // namespace polyred

#endif  // POLYRED_INVERSION_HPP
