#ifndef POLYRED_COUPLING_HPP
#define POLYRED_COUPLING_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "polyred/poly_system.hpp"

namespace polyred {

/// Key of a coupling w^{(k)}_{i, j_1..j_k}: degree k, output index i and the
/// input indices sorted ascending.
struct CouplingKey {
  unsigned degree = 0;
  std::size_t output = 0;
  std::vector<std::size_t> inputs;

  friend auto operator<=>(const CouplingKey&, const CouplingKey&) = default;
  friend bool operator==(const CouplingKey&, const CouplingKey&) = default;
};

/// Coupling constants of a normalized system F(z) = z - sum_k W^{(k)}(z).
///
/// Storage is symmetric: one entry per sorted input tuple, holding the
/// coefficient of the monomial z_{j_1}...z_{j_k} in W_i^{(k)} (the sum over
/// all distinct orderings of the redundant tensor). The redundant tensor is
/// recovered by spreading that value evenly over the distinct orderings.
class CouplingTensor {
 public:
  CouplingTensor() = default;
  CouplingTensor(std::size_t dim, unsigned max_degree);

  std::size_t dim() const { return dim_; }
  unsigned max_degree() const { return max_degree_; }
  const std::map<CouplingKey, Coefficient>& entries() const { return entries_; }

  /// Sets the symmetric entry for `inputs` (any order). Zero erases.
  void set(std::size_t output, std::vector<std::size_t> inputs, const Coefficient& value);
  /// Adds to the symmetric entry for `inputs` (any order).
  void add(std::size_t output, std::vector<std::size_t> inputs, const Coefficient& value);
  Coefficient get(std::size_t output, std::vector<std::size_t> inputs) const;

  /// Entry of the redundant tensor for an ordered input tuple.
  Coefficient full_entry(std::size_t output, std::span<const std::size_t> ordered_inputs) const;

  /// True when no coupling of degree k is nonzero.
  bool degree_vanishes(unsigned k) const;

  /// W_i = sum_k W_i^{(k)}(z) as polynomials in dim() variables.
  std::vector<Polynomial> nonlinear_part() const;
  /// W_i^{(k)} only.
  std::vector<Polynomial> homogeneous_nonlinear_part(unsigned k) const;
  /// F(z) = z - W(z) with declared degree bound max_degree().
  PolySystem to_system() const;

  friend bool operator==(const CouplingTensor&, const CouplingTensor&) = default;

 private:
  CouplingKey make_key(std::size_t output, std::vector<std::size_t> inputs) const;

  std::size_t dim_ = 0;
  unsigned max_degree_ = 2;
  std::map<CouplingKey, Coefficient> entries_;
};

/// Number of distinct orderings of a multiset of indices.
unsigned long long distinct_orderings(std::span<const std::size_t> sorted_inputs);

}  // namespace polyred

#endif  // POLYRED_COUPLING_HPP
