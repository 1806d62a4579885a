#ifndef POLYRED_SERIES_QFT_HPP
#define POLYRED_SERIES_QFT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyred/coupling.hpp"
#include "polyred/graded_series.hpp"

namespace polyred {

/// Rooted plane tree with one outgoing edge. A node without children is a
/// source leaf u; every other node is a vertex with 2..d ordered children.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool is_leaf() const { return children.empty(); }
  /// Number of vertices (leaves excluded).
  std::size_t size() const;
  /// Sum over vertices of (in-degree - 1).
  unsigned theta_weight() const;
  /// "u" for a leaf, "[c1 c2 ...]" for a vertex.
  std::string to_string() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// All plane trees with vertex in-degrees in {2..d} and theta weight 1..N,
/// by increasing weight. Throws std::invalid_argument for d < 2.
std::vector<PlaneTree> enumerate_trees(unsigned d, unsigned N);

/// A_i(T)(u), i = 0..n-1: couplings contracted over the internal edges
/// (full tensor entries), u_i at the leaves. Polynomials in n variables.
std::vector<Polynomial> tree_amplitude(const PlaneTree& T, const CouplingTensor& w);

/// G = u + theta^{-1} W(theta G) through theta-order N.
GradedSeriesVector formal_inverse_fixed_point(const CouplingTensor& w, unsigned N);
/// Same recursion with arbitrary sources (any ring).
GradedSeriesVector formal_inverse_fixed_point(const CouplingTensor& w, unsigned N,
                                              const std::vector<Polynomial>& sources);

/// Grade r = sum of amplitudes of the plane trees of weight r (unit weights).
GradedSeriesVector tree_oracle_inverse(const CouplingTensor& w, unsigned N);

struct SeriesCheck {
  bool holds = false;
  std::optional<unsigned> first_bad_grade;
  std::optional<Polynomial> residual;
  std::string detail;
};

/// F(G(u)) - u through theta-order N, grade by grade.
SeriesCheck inversion_defect(const CouplingTensor& w, const GradedSeriesVector& G);

/// ln Z(0,u) = sum_{r=1}^{N} (1/r) tr(M^r), M_ij = (d_i W_j)(theta G).
GradedSeries log_partition_function(const CouplingTensor& w, unsigned N);

/// det J_F(G(u)) with each z carrying one power of theta.
GradedSeries jacobian_determinant_series(const CouplingTensor& w, const GradedSeriesVector& G);

/// exp(ln Z) * det J_F(G(u)) == 1 through order N; also compares ln Z with
/// -log det J_F(G(u)).
struct PartitionReport {
  GradedSeries log_z;
  GradedSeries det;
  SeriesCheck z_det;
  bool log_det_agrees = false;
};
PartitionReport z_det_identity_check(const CouplingTensor& w, unsigned N);

struct ReducedInverseReport {
  bool first_block_equal = false;
  bool auxiliary_closed_form = false;
  bool holds() const { return first_block_equal && auxiliary_closed_form; }
  std::string detail;
};

/// G~ from phi_qft(w) with sources (u, 0, ..., 0) against G and against
/// theta^{d-2} sum w_{i,j,j2..jd} G_{j2}...G_{jd} on the auxiliary
/// coordinates, with d = w.max_degree(). Throws std::invalid_argument unless
/// w^{(2)} = 0 and d >= 3.
ReducedInverseReport reduced_inverse_check(const CouplingTensor& w, unsigned N);

/// G(u, theta) == lambda^{-1} G(lambda u, lambda^{-1} theta) through order
/// N. Throws std::invalid_argument for lambda = 0.
SeriesCheck theta_homogeneity_check(const CouplingTensor& w, unsigned N, const Coefficient& lambda);

/// Number of plane trees of each weight 1..N (index 0 unused).
std::vector<std::size_t> tree_counts_by_weight(unsigned d, unsigned N);

}  // namespace polyred

#endif  // POLYRED_SERIES_QFT_HPP
