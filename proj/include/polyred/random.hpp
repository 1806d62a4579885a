#ifndef POLYRED_RANDOM_HPP
#define POLYRED_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "polyred/coupling.hpp"
#include "polyred/poly_system.hpp"

namespace polyred {

/// Independent stream for instance `id` under `seed`.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t id);

/// Uniform integer in [lo, hi].
long uniform_int(std::mt19937_64& rng, long lo, long hi);

/// One of {0, +-1, +-1/2, +-2}.
Coefficient pool_rational(std::mt19937_64& rng);
/// p/q with |p| <= 9, 1 <= q <= 9.
Coefficient dense_rational(std::mt19937_64& rng);
/// pool_rational or dense_rational with equal odds, never zero.
Coefficient nonzero_rational(std::mt19937_64& rng);

/// Random polynomial in nvars variables whose terms have total degree in
/// [min_degree, max_degree]; each candidate monomial is kept with
/// probability `density`.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned min_degree, unsigned max_degree,
                             double density);

/// Random homogeneous polynomial of degree `degree`, not identically zero.
Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t nvars, unsigned degree);

/// Couplings of degrees 2..d (3..d when `no_quadratic`) with at least one
/// nonzero entry.
CouplingTensor random_couplings(std::mt19937_64& rng, std::size_t n, unsigned d, bool no_quadratic,
                                double density = 0.5);

/// F_i = z_i - p_i(z_{i+1}, ..., z_{n-1}) with p_i of degree in [min_degree, d],
/// invertible with a polynomial inverse.
PolySystem random_triangular(std::mt19937_64& rng, std::size_t n, unsigned d, unsigned min_degree = 2);

/// Normalized system z - W (W of degree in [min_degree, d]) whose Jacobian
/// determinant is not constant.
PolySystem random_non_jlin(std::mt19937_64& rng, std::size_t n, unsigned d, unsigned min_degree = 2);

/// F(z) = z - v * l(z)^d with l(v) = 0: constant Jacobian determinant and
/// polynomial inverse, not triangular in the given coordinates.
PolySystem random_nilpotent_member(std::mt19937_64& rng, unsigned d);

}  // namespace polyred

#endif  // POLYRED_RANDOM_HPP
