#ifndef POLYRED_REDUCTION_HPP
#define POLYRED_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "polyred/coupling.hpp"
#include "polyred/elimination.hpp"
#include "polyred/jacobian.hpp"
#include "polyred/poly_system.hpp"

namespace polyred {

enum class PhiVariant { algebraic, qft };

std::string to_string(PhiVariant v);
/// "algebraic" or "qft"; throws std::invalid_argument otherwise.
PhiVariant parse_phi_variant(const std::string& name);

/// Image of a degree-d system in n variables under the reduction map.
///
/// Coordinates 0..n-1 are z^{(1)}; the auxiliary coordinate z^{(2)}_{ij}
/// (0-based i, j) sits at n + i*n + j. In 1-based file notation that is
/// coordinate i*n + j.
struct ReducedSystem {
  PolySystem system;
  std::size_t source_dim = 0;
  unsigned source_degree = 0;
  PhiVariant variant = PhiVariant::algebraic;

  std::size_t flat_index(std::size_t i, std::size_t j) const { return source_dim + i * source_dim + j; }
};

/// F~^{(1)}_i = sum_j z2_ij z1_j, F~^{(2)}_ij = z2_ij - sum_c (1/c) d_j (F_c)_i(z1).
/// d is F's declared degree bound. Throws std::invalid_argument for d < 3,
/// a nonzero constant part, or a non-square system.
ReducedSystem phi_algebraic(const PolySystem& F);

/// Coupling transform in dimension n(n+1): degrees 3..d-2 copied, the
/// degree-d couplings relocated to the auxiliary outputs at degree d-1, unit
/// quadratic couplings w~_{i, j, aux(i,j)}. Requires w^{(2)} = 0 and d >= 3.
CouplingTensor phi_qft(const CouplingTensor& w, std::size_t n, unsigned d);

/// phi_qft on extract_couplings(F) with d = F's degree bound.
ReducedSystem phi_qft_system(const PolySystem& F);

ReducedSystem phi(const PolySystem& F, PhiVariant variant);

struct ImageMembership {
  bool in_image = false;
  /// The unique preimage when in_image.
  std::optional<PolySystem> preimage;
  std::string detail;
};

/// Recovers the candidate preimage F = H(.; 0) and checks Phi(F) == Ft
/// exactly. The source degree is Ft's degree bound plus one. Throws
/// std::invalid_argument unless Ft is square of dimension n(n+1).
ImageMembership is_in_image_of_phi(const PolySystem& Ft, std::size_t n, PhiVariant variant);

struct TheoremReport {
  PhiVariant variant = PhiVariant::algebraic;
  MembershipVerdict lin_source;
  MembershipVerdict lin_image;
  MembershipVerdict inv_source;
  MembershipVerdict inv_image;
  bool lin_agree = false;
  bool inv_agree = false;
  /// H(z1; 0) == F exactly.
  bool h_recovers_source = false;
  /// c with det J_{Phi(F)}(z1, R^{-1}(0; z1)) = c * det J_F(z1), if any.
  std::optional<Coefficient> transport_constant;
  /// Certification of Phi(F)^{-1}(y1, 0) when the image side is a member.
  std::optional<bool> assembled_certified;
  bool passed() const;
  std::string detail;
};

/// Both sides of the transport statement on one instance.
TheoremReport verify_theorem_main(const PolySystem& F, PhiVariant variant,
                                  std::optional<unsigned> degree_cap = std::nullopt);

}  // namespace polyred

#endif  // POLYRED_REDUCTION_HPP
