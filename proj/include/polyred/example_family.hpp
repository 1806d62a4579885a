#ifndef POLYRED_EXAMPLE_FAMILY_HPP
#define POLYRED_EXAMPLE_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyred/jacobian.hpp"
#include "polyred/poly_system.hpp"

namespace polyred {

/// F_1 = z1 - sum_k a1[k] z1^k z2^{d-k}, F_2 = z2 - sum_k a2[k] z1^k z2^{d-k}.
struct FamilyInstance {
  unsigned d = 2;
  std::vector<Coefficient> a1;  // size d + 1
  std::vector<Coefficient> a2;  // size d + 1

  static FamilyInstance zero(unsigned d);
  friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

/// Throws std::invalid_argument for d < 2 or coefficient vectors of the
/// wrong length.
PolySystem family_system(const FamilyInstance& inst);

/// Reads the coefficients back from a system of the family shape (degree
/// bound d, two variables); std::nullopt when the shape does not match.
std::optional<FamilyInstance> family_instance_from_system(const PolySystem& F);

/// a1[k+1](k+1) = -a2[k](d-k) for k < d (the linear part of det J_F), and
/// sum_k a1[k] a2[m-k] d (2k-m) = 0 for every m >= 1.
bool closed_form_jlin_conditions(const FamilyInstance& inst);

/// a2[k] = 0 for k < d, a1[d] = 0, and for every k < d: a1[k] = 0 or a2[d] = 0.
bool closed_form_partial_conditions(const FamilyInstance& inst);

/// det J_F for the family, expanded termwise:
/// 1 - sum_{k<d} (a1[k+1](k+1) + a2[k](d-k)) z1^k z2^{d-1-k}
///   + sum_{k,l} a1[k] a2[l] d (k-l) z1^{k+l-1} z2^{2d-k-l-1}.
Polynomial family_determinant_closed_form(const FamilyInstance& inst);

/// det J_F(z1, a2[d] z1^d) by direct substitution, in one variable.
/// Throws std::invalid_argument unless a2[k] = 0 for k < d.
Polynomial specialized_jacobian(const FamilyInstance& inst);

/// 1 + sum_{k=0}^{d} a1[k] a2[d]^{d-k} (k(d-1) - d^2) z1^{(d-1)(d+1-k)}.
Polynomial specialized_jacobian_closed_form(const FamilyInstance& inst);

/// One summand of the specialized determinant, index k.
struct DisplayedTerm {
  unsigned k = 0;
  Coefficient actual_coefficient;  // of z1^{actual_exponent}, divided by a1[k] a2[d]^{d-k}
  unsigned actual_exponent = 0;
  long displayed_coefficient = 0;  // k(d-1)-d^2 for k >= 1, 1 for k = 0
  long displayed_exponent = 0;     // (d-1)(d-1-k) for k >= 1, (d-1)(d+1) for k = 0
  bool coefficient_matches = false;
  bool exponent_matches = false;
};

/// Per-k comparison of the specialized determinant (generic coefficients)
/// with the displayed expansion. Terms whose displayed exponent is negative
/// are still listed, with exponent_matches = false.
std::vector<DisplayedTerm> compare_with_displayed_form(unsigned d);

struct FamilyVerdicts {
  FamilyInstance instance;
  Verdict jlin = Verdict::undetermined;
  Verdict jlin_partial = Verdict::undetermined;
  Verdict j_partial = Verdict::undetermined;
  bool closed_jlin = false;
  bool closed_partial = false;
  std::optional<Polynomial> jlin_partial_witness;
  std::vector<Polynomial> j_partial_inverse;
};

FamilyVerdicts classify_family_instance(const FamilyInstance& inst);

struct FamilyReport {
  std::vector<FamilyVerdicts> instances;
  std::size_t jlin_mismatches = 0;
  std::size_t partial_mismatches = 0;
  /// is_jlin_partial vs is_j_partial disagreements.
  std::size_t lin_vs_j_mismatches = 0;
  /// Indices of instances in J^lin_{2,d;1} \ J^lin_{2,d} and the reverse.
  std::vector<std::size_t> partial_not_classical;
  std::vector<std::size_t> classical_not_partial;
  bool passed() const { return jlin_mismatches == 0 && partial_mismatches == 0 && lin_vs_j_mismatches == 0; }
};

FamilyReport equality_jlin_j_partial_check(const std::vector<FamilyInstance>& corpus);

/// Deterministic corpus for degree d: strata of pool-valued and dense random
/// coefficients, the two partial-class shapes, and nilpotent classical members.
std::vector<FamilyInstance> sample_family_corpus(unsigned d, std::size_t count, std::uint64_t seed);

}  // namespace polyred

#endif  // POLYRED_EXAMPLE_FAMILY_HPP
