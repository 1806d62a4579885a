#ifndef POLYRED_JACOBIAN_HPP
#define POLYRED_JACOBIAN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyred/coupling.hpp"
#include "polyred/poly_system.hpp"

namespace polyred {

/// Dense rows x cols grid of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> data_;
};

/// J_F with entry (i, j) = dF_j / dz_i (rows index variables, columns index
/// components). Throws std::invalid_argument for non-square systems.
PolyMatrix jacobian_matrix(const PolySystem& F);

/// Jacobian of `components` with respect to the variables `vars` only:
/// entry (a, b) = d components[b] / d z_{vars[a]}.
PolyMatrix jacobian_matrix(std::span<const Polynomial> components, std::span<const std::size_t> vars);

/// Exact determinant: cofactor expansion below 4x4, fraction-free Bareiss
/// elimination from 4x4 up. The 0x0 determinant is 1.
Polynomial det_poly(const PolyMatrix& M);

enum class Verdict { member, non_member, undetermined };

std::string to_string(Verdict v);

/// Outcome of a membership predicate. Member and non-member verdicts always
/// carry an exact certificate: the constant determinant, an offending
/// polynomial, or an explicit inverse.
struct MembershipVerdict {
  Verdict verdict = Verdict::undetermined;
  std::optional<Coefficient> constant;
  std::optional<Polynomial> witness;
  std::vector<Polynomial> inverse;
  std::string detail;
};

/// Member of J^lin iff det J_F is a nonzero constant.
MembershipVerdict is_jlin(const PolySystem& F);

/// F - F(0).
PolySystem drop_degree_zero(const PolySystem& F);

/// Coupling constants of F = z - sum_k W^{(k)}(z). Throws
/// std::invalid_argument when F has a constant part or a non-identity
/// linear part.
CouplingTensor extract_couplings(const PolySystem& F);

/// d^(n-1) with d the degree of F (at least 1).
unsigned default_degree_cap(const PolySystem& F);

/// Decides polynomial invertibility of a square system up to `degree_cap`
/// (default: default_degree_cap(F)). Member verdicts carry the inverse,
/// certified by exact two-sided composition. Throws std::domain_error when
/// the linear part at the origin is singular.
MembershipVerdict certify_polynomial_inverse(const PolySystem& F, std::optional<unsigned> degree_cap = std::nullopt);

}  // namespace polyred

#endif  // POLYRED_JACOBIAN_HPP
