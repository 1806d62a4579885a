#ifndef POLYRED_ELIMINATION_HPP
#define POLYRED_ELIMINATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyred/inversion.hpp"
#include "polyred/jacobian.hpp"
#include "polyred/poly_system.hpp"

namespace polyred {

/// S split as z = (z1, z2) with |z1| = n1, and R(z2; z1) = S_2(z1, z2).
///
/// Everything stays in S's ring of N = n1 + n2 variables. Where a quantity
/// is a function of y2 rather than z2 (R^{-1}, H), the z2 slots carry y2.
class SplitSystem {
 public:
  SplitSystem(PolySystem S, std::size_t n1);

  const PolySystem& system() const { return S_; }
  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return S_.nvars() - n1_; }
  std::size_t dim() const { return S_.nvars(); }

  const std::vector<std::size_t>& z1_slots() const { return z1_; }
  const std::vector<std::size_t>& z2_slots() const { return z2_; }

  /// S_1 (first n1 components).
  std::vector<Polynomial> first_block() const;
  /// R(z2; z1) = S_2(z1, z2) (last n2 components).
  std::vector<Polynomial> R() const;

 private:
  PolySystem S_;
  std::size_t n1_;
  std::vector<std::size_t> z1_;
  std::vector<std::size_t> z2_;
};

/// Throws std::out_of_range unless 0 <= n1 <= N and S is square.
SplitSystem split(const PolySystem& S, std::size_t n1);

struct PartialInverse {
  /// R^{-1}(y2; z1), one polynomial per z2 coordinate.
  std::vector<Polynomial> Rinv;
  bool certified = false;
  InverseStatus status = InverseStatus::undetermined;
  std::string route;
  /// For non-invertible R: the non-constant det_{z2} J_R, or a residual.
  std::optional<Polynomial> witness;
  std::string detail;
};

/// Inverts R(.; z1) identically in z1 (closed form when affine in z2, the
/// parametric fixed point otherwise).
PartialInverse invert_R(const SplitSystem& split, std::optional<unsigned> degree_cap = std::nullopt);

/// H(z1; y2) = S_1(z1, R^{-1}(y2; z1)). Throws std::logic_error when rinv is
/// not certified.
std::vector<Polynomial> build_H(const SplitSystem& split, const PartialInverse& rinv);

struct SchurReport {
  bool holds = false;
  /// det J_S(z1, R^{-1}(y2; z1)).
  Polynomial lhs;
  /// det J_{R(.; z1)} at (z1, R^{-1}(y2; z1)).
  Polynomial det_R;
  /// det J_{H(.; y2)}(z1).
  Polynomial det_H;
  /// lhs - det_R * det_H.
  Polynomial difference;
};

/// Checks det J_S(z1, R^{-1}(y2;z1)) = det J_R * det J_{H(.;y2)}(z1) as a
/// polynomial identity in (z1, y2).
SchurReport schur_identity_check(const SplitSystem& split, const PartialInverse& rinv);

/// R invertible for all z1 and det J_F(z1, R^{-1}(0; z1)) a nonzero constant.
MembershipVerdict is_jlin_partial(const PolySystem& F, std::size_t n1);

/// R invertible for all z1 and H(.; 0) polynomially invertible. A member
/// verdict carries H^{-1}(.; 0), i.e. the first block of F^{-1} restricted to
/// y2 = 0, as polynomials in the first n1 variables.
MembershipVerdict is_j_partial(const PolySystem& F, std::size_t n1, std::optional<unsigned> degree_cap = std::nullopt);

struct AssembledInverse {
  /// Components in S's ring; slot k stands for y_k.
  std::vector<Polynomial> inverse;
  bool certified = false;
  std::optional<Polynomial> residual;
  std::string detail;
};

/// S^{-1} = (H^{-1}(y1; y2), R^{-1}(y2; H^{-1}(y1; y2))) for a
/// y2-parametrized H^{-1} (in S's ring, y1 in the z1 slots, y2 in the z2
/// slots), certified by two-sided composition.
AssembledInverse assemble_inverse(const SplitSystem& split, const std::vector<Polynomial>& Hinv,
                                  const PartialInverse& rinv);

/// S^{-1}(y1, 0) from H^{-1}(.; 0) given in n1 variables. Certified on the
/// slice: S(S^{-1}(y1, 0)) = (y1, 0) and H^{-1}(H(z1; 0); 0) = z1.
AssembledInverse assemble_restricted_inverse(const SplitSystem& split, const std::vector<Polynomial>& Hinv0,
                                             const PartialInverse& rinv);

/// Moves polynomials that only involve the z1 slots into an n1-variable ring.
std::vector<Polynomial> restrict_to_z1(const SplitSystem& split, const std::vector<Polynomial>& polys);

}  // namespace polyred

#endif  // POLYRED_ELIMINATION_HPP
