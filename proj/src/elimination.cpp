#include "polyred/elimination.hpp"

#include <stdexcept>

namespace polyred {

SplitSystem::SplitSystem(PolySystem S, std::size_t n1) : S_(std::move(S)), n1_(n1) {
  if (!S_.is_square()) throw std::invalid_argument("split: system is not square");
  if (n1_ > S_.nvars())
    throw std::out_of_range("split: n1 = " + std::to_string(n1_) + " exceeds dimension " + std::to_string(S_.nvars()));
  for (std::size_t k = 0; k < S_.nvars(); ++k) (k < n1_ ? z1_ : z2_).push_back(k);
}

std::vector<Polynomial> SplitSystem::first_block() const {
  return {S_.components().begin(), S_.components().begin() + static_cast<std::ptrdiff_t>(n1_)};
}

std::vector<Polynomial> SplitSystem::R() const {
  return {S_.components().begin() + static_cast<std::ptrdiff_t>(n1_), S_.components().end()};
}

SplitSystem split(const PolySystem& S, std::size_t n1) { return SplitSystem(S, n1); }

PartialInverse invert_R(const SplitSystem& split, std::optional<unsigned> degree_cap) {
  const auto R = split.R();
  const InversionResult inv = invert_map(R, split.z2_slots(), degree_cap);
  PartialInverse out;
  out.status = inv.status;
  out.certified = inv.status == InverseStatus::certified;
  out.Rinv = inv.inverse;
  out.route = inv.route;
  out.witness = inv.witness;
  out.detail = inv.detail;
  return out;
}

std::vector<Polynomial> build_H(const SplitSystem& split, const PartialInverse& rinv) {
  if (!rinv.certified) throw std::logic_error("build_H: R^{-1} is not certified");
  return substitute_active(split.first_block(), split.z2_slots(), rinv.Rinv);
}

namespace {

std::vector<Polynomial> at_y2_zero(const SplitSystem& split, const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(substitute_zero(p, split.z2_slots()));
  return out;
}

}  // namespace

std::vector<Polynomial> restrict_to_z1(const SplitSystem& split, const std::vector<Polynomial>& polys) {
  std::vector<std::size_t> target(split.dim(), 0);
  for (std::size_t k = 0; k < split.n1(); ++k) target[split.z1_slots()[k]] = k;
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.degree_in(split.z2_slots()) > 0)
      throw std::invalid_argument("restrict_to_z1: polynomial depends on the second block");
    out.push_back(remap(p, split.n1(), target));
  }
  return out;
}

SchurReport schur_identity_check(const SplitSystem& split, const PartialInverse& rinv) {
  if (!rinv.certified) throw std::logic_error("schur_identity_check: R^{-1} is not certified");
  const PolySystem& S = split.system();
  const std::size_t N = split.dim();
  const Polynomial det_S = det_poly(jacobian_matrix(S));
  const auto R = split.R();
  const Polynomial det_R_z = det_poly(jacobian_matrix(R, split.z2_slots()));
  const auto H = build_H(split, rinv);

  SchurReport report;
  if (split.n2() == 0) {
    report.lhs = det_S;
    report.det_R = Polynomial::constant(N, 1);
  } else {
    report.lhs = substitute_active(std::vector<Polynomial>{det_S}, split.z2_slots(), rinv.Rinv).front();
    report.det_R = substitute_active(std::vector<Polynomial>{det_R_z}, split.z2_slots(), rinv.Rinv).front();
  }
  report.det_H = split.n1() == 0 ? Polynomial::constant(N, 1) : det_poly(jacobian_matrix(H, split.z1_slots()));
  report.difference = report.lhs - report.det_R * report.det_H;
  report.holds = report.difference.is_zero();
  return report;
}

namespace {

MembershipVerdict verdict_from_failed_R(const PartialInverse& rinv) {
  MembershipVerdict v;
  v.verdict = rinv.status == InverseStatus::not_invertible ? Verdict::non_member : Verdict::undetermined;
  v.witness = rinv.witness;
  v.detail = "R(.; z1) not certified invertible for all z1: " + rinv.detail;
  return v;
}

}  // namespace

MembershipVerdict is_jlin_partial(const PolySystem& F, std::size_t n1) {
  const SplitSystem sp = split(F, n1);
  const PartialInverse rinv = invert_R(sp);
  if (!rinv.certified) return verdict_from_failed_R(rinv);

  const Polynomial det_F = det_poly(jacobian_matrix(F));
  Polynomial on_variety = det_F;
  if (sp.n2() > 0) {
    const auto rinv0 = at_y2_zero(sp, rinv.Rinv);
    on_variety = substitute_active(std::vector<Polynomial>{det_F}, sp.z2_slots(), rinv0).front();
  }
  MembershipVerdict v;
  v.constant = on_variety.constant_term();
  v.witness = on_variety;
  if (on_variety.is_constant() && !on_variety.is_zero()) {
    v.verdict = Verdict::member;
    v.detail = "det J_F(z1, R^{-1}(0; z1)) = " + on_variety.to_string();
  } else {
    v.verdict = Verdict::non_member;
    v.detail = "det J_F(z1, R^{-1}(0; z1)) = " + on_variety.to_string() + " is not a nonzero constant";
  }
  return v;
}

MembershipVerdict is_j_partial(const PolySystem& F, std::size_t n1, std::optional<unsigned> degree_cap) {
  const SplitSystem sp = split(F, n1);
  const PartialInverse rinv = invert_R(sp);
  if (!rinv.certified) return verdict_from_failed_R(rinv);

  MembershipVerdict v;
  if (n1 == 0) {
    v.verdict = Verdict::member;
    v.detail = "n1 = 0: R invertible for all (no) parameters";
    return v;
  }
  const auto H0 = restrict_to_z1(sp, at_y2_zero(sp, build_H(sp, rinv)));
  const PolySystem h0(n1, H0);
  const Polynomial det_H0 = det_poly(jacobian_matrix(h0));
  if (!det_H0.is_constant() || det_H0.is_zero()) {
    v.verdict = Verdict::non_member;
    v.witness = det_H0;
    v.detail = "det J_{H(.;0)} = " + det_H0.to_string() + " is not a nonzero constant";
    return v;
  }
  MembershipVerdict h = certify_polynomial_inverse(h0, degree_cap);
  h.detail = "H(.;0) inversion: " + h.detail;
  return h;
}

AssembledInverse assemble_inverse(const SplitSystem& split, const std::vector<Polynomial>& Hinv,
                                  const PartialInverse& rinv) {
  if (!rinv.certified) throw std::logic_error("assemble_inverse: R^{-1} is not certified");
  if (Hinv.size() != split.n1()) throw std::invalid_argument("assemble_inverse: H^{-1} has wrong length");
  AssembledInverse out;
  out.inverse = Hinv;
  const auto second = substitute_active(rinv.Rinv, split.z1_slots(), Hinv);
  out.inverse.insert(out.inverse.end(), second.begin(), second.end());

  const auto& S = split.system().components();
  const auto vars = ring_variables(split.dim());
  const auto forward = compose(std::span<const Polynomial>(S), std::span<const Polynomial>(out.inverse));
  const auto backward = compose(std::span<const Polynomial>(out.inverse), std::span<const Polynomial>(S));
  for (std::size_t k = 0; k < split.dim(); ++k) {
    if (forward[k] != vars[k]) {
      out.residual = forward[k] - vars[k];
      out.detail = "S(S^{-1}(y)) differs from y in component " + std::to_string(k);
      return out;
    }
    if (backward[k] != vars[k]) {
      out.residual = backward[k] - vars[k];
      out.detail = "S^{-1}(S(z)) differs from z in component " + std::to_string(k);
      return out;
    }
  }
  out.certified = true;
  out.detail = "S^{-1} certified by two-sided composition";
  return out;
}

AssembledInverse assemble_restricted_inverse(const SplitSystem& split, const std::vector<Polynomial>& Hinv0,
                                             const PartialInverse& rinv) {
  if (!rinv.certified) throw std::logic_error("assemble_restricted_inverse: R^{-1} is not certified");
  if (Hinv0.size() != split.n1()) throw std::invalid_argument("assemble_restricted_inverse: H^{-1} has wrong length");
  const std::size_t N = split.dim();
  std::vector<Polynomial> first;
  for (const auto& h : Hinv0) {
    if (h.nvars() != split.n1()) throw std::invalid_argument("assemble_restricted_inverse: H^{-1} must use n1 variables");
    first.push_back(remap(h, N, split.z1_slots()));
  }
  AssembledInverse out;
  out.inverse = first;
  const auto second = substitute_active(at_y2_zero(split, rinv.Rinv), split.z1_slots(), first);
  out.inverse.insert(out.inverse.end(), second.begin(), second.end());

  const auto& S = split.system().components();
  const auto forward = compose(std::span<const Polynomial>(S), std::span<const Polynomial>(out.inverse));
  for (std::size_t k = 0; k < N; ++k) {
    const Polynomial expected = k < split.n1() ? Polynomial::variable(N, k) : Polynomial(N);
    if (forward[k] != expected) {
      out.residual = forward[k] - expected;
      out.detail = "S(S^{-1}(y1, 0)) differs from (y1, 0) in component " + std::to_string(k);
      return out;
    }
  }
  const auto H0 = at_y2_zero(split, build_H(split, rinv));
  const auto back = substitute_active(first, split.z1_slots(), H0);
  for (std::size_t k = 0; k < split.n1(); ++k)
    if (back[k] != Polynomial::variable(N, k)) {
      out.residual = back[k] - Polynomial::variable(N, k);
      out.detail = "H^{-1}(H(z1; 0); 0) differs from z1 in component " + std::to_string(k);
      return out;
    }
  out.certified = true;
  out.detail = "S^{-1}(y1, 0) certified on the slice y2 = 0";
  return out;
}

}  // namespace polyred
