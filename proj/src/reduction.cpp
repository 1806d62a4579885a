#include "polyred/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polyred/inversion.hpp"

namespace polyred {

std::string to_string(PhiVariant v) { return v == PhiVariant::algebraic ? "algebraic" : "qft"; }

PhiVariant parse_phi_variant(const std::string& name) {
  if (name == "algebraic") return PhiVariant::algebraic;
  if (name == "qft") return PhiVariant::qft;
  throw std::invalid_argument("unknown variant '" + name + "' (expected algebraic or qft)");
}

namespace {

std::vector<std::size_t> iota_slots(std::size_t from, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), from);
  return out;
}

void require_square(const PolySystem& F, const char* who) {
  if (!F.is_square()) throw std::invalid_argument(std::string(who) + ": system is not square");
}

}  // namespace

ReducedSystem phi_algebraic(const PolySystem& F) {
  require_square(F, "phi_algebraic");
  const std::size_t n = F.nvars();
  const unsigned d = F.degree_bound();
  if (d < 3) throw std::invalid_argument("phi_algebraic: degree bound must be at least 3, got " + std::to_string(d));
  for (std::size_t i = 0; i < n; ++i)
    if (!F[i].constant_term().is_zero())
      throw std::invalid_argument("phi_algebraic: component " + std::to_string(i) + " has a constant part");

  const std::size_t N = n * (n + 1);
  const auto z1 = iota_slots(0, n);
  ReducedSystem out{PolySystem::identity(1), n, d, PhiVariant::algebraic};
  std::vector<Polynomial> comps(N, Polynomial(N));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t aux = out.flat_index(i, j);
      comps[i] += Polynomial::variable(N, aux) * Polynomial::variable(N, j);
      Polynomial a(n);
      for (unsigned c = 1; c <= d; ++c) {
        const Polynomial fc = homogeneous_part(F[i], c);
        if (!fc.is_zero()) a += partial_derivative(fc, j) * Coefficient::rational(1, c);
      }
      comps[aux] = Polynomial::variable(N, aux) - remap(a, N, z1);
    }
  }
  out.system = PolySystem(N, std::move(comps), d - 1);
  return out;
}

CouplingTensor phi_qft(const CouplingTensor& w, std::size_t n, unsigned d) {
  if (w.dim() != n) throw std::invalid_argument("phi_qft: coupling dimension does not match n");
  if (d < 3) throw std::invalid_argument("phi_qft: degree must be at least 3, got " + std::to_string(d));
  if (w.max_degree() > d) throw std::invalid_argument("phi_qft: couplings exceed degree " + std::to_string(d));
  if (!w.degree_vanishes(2)) throw std::invalid_argument("phi_qft: requires vanishing quadratic couplings");

  const std::size_t N = n * (n + 1);
  auto aux = [n](std::size_t i, std::size_t j) { return n + i * n + j; };
  CouplingTensor out(N, d - 1);
  for (const auto& [key, value] : w.entries()) {
    if (key.degree < d) {
      out.add(key.output, key.inputs, value);
      continue;
    }
    // (1/d) d_j of value * z^{inputs}
    for (std::size_t pos = 0; pos < key.inputs.size(); ++pos) {
      const std::size_t j = key.inputs[pos];
      if (pos > 0 && key.inputs[pos - 1] == j) continue;
      const auto mult = std::count(key.inputs.begin(), key.inputs.end(), j);
      std::vector<std::size_t> rest = key.inputs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      out.add(aux(key.output, j), rest, value * Coefficient::rational(mult, d));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.add(i, {j, aux(i, j)}, 1);
  return out;
}

ReducedSystem phi_qft_system(const PolySystem& F) {
  require_square(F, "phi_qft_system");
  const unsigned d = F.degree_bound();
  const CouplingTensor w = extract_couplings(F);
  ReducedSystem out{PolySystem::identity(1), F.nvars(), d, PhiVariant::qft};
  out.system = phi_qft(w, F.nvars(), d).to_system();
  return out;
}

ReducedSystem phi(const PolySystem& F, PhiVariant variant) {
  return variant == PhiVariant::algebraic ? phi_algebraic(F) : phi_qft_system(F);
}

ImageMembership is_in_image_of_phi(const PolySystem& Ft, std::size_t n, PhiVariant variant) {
  if (n == 0 || !Ft.is_square() || Ft.nvars() != n * (n + 1))
    throw std::invalid_argument("is_in_image_of_phi: expected a square system of dimension n(n+1) = " +
                                std::to_string(n * (n + 1)));
  const std::size_t N = Ft.nvars();
  const auto z2 = iota_slots(n, n * n);
  ImageMembership out;

  std::vector<Polynomial> a;
  for (std::size_t k = 0; k < z2.size(); ++k) {
    Polynomial ak = Polynomial::variable(N, z2[k]) - Ft[z2[k]];
    if (ak.degree_in(z2) > 0) {
      out.detail = "auxiliary component " + std::to_string(z2[k]) + " is not z2 minus a function of z1";
      return out;
    }
    a.push_back(std::move(ak));
  }
  const std::vector<Polynomial> first(Ft.components().begin(), Ft.components().begin() + static_cast<std::ptrdiff_t>(n));
  const auto h0 = substitute_active(first, z2, a);
  std::vector<Polynomial> source;
  std::vector<std::size_t> target(N, 0);
  std::iota(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(n), 0);
  for (const auto& h : h0) {
    if (h.degree_in(z2) > 0) {
      out.detail = "H(z1; 0) depends on the auxiliary block";
      return out;
    }
    source.push_back(remap(h, n, target));
  }
  const unsigned d = Ft.degree_bound() + 1;
  for (const auto& s : source)
    if (s.degree() > static_cast<int>(d)) {
      out.detail = "candidate preimage exceeds degree " + std::to_string(d);
      return out;
    }
  PolySystem candidate(n, source, d);
  try {
    if (phi(candidate, variant).system != Ft) {
      out.detail = "Phi(H(.; 0)) differs from the given system";
      return out;
    }
  } catch (const std::invalid_argument& e) {
    out.detail = std::string("candidate preimage rejected: ") + e.what();
    return out;
  }
  out.in_image = true;
  out.preimage = std::move(candidate);
  out.detail = "preimage recovered as H(z1; 0) and re-mapped exactly";
  return out;
}

bool TheoremReport::passed() const {
  return lin_agree && inv_agree && h_recovers_source && transport_constant.has_value() &&
         assembled_certified.value_or(true);
}

TheoremReport verify_theorem_main(const PolySystem& F, PhiVariant variant, std::optional<unsigned> degree_cap) {
  require_square(F, "verify_theorem_main");
  const std::size_t n = F.nvars();
  const ReducedSystem image = phi(F, variant);
  TheoremReport report;
  report.variant = variant;

  report.lin_source = is_jlin(F);
  report.lin_image = is_jlin_partial(image.system, n);
  report.lin_agree = report.lin_source.verdict == report.lin_image.verdict;

  try {
    report.inv_source = certify_polynomial_inverse(F, degree_cap);
  } catch (const std::domain_error&) {
    report.inv_source.verdict = Verdict::non_member;
    report.inv_source.witness = det_poly(jacobian_matrix(F));
    report.inv_source.detail = "linear part at the origin is singular";
  }
  report.inv_image = is_j_partial(image.system, n, degree_cap);
  report.inv_agree = report.inv_source.verdict == report.inv_image.verdict;

  const SplitSystem sp = split(image.system, n);
  const PartialInverse rinv = invert_R(sp);
  if (!rinv.certified) {
    report.detail = "R of the image is not certified: " + rinv.detail;
    return report;
  }
  auto h = build_H(sp, rinv);
  for (auto& p : h) p = substitute_zero(p, sp.z2_slots());
  report.h_recovers_source = restrict_to_z1(sp, h) == F.components();

  const Polynomial det_F = det_poly(jacobian_matrix(F));
  const Polynomial on_variety = restrict_to_z1(sp, {*report.lin_image.witness}).front();
  if (det_F.is_zero()) {
    if (on_variety.is_zero()) report.transport_constant = Coefficient(1);
  } else {
    const auto& [m, c] = *det_F.terms().begin();
    const Coefficient ratio = on_variety.coefficient(m) / c;
    if (on_variety == det_F * ratio) report.transport_constant = ratio;
  }

  if (report.inv_image.verdict == Verdict::member)
    report.assembled_certified = assemble_restricted_inverse(sp, report.inv_image.inverse, rinv).certified;

  report.detail = std::string("lin: ") + to_string(report.lin_source.verdict) + "/" +
                  to_string(report.lin_image.verdict) + ", inv: " + to_string(report.inv_source.verdict) + "/" +
                  to_string(report.inv_image.verdict);
  if (report.transport_constant) report.detail += ", transport constant " + report.transport_constant->to_string();
  return report;
}

}  // namespace polyred
