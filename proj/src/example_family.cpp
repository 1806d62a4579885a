#include "polyred/example_family.hpp"

#include <stdexcept>

#include "polyred/elimination.hpp"
#include "polyred/random.hpp"

namespace polyred {

FamilyInstance FamilyInstance::zero(unsigned d) {
  return FamilyInstance{d, std::vector<Coefficient>(d + 1), std::vector<Coefficient>(d + 1)};
}

namespace {

void validate(const FamilyInstance& inst) {
  if (inst.d < 2) throw std::invalid_argument("family: d must be at least 2");
  if (inst.a1.size() != inst.d + 1 || inst.a2.size() != inst.d + 1)
    throw std::invalid_argument("family: coefficient vectors must have d + 1 entries");
}

Monomial mono2(unsigned e1, unsigned e2) { return Monomial(std::vector<std::uint32_t>{e1, e2}); }

Monomial mono1(unsigned e) { return Monomial(std::vector<std::uint32_t>{e}); }

}  // namespace

PolySystem family_system(const FamilyInstance& inst) {
  validate(inst);
  Polynomial f1 = Polynomial::variable(2, 0);
  Polynomial f2 = Polynomial::variable(2, 1);
  for (unsigned k = 0; k <= inst.d; ++k) {
    f1.add_term(mono2(k, inst.d - k), -inst.a1[k]);
    f2.add_term(mono2(k, inst.d - k), -inst.a2[k]);
  }
  return PolySystem(2, {f1, f2}, inst.d);
}

std::optional<FamilyInstance> family_instance_from_system(const PolySystem& F) {
  if (F.nvars() != 2 || F.size() != 2 || F.degree_bound() < 2) return std::nullopt;
  FamilyInstance inst = FamilyInstance::zero(F.degree_bound());
  for (std::size_t i = 0; i < 2; ++i) {
    const Polynomial rest = Polynomial::variable(2, i) - F[i];
    for (const auto& [m, c] : rest.terms()) {
      if (m.degree() != inst.d) return std::nullopt;
      (i == 0 ? inst.a1 : inst.a2)[m[0]] = c;
    }
  }
  return inst;
}

bool closed_form_jlin_conditions(const FamilyInstance& inst) {
  validate(inst);
  const long d = inst.d;
  for (long k = 0; k < d; ++k)
    if (!(inst.a1[k + 1] * Coefficient(k + 1) + inst.a2[k] * Coefficient(d - k)).is_zero()) return false;
  for (long m = 1; m <= 2 * d; ++m) {
    Coefficient sum;
    for (long k = std::max(0L, m - d); k <= std::min(d, m); ++k)
      sum += inst.a1[k] * inst.a2[m - k] * Coefficient(d * (2 * k - m));
    if (!sum.is_zero()) return false;
  }
  return true;
}

bool closed_form_partial_conditions(const FamilyInstance& inst) {
  validate(inst);
  const unsigned d = inst.d;
  for (unsigned k = 0; k < d; ++k)
    if (!inst.a2[k].is_zero()) return false;
  if (!inst.a1[d].is_zero()) return false;
  for (unsigned k = 0; k < d; ++k)
    if (!inst.a1[k].is_zero() && !inst.a2[d].is_zero()) return false;
  return true;
}

Polynomial family_determinant_closed_form(const FamilyInstance& inst) {
  validate(inst);
  const long d = inst.d;
  Polynomial det = Polynomial::constant(2, 1);
  for (long k = 0; k < d; ++k)
    det.add_term(mono2(k, d - 1 - k), -(inst.a1[k + 1] * Coefficient(k + 1) + inst.a2[k] * Coefficient(d - k)));
  for (long k = 0; k <= d; ++k)
    for (long l = 0; l <= d; ++l) {
      if (k + l == 0 || k + l == 2 * d) continue;  // coefficient d(k-l) vanishes there
      det.add_term(mono2(k + l - 1, 2 * d - k - l - 1), inst.a1[k] * inst.a2[l] * Coefficient(d * (k - l)));
    }
  return det;
}

Polynomial specialized_jacobian(const FamilyInstance& inst) {
  validate(inst);
  for (unsigned k = 0; k < inst.d; ++k)
    if (!inst.a2[k].is_zero())
      throw std::invalid_argument("specialized_jacobian: requires a2[k] = 0 for k < d (k = " + std::to_string(k) + ")");
  const Polynomial det = det_poly(jacobian_matrix(family_system(inst)));
  const Polynomial z1 = Polynomial::variable(1, 0);
  const std::vector<Polynomial> subs{z1, pow(z1, inst.d) * inst.a2[inst.d]};
  return compose(det, subs);
}

Polynomial specialized_jacobian_closed_form(const FamilyInstance& inst) {
  validate(inst);
  const long d = inst.d;
  Polynomial out = Polynomial::constant(1, 1);
  for (long k = 0; k <= d; ++k)
    out.add_term(mono1(static_cast<unsigned>((d - 1) * (d + 1 - k))),
                 inst.a1[k] * pow(inst.a2[d], static_cast<unsigned>(d - k)) * Coefficient(k * (d - 1) - d * d));
  return out;
}

std::vector<DisplayedTerm> compare_with_displayed_form(unsigned d) {
  std::vector<DisplayedTerm> out;
  const long dl = d;
  for (unsigned k = 0; k <= d; ++k) {
    FamilyInstance inst = FamilyInstance::zero(d);
    inst.a1[k] = 1;
    inst.a2[d] = 1;
    const Polynomial spec = specialized_jacobian(inst) - Polynomial::constant(1, 1);
    DisplayedTerm t;
    t.k = k;
    if (spec.size() == 1) {
      const auto& [m, c] = *spec.terms().begin();
      t.actual_exponent = m[0];
      t.actual_coefficient = c;
    }
    if (k == 0) {
      t.displayed_coefficient = 1;
      t.displayed_exponent = (dl - 1) * (dl + 1);
    } else {
      t.displayed_coefficient = static_cast<long>(k) * (dl - 1) - dl * dl;
      t.displayed_exponent = (dl - 1) * (dl - 1 - static_cast<long>(k));
    }
    t.coefficient_matches = spec.size() == 1 && t.actual_coefficient == Coefficient(t.displayed_coefficient);
    t.exponent_matches =
        spec.size() == 1 && t.displayed_exponent >= 0 && static_cast<long>(t.actual_exponent) == t.displayed_exponent;
    out.push_back(t);
  }
  return out;
}

FamilyVerdicts classify_family_instance(const FamilyInstance& inst) {
  const PolySystem F = family_system(inst);
  FamilyVerdicts v;
  v.instance = inst;
  v.jlin = is_jlin(F).verdict;
  const MembershipVerdict lin = is_jlin_partial(F, 1);
  v.jlin_partial = lin.verdict;
  v.jlin_partial_witness = lin.witness;
  const MembershipVerdict j = is_j_partial(F, 1);
  v.j_partial = j.verdict;
  v.j_partial_inverse = j.inverse;
  v.closed_jlin = closed_form_jlin_conditions(inst);
  v.closed_partial = closed_form_partial_conditions(inst);
  return v;
}

FamilyReport equality_jlin_j_partial_check(const std::vector<FamilyInstance>& corpus) {
  FamilyReport report;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    FamilyVerdicts v = classify_family_instance(corpus[idx]);
    const bool jlin = v.jlin == Verdict::member;
    const bool partial = v.jlin_partial == Verdict::member;
    if (v.closed_jlin != jlin) ++report.jlin_mismatches;
    if (v.closed_partial != partial) ++report.partial_mismatches;
    if (v.jlin_partial != v.j_partial) ++report.lin_vs_j_mismatches;
    if (partial && !jlin) report.partial_not_classical.push_back(idx);
    if (jlin && !partial) report.classical_not_partial.push_back(idx);
    report.instances.push_back(std::move(v));
  }
  return report;
}

std::vector<FamilyInstance> sample_family_corpus(unsigned d, std::size_t count, std::uint64_t seed) {
  std::vector<FamilyInstance> corpus;
  corpus.reserve(count);
  for (std::size_t id = 0; id < count; ++id) {
    auto rng = make_rng(seed, id);
    FamilyInstance inst = FamilyInstance::zero(d);
    auto maybe = [&](double p) { return std::bernoulli_distribution(p)(rng); };
    switch (id % 6) {
      case 0:
        for (unsigned k = 0; k <= d; ++k) {
          inst.a1[k] = pool_rational(rng);
          inst.a2[k] = pool_rational(rng);
        }
        break;
      case 1:
        for (unsigned k = 0; k <= d; ++k) {
          if (maybe(0.5)) inst.a1[k] = dense_rational(rng);
          if (maybe(0.5)) inst.a2[k] = dense_rational(rng);
        }
        break;
      case 2:
        inst.a2[d] = nonzero_rational(rng);
        if (maybe(0.3)) inst.a2[d - 1] = pool_rational(rng);
        if (maybe(0.5)) inst.a1[static_cast<std::size_t>(uniform_int(rng, 0, d))] = pool_rational(rng);
        break;
      case 3:
        for (unsigned k = 0; k < d; ++k)
          if (maybe(0.6)) inst.a1[k] = nonzero_rational(rng);
        if (maybe(0.3)) inst.a1[d] = pool_rational(rng);
        break;
      case 4:
        inst = *family_instance_from_system(random_nilpotent_member(rng, d));
        break;
      default:
        inst.a2[d] = pool_rational(rng);
        for (unsigned k = 0; k <= d; ++k)
          if (maybe(0.4)) inst.a1[k] = pool_rational(rng);
        break;
    }
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

}  // namespace polyred
