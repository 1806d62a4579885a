#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "polyred/example_family.hpp"

using namespace polyred;
using namespace th;

namespace {

FamilyInstance make(unsigned d, std::vector<std::pair<unsigned, long>> a1, std::vector<std::pair<unsigned, long>> a2) {
  FamilyInstance inst = FamilyInstance::zero(d);
  for (auto [k, v] : a1) inst.a1[k] = v;
  for (auto [k, v] : a2) inst.a2[k] = v;
  return inst;
}

}  // namespace

TEST_SUITE("example-family") {
  TEST_CASE("family systems") {
    const FamilyInstance inst = make(2, {{1, 3}}, {{2, -1}});
    const PolySystem F = family_system(inst);
    CHECK(F[0] == z(2, 0) - mono({1, 1}, 3));
    CHECK(F[1] == z(2, 1) + mono({2, 0}));
    CHECK(F.degree_bound() == 2);
    CHECK(family_instance_from_system(F) == inst);
    CHECK_FALSE(family_instance_from_system(PolySystem(2, {z(2, 0) + mono({1, 1}), z(2, 1) - mono({3, 0})}, 3)));
    FamilyInstance bad = FamilyInstance::zero(2);
    bad.a1.pop_back();
    CHECK_THROWS_AS(family_system(bad), std::invalid_argument);
    CHECK_THROWS_AS(family_system(FamilyInstance::zero(1)), std::invalid_argument);
  }

  TEST_CASE("expanded determinant matches direct computation") {
    for (unsigned d = 2; d <= 4; ++d)
      for (unsigned k = 0; k <= d; ++k)
        for (unsigned l = 0; l <= d; ++l) {
          const FamilyInstance inst = make(d, {{k, 2}, {d - k, -1}}, {{l, 3}});
          CHECK(family_determinant_closed_form(inst) == det_poly(jacobian_matrix(family_system(inst))));
        }
  }

  TEST_CASE("specialized Jacobian") {
    const Polynomial cubic = specialized_jacobian(make(3, {{1, 1}}, {{3, 1}}));
    CHECK(cubic == k(1, 1) - mono({6}, 7));
    const Polynomial quad = specialized_jacobian(make(2, {{0, 1}}, {{2, 1}}));
    CHECK(quad == k(1, 1) - mono({3}, 4));
    for (unsigned d = 2; d <= 5; ++d)
      for (unsigned k = 0; k <= d; ++k) {
        const FamilyInstance inst = make(d, {{k, 2}}, {{d, -3}});
        CHECK(specialized_jacobian(inst) == specialized_jacobian_closed_form(inst));
      }
    CHECK_THROWS_AS(specialized_jacobian(make(2, {}, {{0, 1}})), std::invalid_argument);
  }

  TEST_CASE("displayed expansion") {
    const auto terms = compare_with_displayed_form(3);
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].actual_coefficient == Coefficient(-9));
    CHECK(terms[0].actual_exponent == 8);
    CHECK(terms[0].exponent_matches);
    CHECK_FALSE(terms[0].coefficient_matches);
    CHECK(terms[1].actual_exponent == 6);
    CHECK(terms[1].displayed_exponent == 2);
    CHECK_FALSE(terms[1].exponent_matches);
    CHECK(terms[1].coefficient_matches);
    CHECK(terms[3].actual_exponent == 2);
    CHECK(terms[3].displayed_exponent == -2);
  }

  TEST_CASE("closed-form conditions") {
    const FamilyInstance shear = make(2, {{0, 1}}, {});
    CHECK(closed_form_jlin_conditions(shear));
    CHECK(closed_form_partial_conditions(shear));
    const FamilyInstance twist = make(2, {{1, 1}}, {});
    CHECK_FALSE(closed_form_jlin_conditions(twist));
    CHECK(closed_form_partial_conditions(twist));
    const FamilyInstance tilted = make(3, {{1, 1}}, {{3, 1}});
    CHECK_FALSE(closed_form_partial_conditions(tilted));
    // z + 8 (z1 - z2)^2 (1, 1): nilpotent, det J_F = 1
    const FamilyInstance nil = make(2, {{0, -8}, {1, 16}, {2, -8}}, {{0, -8}, {1, 16}, {2, -8}});
    CHECK(closed_form_jlin_conditions(nil));
    CHECK(is_jlin(family_system(nil)).verdict == Verdict::member);
  }

  TEST_CASE("classification of instances") {
    const FamilyVerdicts twist = classify_family_instance(make(2, {{1, 1}}, {}));
    CHECK(twist.jlin == Verdict::non_member);
    CHECK(twist.jlin_partial == Verdict::member);
    CHECK(twist.j_partial == Verdict::member);
    CHECK(twist.j_partial_inverse == std::vector<Polynomial>{z(1, 0)});

    const FamilyVerdicts tilted = classify_family_instance(make(3, {{1, 1}}, {{3, 1}}));
    CHECK(tilted.jlin_partial == Verdict::non_member);
    CHECK(tilted.j_partial == Verdict::non_member);
  }

  TEST_CASE("closed forms agree with the classifiers on a sampled corpus") {
    for (unsigned d = 2; d <= 3; ++d) {
      const auto corpus = sample_family_corpus(d, 36, 7);
      REQUIRE(corpus.size() == 36);
      CHECK(corpus == sample_family_corpus(d, 36, 7));
      const FamilyReport report = equality_jlin_j_partial_check(corpus);
      CHECK(report.passed());
      CHECK_FALSE(report.partial_not_classical.empty());
    }
  }
}
