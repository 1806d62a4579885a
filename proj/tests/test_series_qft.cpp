#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "polyred/random.hpp"
#include "polyred/series_qft.hpp"

using namespace polyred;
using namespace th;

namespace {

CouplingTensor single(unsigned degree, const Coefficient& value) {
  CouplingTensor w(1, degree);
  w.set(0, std::vector<std::size_t>(degree, 0), value);
  return w;
}

}  // namespace

TEST_SUITE("series-qft") {
  TEST_CASE("binary trees are counted by Catalan numbers") {
    const auto counts = tree_counts_by_weight(2, 6);
    CHECK(counts == std::vector<std::size_t>{0, 1, 2, 5, 14, 42, 132});
    CHECK_THROWS_AS(enumerate_trees(1, 3), std::invalid_argument);
  }

  TEST_CASE("ternary trees up to weight two") {
    const auto trees = enumerate_trees(3, 2);
    REQUIRE(trees.size() == 4);
    CHECK(trees[0].to_string() == "[u u]");
    CHECK(tree_counts_by_weight(3, 2) == std::vector<std::size_t>{0, 1, 3});
    for (const auto& t : trees) CHECK(t.theta_weight() >= 1);
    CHECK(trees[0].size() == 1);
  }

  TEST_CASE("tree amplitudes") {
    const CouplingTensor w = single(2, q(3));
    const PlaneTree leaf{};
    const PlaneTree cherry{{leaf, leaf}};
    const PlaneTree comb{{cherry, leaf}};
    CHECK(tree_amplitude(leaf, w).front() == z(1, 0));
    CHECK(tree_amplitude(cherry, w).front() == mono({2}, 3));
    CHECK(tree_amplitude(comb, w).front() == mono({3}, 9));

    // symmetric storage: monomial coefficient 2 spreads to full entries 1, 1
    CouplingTensor mix(2, 2);
    mix.set(0, {0, 1}, 2);
    const auto a = tree_amplitude(cherry, mix);
    CHECK(a[0] == mono({1, 1}, 2));
    CHECK(a[1].is_zero());
  }

  TEST_CASE("fixed point inverse of a quadratic map") {
    // z - a z^2 inverts to u + a u^2 + 2 a^2 u^3 + 5 a^3 u^4
    const CouplingTensor w = single(2, q(1, 2));
    const GradedSeriesVector G = formal_inverse_fixed_point(w, 3);
    CHECK(G[0].grade(0) == z(1, 0));
    CHECK(G[0].grade(1) == mono({2}, q(1, 2)));
    CHECK(G[0].grade(2) == mono({3}, q(1, 2)));
    CHECK(G[0].grade(3) == mono({4}, q(5, 8)));
    CHECK(inversion_defect(w, G).holds);
    CHECK(tree_oracle_inverse(w, 3) == G);
  }

  TEST_CASE("defect of a truncated inverse") {
    const CouplingTensor w = single(2, 1);
    const GradedSeriesVector G({GradedSeries::monomial(z(1, 0), 3)});
    const SeriesCheck c = inversion_defect(w, G);
    CHECK_FALSE(c.holds);
    REQUIRE(c.first_bad_grade);
    CHECK(*c.first_bad_grade == 1);
  }

  TEST_CASE("tree oracle on random couplings") {
    for (std::uint64_t id = 0; id < 6; ++id) {
      auto rng = make_rng(51, id);
      const CouplingTensor w = random_couplings(rng, 2, 2 + id % 2, false);
      CHECK(tree_oracle_inverse(w, 4) == formal_inverse_fixed_point(w, 4));
    }
  }

  TEST_CASE("log partition function") {
    const GradedSeries quad = log_partition_function(single(2, q(5)), 3);
    CHECK(quad.grade(0).is_zero());
    CHECK(quad.grade(1) == mono({1}, 10));
    const GradedSeries cubic = log_partition_function(single(3, q(5)), 3);
    CHECK(cubic.grade(1).is_zero());
    CHECK(cubic.grade(2) == mono({2}, 15));
  }

  TEST_CASE("Z times the determinant is one") {
    for (std::uint64_t id = 0; id < 6; ++id) {
      auto rng = make_rng(52, id);
      const CouplingTensor w = random_couplings(rng, 1 + id % 2, 3, false);
      const PartitionReport r = z_det_identity_check(w, 4);
      CHECK(r.z_det.holds);
      CHECK(r.log_det_agrees);
      CHECK(r.det.grade(0) == k(w.dim(), 1));
    }
  }

  TEST_CASE("reduced inverse matches the source inverse") {
    for (std::uint64_t id = 0; id < 4; ++id) {
      auto rng = make_rng(53, id);
      const CouplingTensor w = random_couplings(rng, 1 + id % 2, 3 + id % 2, true);
      CHECK(reduced_inverse_check(w, 4).holds());
    }
    CHECK_THROWS_AS(reduced_inverse_check(single(2, 1), 3), std::invalid_argument);
  }

  TEST_CASE("theta homogeneity") {
    auto rng = make_rng(54, 0);
    const CouplingTensor w = random_couplings(rng, 2, 3, false);
    CHECK(theta_homogeneity_check(w, 4, q(2)).holds);
    CHECK(theta_homogeneity_check(w, 4, q(-1, 3)).holds);
    CHECK(theta_homogeneity_check(w, 4, Coefficient(mpq_class(0), mpq_class(1))).holds);
    CHECK_THROWS_AS(theta_homogeneity_check(w, 4, 0), std::invalid_argument);
  }
}
