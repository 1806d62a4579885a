#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "polyred/elimination.hpp"
#include "polyred/random.hpp"

using namespace polyred;
using namespace th;

namespace {

PolySystem sys(std::size_t n, std::vector<Polynomial> c) { return PolySystem(n, std::move(c)); }

}  // namespace

TEST_SUITE("elimination") {
  TEST_CASE("splitting") {
    const PolySystem S = sys(3, {z(3, 0), z(3, 1) + mono({2, 0, 0}), z(3, 2)});
    const SplitSystem sp = split(S, 1);
    CHECK(sp.n1() == 1);
    CHECK(sp.n2() == 2);
    CHECK(sp.z2_slots() == std::vector<std::size_t>{1, 2});
    CHECK(sp.first_block() == std::vector<Polynomial>{z(3, 0)});
    CHECK(sp.R().size() == 2);
    CHECK_THROWS_AS(split(S, 4), std::out_of_range);
    CHECK_THROWS_AS(split(PolySystem(2, {z(2, 0)}), 1), std::invalid_argument);
  }

  TEST_CASE("shear example") {
    // S = (z1 + z2^2, z2): R = z2, H = z1 + y2^2
    const PolySystem S = sys(2, {z(2, 0) + mono({0, 2}), z(2, 1)});
    const SplitSystem sp = split(S, 1);
    const PartialInverse rinv = invert_R(sp);
    REQUIRE(rinv.certified);
    CHECK(rinv.Rinv == std::vector<Polynomial>{z(2, 1)});
    const auto H = build_H(sp, rinv);
    CHECK(H == std::vector<Polynomial>{z(2, 0) + mono({0, 2})});
    const SchurReport schur = schur_identity_check(sp, rinv);
    CHECK(schur.holds);
    CHECK(schur.det_H == k(2, 1));

    const AssembledInverse inv = assemble_inverse(sp, {z(2, 0) - mono({0, 2})}, rinv);
    CHECK(inv.certified);
    CHECK(inv.inverse == std::vector<Polynomial>{z(2, 0) - mono({0, 2}), z(2, 1)});
    const AssembledInverse wrong = assemble_inverse(sp, {z(2, 0)}, rinv);
    CHECK_FALSE(wrong.certified);
    CHECK(wrong.residual);
  }

  TEST_CASE("parameter-dependent R") {
    // S = (z1 + z2, z2 + z1^2): Rinv = y2 - z1^2, H = z1 + y2 - z1^2
    const PolySystem S = sys(2, {z(2, 0) + z(2, 1), z(2, 1) + mono({2, 0})});
    const SplitSystem sp = split(S, 1);
    const PartialInverse rinv = invert_R(sp);
    REQUIRE(rinv.certified);
    CHECK(rinv.Rinv.front() == z(2, 1) - mono({2, 0}));
    CHECK(build_H(sp, rinv).front() == z(2, 0) + z(2, 1) - mono({2, 0}));
    const SchurReport schur = schur_identity_check(sp, rinv);
    CHECK(schur.holds);
    CHECK(schur.lhs == k(2, 1) - mono({1, 0}, 2));
    CHECK(is_jlin_partial(S, 1).verdict == Verdict::non_member);
    CHECK(is_j_partial(S, 1).verdict == Verdict::non_member);
  }

  TEST_CASE("non-invertible R") {
    const PolySystem S = sys(2, {z(2, 0), z(2, 1) + mono({0, 2})});
    const SplitSystem sp = split(S, 1);
    const PartialInverse rinv = invert_R(sp);
    CHECK_FALSE(rinv.certified);
    CHECK(rinv.status == InverseStatus::not_invertible);
    CHECK_THROWS_AS(build_H(sp, rinv), std::logic_error);
    CHECK(is_jlin_partial(S, 1).verdict == Verdict::non_member);
  }

  TEST_CASE("partial membership without classical membership") {
    // F = (z1 - z1 z2, z2): det J_F = 1 - z2, but H(z1; 0) = z1
    const PolySystem F = sys(2, {z(2, 0) - mono({1, 1}), z(2, 1)});
    CHECK(is_jlin(F).verdict == Verdict::non_member);
    const MembershipVerdict lin = is_jlin_partial(F, 1);
    CHECK(lin.verdict == Verdict::member);
    CHECK(*lin.constant == Coefficient(1));
    const MembershipVerdict j = is_j_partial(F, 1);
    REQUIRE(j.verdict == Verdict::member);
    CHECK(j.inverse == std::vector<Polynomial>{z(1, 0)});

    const SplitSystem sp = split(F, 1);
    const PartialInverse rinv = invert_R(sp);
    const AssembledInverse r = assemble_restricted_inverse(sp, j.inverse, rinv);
    CHECK(r.certified);
  }

  TEST_CASE("edge splits") {
    const PolySystem S = sys(2, {z(2, 0) + mono({0, 2}), z(2, 1)});
    CHECK(is_j_partial(S, 0).verdict == Verdict::member);
    CHECK(is_jlin_partial(S, 0).verdict == Verdict::member);
    const MembershipVerdict full = is_j_partial(S, 2);
    REQUIRE(full.verdict == Verdict::member);
    CHECK(full.inverse == std::vector<Polynomial>{z(2, 0) - mono({0, 2}), z(2, 1)});
    CHECK(schur_identity_check(split(S, 0), invert_R(split(S, 0))).holds);
    CHECK(schur_identity_check(split(S, 2), invert_R(split(S, 2))).holds);
  }

  TEST_CASE("Schur identity on random triangular systems") {
    for (std::uint64_t id = 0; id < 12; ++id) {
      auto rng = make_rng(31, id);
      const std::size_t n = 2 + id % 2;
      const PolySystem S = random_triangular(rng, n, 3);
      for (std::size_t n1 = 0; n1 <= n; ++n1) {
        const SplitSystem sp = split(S, n1);
        const PartialInverse rinv = invert_R(sp);
        REQUIRE(rinv.certified);
        CHECK(schur_identity_check(sp, rinv).holds);
        CHECK(is_j_partial(S, n1).verdict == Verdict::member);
      }
    }
  }

  TEST_CASE("restriction to the first block") {
    const PolySystem S = sys(2, {z(2, 0), z(2, 1)});
    const SplitSystem sp = split(S, 1);
    CHECK(restrict_to_z1(sp, {mono({2, 0})}) == std::vector<Polynomial>{mono({2})});
    CHECK_THROWS_AS(restrict_to_z1(sp, {z(2, 1)}), std::invalid_argument);
  }
}
