#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "polyred/random.hpp"
#include "polyred/reduction.hpp"

using namespace polyred;
using namespace th;

namespace {

PolySystem sys(std::size_t n, std::vector<Polynomial> c, unsigned d) { return PolySystem(n, std::move(c), d); }

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("variant names") {
    CHECK(parse_phi_variant("qft") == PhiVariant::qft);
    CHECK(to_string(PhiVariant::algebraic) == "algebraic");
    CHECK_THROWS_AS(parse_phi_variant("other"), std::invalid_argument);
  }

  TEST_CASE("algebraic map in one variable") {
    // F = z - 2 z^3 -> (z1 z2, z2 - 1 + 2 z1^2)
    const PolySystem F = sys(1, {z(1, 0) - mono({3}, 2)}, 3);
    const ReducedSystem r = phi_algebraic(F);
    CHECK(r.system.nvars() == 2);
    CHECK(r.system.degree_bound() == 2);
    CHECK(r.flat_index(0, 0) == 1);
    CHECK(r.system[0] == mono({1, 1}));
    CHECK(r.system[1] == z(2, 1) - k(2, 1) + mono({2, 0}, 2));
  }

  TEST_CASE("algebraic map in two variables") {
    const PolySystem F = sys(2, {z(2, 0) + mono({0, 3}), z(2, 1)}, 3);
    const ReducedSystem r = phi_algebraic(F);
    CHECK(r.system.nvars() == 6);
    CHECK(r.flat_index(1, 0) == 4);
    CHECK(r.system[0] == mono({1, 0, 1, 0, 0, 0}) + mono({0, 1, 0, 1, 0, 0}));
    // aux(0,1): z2_01 - d_1(z2^3)/3
    CHECK(r.system[3] == z(6, 3) - mono({0, 2, 0, 0, 0, 0}));
    CHECK(r.system[2] == z(6, 2) - k(6, 1));
  }

  TEST_CASE("qft map in one variable") {
    // w_{0,000} = 2 -> aux output quadratic 2, unit coupling (0, {0, aux})
    const PolySystem F = sys(1, {z(1, 0) - mono({3}, 2)}, 3);
    const ReducedSystem r = phi_qft_system(F);
    CHECK(r.system.degree_bound() == 2);
    CHECK(r.system[0] == z(2, 0) - mono({1, 1}));
    CHECK(r.system[1] == z(2, 1) - mono({2, 0}, 2));
  }

  TEST_CASE("qft keeps lower couplings") {
    CouplingTensor w(1, 4);
    w.set(0, {0, 0, 0}, 5);
    w.set(0, {0, 0, 0, 0}, 4);
    const CouplingTensor t = phi_qft(w, 1, 4);
    CHECK(t.get(0, {0, 0, 0}) == Coefficient(5));
    CHECK(t.get(1, {0, 0, 0}) == Coefficient(4));
    CHECK(t.get(0, {0, 1}) == Coefficient(1));
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(phi_algebraic(sys(1, {z(1, 0) - mono({2})}, 2)), std::invalid_argument);
    CHECK_THROWS_AS(phi_algebraic(sys(1, {z(1, 0) + k(1, 1) - mono({3})}, 3)), std::invalid_argument);
    CouplingTensor quad(1, 3);
    quad.set(0, {0, 0}, 1);
    CHECK_THROWS_AS(phi_qft(quad, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(phi_qft(CouplingTensor(2, 3), 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(is_in_image_of_phi(PolySystem::identity(3), 1, PhiVariant::algebraic), std::invalid_argument);
  }

  TEST_CASE("image membership round trip") {
    for (std::uint64_t id = 0; id < 24; ++id) {
      auto rng = make_rng(41, id);
      const std::size_t n = 1 + id % 3;
      const unsigned d = 3 + static_cast<unsigned>((id / 3) % 3);
      const PolySystem F = random_couplings(rng, n, d, true).to_system();
      for (PhiVariant v : {PhiVariant::algebraic, PhiVariant::qft}) {
        const ReducedSystem r = phi(F, v);
        const ImageMembership m = is_in_image_of_phi(r.system, n, v);
        REQUIRE(m.in_image);
        CHECK(*m.preimage == F);
      }
    }
  }

  TEST_CASE("perturbed systems leave the image") {
    const PolySystem F = sys(1, {z(1, 0) - mono({3}, 2)}, 3);
    const ReducedSystem r = phi_algebraic(F);
    const PolySystem bent(2, {r.system[0] + mono({0, 2}), r.system[1]}, 2);
    CHECK_FALSE(is_in_image_of_phi(bent, 1, PhiVariant::algebraic).in_image);
    const PolySystem aux(2, {r.system[0], r.system[1] + mono({0, 2})}, 2);
    CHECK_FALSE(is_in_image_of_phi(aux, 1, PhiVariant::algebraic).in_image);
    CHECK_FALSE(is_in_image_of_phi(r.system, 1, PhiVariant::qft).in_image);
  }

  TEST_CASE("membership transports through the reduction") {
    const PolySystem member = sys(2, {z(2, 0) + mono({0, 3}), z(2, 1)}, 3);
    const PolySystem outside = sys(1, {z(1, 0) - mono({3})}, 3);
    for (PhiVariant v : {PhiVariant::algebraic, PhiVariant::qft}) {
      const TheoremReport a = verify_theorem_main(member, v);
      CHECK(a.passed());
      CHECK(a.lin_image.verdict == Verdict::member);
      CHECK(a.inv_image.verdict == Verdict::member);
      CHECK(a.assembled_certified.value_or(false));
      CHECK(*a.transport_constant == Coefficient(1));

      const TheoremReport b = verify_theorem_main(outside, v);
      CHECK(b.passed());
      CHECK(b.lin_source.verdict == Verdict::non_member);
      CHECK(b.lin_image.verdict == Verdict::non_member);
    }
  }

  TEST_CASE("transport on random nilpotent members") {
    for (std::uint64_t id = 0; id < 4; ++id) {
      auto rng = make_rng(42, id);
      const PolySystem F = random_nilpotent_member(rng, 3);
      for (PhiVariant v : {PhiVariant::algebraic, PhiVariant::qft}) CHECK(verify_theorem_main(F, v).passed());
    }
  }
}
