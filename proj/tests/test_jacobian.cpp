#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "polyred/jacobian.hpp"
#include "polyred/random.hpp"

using namespace polyred;
using namespace th;

namespace {

Polynomial leibniz(const PolyMatrix& M) {
  const std::size_t n = M.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(M.nvars());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term = Polynomial::constant(M.nvars(), inversions % 2 ? -1 : 1);
    for (std::size_t a = 0; a < n; ++a) term *= M(a, perm[a]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

PolySystem sys(std::size_t n, std::vector<Polynomial> c) { return PolySystem(n, std::move(c)); }

}  // namespace

TEST_SUITE("jacobian") {
  TEST_CASE("rows index variables and columns index components") {
    const PolySystem F = sys(2, {z(2, 0) + mono({0, 2}), z(2, 1)});
    const PolyMatrix J = jacobian_matrix(F);
    CHECK(J(0, 0) == k(2, 1));
    CHECK(J(1, 0) == mono({0, 1}, 2));
    CHECK(J(0, 1).is_zero());
    CHECK(J(1, 1) == k(2, 1));
    CHECK(det_poly(J) == k(2, 1));
    CHECK_THROWS_AS(jacobian_matrix(PolySystem(2, {z(2, 0)})), std::invalid_argument);
  }

  TEST_CASE("determinant of a quadratic map") {
    const PolySystem F = sys(2, {z(2, 0) - mono({2, 0}), z(2, 1) - mono({1, 1})});
    // J = [[1-2z1, -z2], [0, 1-z1]]
    CHECK(det_poly(jacobian_matrix(F)) == (k(2, 1) - mono({1, 0}, 2)) * (k(2, 1) - z(2, 0)));
    CHECK(det_poly(PolyMatrix(0, 0, 3)) == k(3, 1));
  }

  TEST_CASE("Bareiss agrees with the Leibniz expansion") {
    for (std::uint64_t id = 0; id < 12; ++id) {
      auto rng = make_rng(21, id);
      const std::size_t n = 4 + id % 2;
      const std::size_t nv = 1 + id % 3;
      PolyMatrix M(n, n, nv);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = random_polynomial(rng, nv, 0, 1, 0.6);
      CHECK(det_poly(M) == leibniz(M));
    }
    PolyMatrix S(4, 4, 1);
    for (std::size_t j = 0; j < 4; ++j) S(0, j) = S(1, j) = z(1, 0) + k(1, static_cast<long>(j));
    for (std::size_t j = 0; j < 4; ++j) S(2, j) = S(3, j) = k(1, static_cast<long>(j + 1));
    S(3, 3) = k(1, 9);
    CHECK(det_poly(S).is_zero());
  }

  TEST_CASE("classical membership") {
    const MembershipVerdict a = is_jlin(sys(2, {z(2, 0) + mono({0, 2}), z(2, 1)}));
    CHECK(a.verdict == Verdict::member);
    REQUIRE(a.constant);
    CHECK(*a.constant == Coefficient(1));

    const MembershipVerdict b = is_jlin(sys(2, {z(2, 0) * q(2) + mono({0, 3}), z(2, 1) * q(3)}));
    CHECK(b.verdict == Verdict::member);
    CHECK(*b.constant == Coefficient(6));

    const MembershipVerdict c = is_jlin(sys(1, {z(1, 0) - mono({2})}));
    CHECK(c.verdict == Verdict::non_member);
    REQUIRE(c.witness);
    CHECK(*c.witness == mono({1}, -2));

    const MembershipVerdict zero = is_jlin(sys(2, {mono({2, 0}), z(2, 1)}));
    CHECK(zero.verdict == Verdict::non_member);
    CHECK(to_string(Verdict::undetermined) == "undetermined");
  }

  TEST_CASE("dropping degree zero") {
    const PolySystem F = sys(2, {z(2, 0) + k(2, 3), z(2, 1) - k(2, q(1, 2)) + mono({2, 0})});
    const PolySystem G = drop_degree_zero(F);
    CHECK(G[0] == z(2, 0));
    CHECK(G[1] == z(2, 1) + mono({2, 0}));
    CHECK(G.degree_bound() == F.degree_bound());
    CHECK(is_jlin(G).verdict == is_jlin(F).verdict);
  }

  TEST_CASE("coupling extraction") {
    const PolySystem F = sys(2, {z(2, 0) - mono({1, 1}, 4), z(2, 1) - mono({3, 0}, q(1, 2))});
    const CouplingTensor w = extract_couplings(F);
    CHECK(w.get(0, {0, 1}) == Coefficient(4));
    CHECK(w.full_entry(0, std::vector<std::size_t>{1, 0}) == Coefficient(2));
    CHECK(w.get(1, {0, 0, 0}) == q(1, 2));
    CHECK(w.to_system() == F);
    CHECK_THROWS_AS(extract_couplings(sys(1, {z(1, 0) + k(1, 1)})), std::invalid_argument);
    CHECK_THROWS_AS(extract_couplings(sys(1, {z(1, 0) * q(2)})), std::invalid_argument);
  }

  TEST_CASE("inverse certification") {
    const PolySystem F = sys(2, {z(2, 0) + mono({0, 2}), z(2, 1)});
    const MembershipVerdict v = certify_polynomial_inverse(F);
    REQUIRE(v.verdict == Verdict::member);
    REQUIRE(v.inverse.size() == 2);
    CHECK(v.inverse[0] == z(2, 0) - mono({0, 2}));
    CHECK(v.inverse[1] == z(2, 1));

    // (z1 + z2^2, z2) after (z1, z2 + z1^2)
    const Polynomial inner = z(2, 1) + mono({2, 0});
    const PolySystem nil = sys(2, {z(2, 0) + inner * inner, inner});
    const MembershipVerdict t = certify_polynomial_inverse(nil);
    REQUIRE(t.verdict == Verdict::member);
    CHECK(compose(PolySystem(2, t.inverse), nil).components() == ring_variables(2));
    CHECK(compose(nil, PolySystem(2, t.inverse)).components() == ring_variables(2));

    const MembershipVerdict bad = certify_polynomial_inverse(sys(1, {z(1, 0) - mono({2})}));
    CHECK(bad.verdict == Verdict::non_member);
    CHECK_THROWS_AS(certify_polynomial_inverse(sys(2, {mono({2, 0}), z(2, 1)})), std::domain_error);
  }

  TEST_CASE("random nilpotent members invert") {
    for (std::uint64_t id = 0; id < 6; ++id) {
      auto rng = make_rng(22, id);
      const PolySystem F = random_nilpotent_member(rng, 2 + id % 3);
      CHECK(is_jlin(F).verdict == Verdict::member);
      CHECK(certify_polynomial_inverse(F).verdict == Verdict::member);
    }
  }

  TEST_CASE("chain rule for determinants") {
    for (std::uint64_t id = 0; id < 10; ++id) {
      auto rng = make_rng(23, id);
      const std::size_t n = 2 + id % 2;
      std::vector<Polynomial> f;
      std::vector<Polynomial> g;
      for (std::size_t i = 0; i < n; ++i) {
        f.push_back(z(n, i) + random_polynomial(rng, n, 2, 2, 0.3));
        g.push_back(z(n, i) + random_polynomial(rng, n, 2, 2, 0.3));
      }
      const PolySystem F(n, f);
      const PolySystem G(n, g);
      const Polynomial lhs = det_poly(jacobian_matrix(compose(F, G)));
      const Polynomial detF = det_poly(jacobian_matrix(F));
      const Polynomial rhs = compose(detF, g) * det_poly(jacobian_matrix(G));
      CHECK(lhs == rhs);
    }
  }
}
