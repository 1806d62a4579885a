#include "polyred/random.hpp"

#include <array>

#include "polyred/jacobian.hpp"

namespace polyred {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
  return std::mt19937_64(seq);
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Coefficient pool_rational(std::mt19937_64& rng) {
  static const std::array<Coefficient, 7> pool{Coefficient(0),  Coefficient(1),
                                               Coefficient(-1), Coefficient::rational(1, 2),
                                               Coefficient::rational(-1, 2), Coefficient(2),
                                               Coefficient(-2)};
  return pool[static_cast<std::size_t>(uniform_int(rng, 0, pool.size() - 1))];
}

Coefficient dense_rational(std::mt19937_64& rng) {
  return Coefficient::rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 9));
}

Coefficient nonzero_rational(std::mt19937_64& rng) {
  while (true) {
    Coefficient c = uniform_int(rng, 0, 1) == 0 ? pool_rational(rng) : dense_rational(rng);
    if (!c.is_zero()) return c;
  }
}

namespace {

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<Monomial>& out) {
  std::vector<std::uint32_t> e(nvars, 0);
  auto rec = [&](auto& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::size_t{0});
    return;
  }
  rec(rec, 0, degree);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned min_degree, unsigned max_degree,
                             double density) {
  Polynomial p(nvars);
  for (unsigned k = min_degree; k <= max_degree; ++k) {
    std::vector<Monomial> ms;
    monomials_of_degree(nvars, k, ms);
    for (const auto& m : ms)
      if (coin(rng, density)) p.add_term(m, nonzero_rational(rng));
  }
  return p;
}

Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t nvars, unsigned degree) {
  while (true) {
    Polynomial p = random_polynomial(rng, nvars, degree, degree, 0.6);
    if (!p.is_zero()) return p;
  }
}

CouplingTensor random_couplings(std::mt19937_64& rng, std::size_t n, unsigned d, bool no_quadratic,
                                double density) {
  while (true) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i)
      comps.push_back(Polynomial::variable(n, i) - random_polynomial(rng, n, no_quadratic ? 3 : 2, d, density));
    const PolySystem F(n, std::move(comps), d);
    CouplingTensor w = extract_couplings(F);
    if (!w.entries().empty()) return w;
  }
}

PolySystem random_triangular(std::mt19937_64& rng, std::size_t n, unsigned d, unsigned min_degree) {
  while (true) {
    std::vector<Polynomial> comps;
    bool nonlinear = false;
    for (std::size_t i = 0; i < n; ++i) {
      // p_i only in z_{i+1}..z_{n-1}
      const std::size_t tail = n - i - 1;
      Polynomial p(n);
      if (tail > 0) {
        const Polynomial q = random_polynomial(rng, tail, min_degree, d, 0.6);
        std::vector<std::size_t> target(tail);
        for (std::size_t t = 0; t < tail; ++t) target[t] = i + 1 + t;
        p = remap(q, n, target);
      }
      nonlinear = nonlinear || !p.is_zero();
      comps.push_back(Polynomial::variable(n, i) - p);
    }
    if (nonlinear || n == 1) return PolySystem(n, std::move(comps), d);
  }
}

PolySystem random_non_jlin(std::mt19937_64& rng, std::size_t n, unsigned d, unsigned min_degree) {
  while (true) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i)
      comps.push_back(Polynomial::variable(n, i) - random_polynomial(rng, n, min_degree, d, 0.5));
    PolySystem F(n, std::move(comps), d);
    if (is_jlin(F).verdict == Verdict::non_member) return F;
  }
}

PolySystem random_nilpotent_member(std::mt19937_64& rng, unsigned d) {
  const Coefficient p = nonzero_rational(rng);
  const Coefficient q = nonzero_rational(rng);
  const Polynomial z1 = Polynomial::variable(2, 0);
  const Polynomial z2 = Polynomial::variable(2, 1);
  const Polynomial l = pow(z1 * q - z2 * p, d);
  return PolySystem(2, {z1 - l * p, z2 - l * q}, d);
}

}  // namespace polyred
