#include "polyred/poly_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyred {

PolySystem::PolySystem(std::size_t nvars, std::vector<Polynomial> components, std::optional<unsigned> degree_bound)
    : nvars_(nvars), components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].nvars() != nvars_)
      throw std::invalid_argument("component " + std::to_string(i) + " has " +
                                  std::to_string(components_[i].nvars()) + " variables, expected " +
                                  std::to_string(nvars_));
  const unsigned actual = degree();
  degree_bound_ = degree_bound.value_or(actual);
  if (actual > degree_bound_)
    throw std::invalid_argument("system degree " + std::to_string(actual) + " exceeds declared bound " +
                                std::to_string(degree_bound_));
}

PolySystem PolySystem::identity(std::size_t n, unsigned degree_bound) {
  return PolySystem(n, ring_variables(n), degree_bound);
}

unsigned PolySystem::degree() const {
  int d = 0;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return static_cast<unsigned>(d);
}

PolySystem PolySystem::with_degree_bound(unsigned bound) const { return PolySystem(nvars_, components_, bound); }

PolySystem compose(const PolySystem& f, const PolySystem& g) {
  if (f.nvars() != g.size())
    throw std::invalid_argument("compose: outer system expects " + std::to_string(f.nvars()) +
                                " inputs, inner system has " + std::to_string(g.size()) + " outputs");
  auto comps = compose(std::span<const Polynomial>(f.components()), std::span<const Polynomial>(g.components()));
  return PolySystem(g.nvars(), std::move(comps));
}

std::vector<Polynomial> compose(std::span<const Polynomial> f, std::span<const Polynomial> g) {
  std::vector<Polynomial> out;
  out.reserve(f.size());
  for (const auto& p : f) out.push_back(compose(p, g));
  return out;
}

std::vector<Polynomial> ring_variables(std::size_t n) {
  std::vector<Polynomial> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(n, i));
  return vars;
}

}  // namespace polyred
