#ifndef POLYRED_TESTS_HELPERS_HPP
#define POLYRED_TESTS_HELPERS_HPP

#include <vector>

#include "polyred/poly_system.hpp"

namespace th {

using polyred::Coefficient;
using polyred::Monomial;
using polyred::Polynomial;
using polyred::PolySystem;

inline Polynomial z(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
inline Polynomial k(std::size_t n, const Coefficient& c) { return Polynomial::constant(n, c); }
inline Coefficient q(long num, long den = 1) { return Coefficient::rational(num, den); }
inline Polynomial mono(std::vector<std::uint32_t> e, const Coefficient& c = 1) {
  return Polynomial::term(Monomial(std::move(e)), c);
}

}  // namespace th

#endif  // POLYRED_TESTS_HELPERS_HPP
