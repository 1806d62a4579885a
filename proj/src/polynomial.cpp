#include "polyred/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyred {

Monomial Monomial::unit(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exp_.at(index) = 1;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp_) d += e;
  return d;
}

unsigned Monomial::degree_in(std::span<const std::size_t> vars) const {
  unsigned d = 0;
  for (auto v : vars) d += exp_[v];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] += b.exp_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp_.size(); ++i) r.exp_[i] -= b.exp_[i];
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

Polynomial Polynomial::constant(std::size_t nvars, const Coefficient& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  p.terms_.emplace(Monomial::unit(nvars, index), Coefficient(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Coefficient& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::degree_in(std::span<const std::size_t> vars) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(vars)));
  return d;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

Coefficient Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity does not match polynomial ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial rings differ: " + std::to_string(nvars_) + " vs " +
                                std::to_string(o.nvars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coeff.erase(0, 1);
    if (!c.is_real()) coeff = "(" + coeff + ")";
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = coeff == "1";
    bool wrote = false;
    if (!unit || m.degree() == 0) {
      os << coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      if (i < names.size())
        os << names[i];
      else
        os << "z" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> subs) {
  if (subs.size() != p.nvars())
    throw std::invalid_argument("compose: expected " + std::to_string(p.nvars()) + " substitutes, got " +
                                std::to_string(subs.size()));
  const std::size_t ring = subs.empty() ? 0 : subs.front().nvars();
  for (const auto& s : subs)
    if (s.nvars() != ring) throw std::invalid_argument("compose: substitutes live in different rings");

  // powers[i][e] = subs[i]^e, filled on demand
  std::vector<std::vector<Polynomial>> powers(subs.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * subs[i]);
    return cache[e];
  };

  Polynomial result(ring);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(ring, c);
    for (std::size_t i = 0; i < m.nvars() && !t.is_zero(); ++i)
      if (m[i] != 0) t *= power(i, m[i]);
    result += t;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("partial_derivative: variable index out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * Coefficient(static_cast<long>(m[var])));
  }
  return r;
}

Polynomial homogeneous_part(const Polynomial& p, unsigned c) {
  Polynomial r(p.nvars());
  for (const auto& [m, v] : p.terms())
    if (m.degree() == c) r.add_term(m, v);
  return r;
}

Polynomial homogeneous_part_in(const Polynomial& p, std::span<const std::size_t> vars, unsigned c) {
  Polynomial r(p.nvars());
  for (const auto& [m, v] : p.terms())
    if (m.degree_in(vars) == c) r.add_term(m, v);
  return r;
}

Polynomial substitute_zero(const Polynomial& p, std::span<const std::size_t> vars) {
  return homogeneous_part_in(p, vars, 0);
}

Polynomial remap(const Polynomial& p, std::size_t nvars, std::span<const std::size_t> target) {
  if (target.size() != p.nvars()) throw std::invalid_argument("remap: target map has wrong length");
  Polynomial r(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(nvars);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (target[i] >= nvars) throw std::out_of_range("remap: target slot out of range");
      nm[target[i]] += m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw std::invalid_argument("divide_exact: rings differ");
  const auto& [lead_m, lead_c] = *q.terms().begin();
  const Coefficient lead_inv = lead_c.inverse();
  Polynomial remainder = p;
  Polynomial quotient(p.nvars());
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().begin();
    if (!lead_m.divides(rm)) throw std::domain_error("divide_exact: divisor does not divide dividend");
    const Polynomial t = Polynomial::term(rm / lead_m, rc * lead_inv);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

Polynomial scale_variables(const Polynomial& p, const Coefficient& scale) {
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c * pow(scale, m.degree()));
  return r;
}

}  // namespace polyred
