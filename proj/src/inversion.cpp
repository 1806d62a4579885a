#include "polyred/inversion.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyred/graded_series.hpp"
#include "polyred/jacobian.hpp"

namespace polyred {

std::string to_string(InverseStatus s) {
  switch (s) {
    case InverseStatus::certified:
      return "certified";
    case InverseStatus::not_invertible:
      return "not_invertible";
    case InverseStatus::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

unsigned classical_degree_bound(unsigned degree, std::size_t m) {
  const unsigned d = std::max(degree, 1U);
  unsigned bound = 1;
  for (std::size_t i = 1; i < m; ++i) bound *= d;
  return bound;
}

std::vector<Polynomial> substitute_active(std::span<const Polynomial> components, std::span<const std::size_t> active,
                                          std::span<const Polynomial> replacement) {
  if (components.empty()) return {};
  const std::size_t ring = components.front().nvars();
  std::vector<Polynomial> subs;
  subs.reserve(ring);
  for (std::size_t v = 0; v < ring; ++v) subs.push_back(Polynomial::variable(ring, v));
  for (std::size_t a = 0; a < active.size(); ++a) subs[active[a]] = replacement[a];
  return compose(components, subs);
}

namespace {

// Coefficient (a polynomial in the parameters) of x_var in p, restricted to
// the terms of active degree exactly one.
Polynomial linear_coefficient(const Polynomial& p, std::span<const std::size_t> active, std::size_t var) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_in(active) != 1 || m[var] != 1) continue;
    Monomial rest = m;
    rest[var] = 0;
    out.add_term(rest, c);
  }
  return out;
}

PolyMatrix minor_matrix(const PolyMatrix& M, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix out(M.rows() - 1, M.cols() - 1, M.nvars());
  for (std::size_t i = 0, oi = 0; i < M.rows(); ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, oj = 0; j < M.cols(); ++j) {
      if (j == skip_col) continue;
      out(oi, oj++) = M(i, j);
    }
    ++oi;
  }
  return out;
}

// L^{-1} = adj(L) / det(L) for a polynomial matrix with constant determinant.
PolyMatrix inverse_unimodular(const PolyMatrix& L, const Coefficient& det) {
  const std::size_t m = L.rows();
  PolyMatrix inv(m, m, L.nvars());
  if (m == 1) {
    inv(0, 0) = Polynomial::constant(L.nvars(), det.inverse());
    return inv;
  }
  const Coefficient det_inv = det.inverse();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Polynomial cof = det_poly(minor_matrix(L, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof * det_inv;
    }
  return inv;
}

bool is_nonzero_constant(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

}  // namespace

InversionResult invert_map(std::span<const Polynomial> components, std::span<const std::size_t> active,
                           std::optional<unsigned> degree_cap) {
  const std::size_t m = active.size();
  if (components.size() != m)
    throw std::invalid_argument("invert_map: need exactly one component per active variable");
  InversionResult result;
  if (m == 0) {
    result.status = InverseStatus::certified;
    result.route = "trivial";
    result.jacobian_determinant = Polynomial::constant(0, 1);
    result.detail = "empty system";
    return result;
  }
  const std::size_t ring = components.front().nvars();
  for (auto v : active)
    if (v >= ring) throw std::out_of_range("invert_map: active variable out of range");

  result.jacobian_determinant = det_poly(jacobian_matrix(components, active));
  int active_degree = 1;
  for (const auto& c : components) active_degree = std::max(active_degree, c.degree_in(active));
  result.classical_bound = classical_degree_bound(static_cast<unsigned>(active_degree), m);
  result.degree_cap = std::max(1U, degree_cap.value_or(result.classical_bound));

  if (!is_nonzero_constant(result.jacobian_determinant)) {
    result.status = InverseStatus::not_invertible;
    result.witness = result.jacobian_determinant;
    result.detail = "Jacobian determinant in the active variables is not a nonzero constant";
    return result;
  }
  const Coefficient det = result.jacobian_determinant.constant_term();

  std::vector<Polynomial> constant_part;
  PolyMatrix linear(m, m, ring);
  for (std::size_t a = 0; a < m; ++a) {
    constant_part.push_back(substitute_zero(components[a], active));
    for (std::size_t b = 0; b < m; ++b) linear(a, b) = linear_coefficient(components[a], active, active[b]);
  }
  const PolyMatrix linear_inv = inverse_unimodular(linear, det);

  // v = L^{-1} (y - c), expressed with y in the active slots
  std::vector<Polynomial> shifted_source;
  for (std::size_t a = 0; a < m; ++a) {
    Polynomial v(ring);
    for (std::size_t b = 0; b < m; ++b)
      v += linear_inv(a, b) * (Polynomial::variable(ring, active[b]) - constant_part[b]);
    shifted_source.push_back(std::move(v));
  }

  const bool affine = std::all_of(components.begin(), components.end(),
                                  [&](const Polynomial& c) { return c.degree_in(active) <= 1; });
  std::optional<Polynomial> top_grade;
  if (affine) {
    result.route = "affine closed form";
    result.inverse = shifted_source;
  } else {
    result.route = "fixed-point series";
    // P = c + L x - W with W of active degree >= 2; x = v + L^{-1} W(x)
    std::vector<Polynomial> w;
    for (std::size_t a = 0; a < m; ++a) {
      Polynomial wa(ring);
      for (const auto& [mono, coef] : components[a].terms())
        if (mono.degree_in(active) >= 2) wa.add_term(mono, -coef);
      w.push_back(std::move(wa));
    }
    std::vector<Polynomial> normalized;
    for (std::size_t a = 0; a < m; ++a) {
      Polynomial na(ring);
      for (std::size_t b = 0; b < m; ++b) na += linear_inv(a, b) * w[b];
      normalized.push_back(std::move(na));
    }
    std::vector<Polynomial> placeholders;
    for (auto v : active) placeholders.push_back(Polynomial::variable(ring, v));
    const GradedSeriesVector series = fixed_point_inverse(normalized, active, placeholders, result.degree_cap);
    for (std::size_t a = 0; a < m && !top_grade; ++a)
      if (!series[a].grade(result.degree_cap).is_zero()) top_grade = series[a].grade(result.degree_cap);
    const auto candidate = series.collapse(result.degree_cap - 1);
    result.inverse = substitute_active(candidate, active, shifted_source);
  }

  std::vector<Polynomial> identity;
  for (auto v : active) identity.push_back(Polynomial::variable(ring, v));
  const auto forward = substitute_active(components, active, result.inverse);
  const auto backward = substitute_active(result.inverse, active, components);
  std::optional<Polynomial> residual;
  for (std::size_t a = 0; a < m && !residual; ++a) {
    if (forward[a] != identity[a]) residual = forward[a] - identity[a];
    else if (backward[a] != identity[a]) residual = backward[a] - identity[a];
  }
  if (!residual) {
    result.status = InverseStatus::certified;
    result.detail = "inverse certified by exact two-sided composition";
    return result;
  }
  result.witness = top_grade ? top_grade : residual;
  result.inverse.clear();
  if (result.degree_cap >= result.classical_bound) {
    result.status = InverseStatus::not_invertible;
    result.detail = "no polynomial inverse of degree <= " + std::to_string(result.degree_cap) +
                    " (cap reaches the classical bound " + std::to_string(result.classical_bound) + ")";
  } else {
    result.status = InverseStatus::undetermined;
    result.detail = "no polynomial inverse of degree <= " + std::to_string(result.degree_cap) +
                    "; cap is below the classical bound " + std::to_string(result.classical_bound);
  }
  return result;
}

}  // namespace polyred
