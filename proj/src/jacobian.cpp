#include "polyred/jacobian.hpp"

#include <numeric>
#include <stdexcept>

#include "polyred/inversion.hpp"

namespace polyred {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Polynomial(nvars)) {}

PolyMatrix jacobian_matrix(const PolySystem& F) {
  if (!F.is_square())
    throw std::invalid_argument("jacobian_matrix: system has " + std::to_string(F.size()) + " components in " +
                                std::to_string(F.nvars()) + " variables");
  std::vector<std::size_t> vars(F.nvars());
  std::iota(vars.begin(), vars.end(), 0);
  return jacobian_matrix(F.components(), vars);
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> components, std::span<const std::size_t> vars) {
  const std::size_t ring = components.empty() ? 0 : components.front().nvars();
  PolyMatrix J(vars.size(), components.size(), ring);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < components.size(); ++j) J(i, j) = partial_derivative(components[j], vars[i]);
  return J;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& M, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = M.rows();
  if (row == n) return Polynomial::constant(M.nvars(), 1);
  if (row + 1 == n) return M(row, cols.front());
  Polynomial result(M.nvars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& entry = M(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial term = entry * det_cofactor(M, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 1)
      result -= term;
    else
      result += term;
  }
  return result;
}

Polynomial det_bareiss(PolyMatrix M) {
  const std::size_t n = M.rows();
  bool negate = false;
  Polynomial previous = Polynomial::constant(M.nvars(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && M(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(M.nvars());
      for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = M(k, k) * M(i, j) - M(i, k) * M(k, j);
        M(i, j) = divide_exact(num, previous);
      }
      M(i, k) = Polynomial(M.nvars());
    }
    previous = M(k, k);
  }
  Polynomial det = M(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

Polynomial det_poly(const PolyMatrix& M) {
  if (!M.is_square())
    throw std::invalid_argument("det_poly: matrix is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
  if (M.rows() >= 4) return det_bareiss(M);
  std::vector<std::size_t> cols(M.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return det_cofactor(M, cols, 0);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::member:
      return "member";
    case Verdict::non_member:
      return "non_member";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

MembershipVerdict is_jlin(const PolySystem& F) {
  const Polynomial det = det_poly(jacobian_matrix(F));
  MembershipVerdict v;
  if (det.is_constant() && !det.is_zero()) {
    v.verdict = Verdict::member;
    v.constant = det.constant_term();
    v.witness = det;
    v.detail = "det J_F = " + det.to_string();
    return v;
  }
  v.verdict = Verdict::non_member;
  v.constant = det.constant_term();
  if (det.is_zero()) {
    v.witness = det;
    v.detail = "det J_F vanishes identically";
    return v;
  }
  for (const auto& [m, c] : det.terms())
    if (m.degree() > 0) {
      v.witness = Polynomial::term(m, c);
      break;
    }
  v.detail = "det J_F = " + det.to_string() + " is not constant";
  return v;
}

PolySystem drop_degree_zero(const PolySystem& F) {
  std::vector<Polynomial> out;
  out.reserve(F.size());
  for (const auto& c : F.components()) out.push_back(c - Polynomial::constant(F.nvars(), c.constant_term()));
  return PolySystem(F.nvars(), std::move(out), F.degree_bound());
}

CouplingTensor extract_couplings(const PolySystem& F) {
  if (!F.is_square()) throw std::invalid_argument("extract_couplings: system is not square");
  const std::size_t n = F.nvars();
  CouplingTensor w(n, std::max(2U, F.degree_bound()));
  for (std::size_t i = 0; i < n; ++i) {
    if (!F[i].constant_term().is_zero())
      throw std::invalid_argument("extract_couplings: component " + std::to_string(i) + " has a constant part");
    if (homogeneous_part(F[i], 1) != Polynomial::variable(n, i))
      throw std::invalid_argument("extract_couplings: component " + std::to_string(i) +
                                  " does not have identity linear part");
    for (const auto& [m, c] : F[i].terms()) {
      if (m.degree() < 2) continue;
      std::vector<std::size_t> inputs;
      for (std::size_t j = 0; j < n; ++j) inputs.insert(inputs.end(), m[j], j);
      w.set(i, std::move(inputs), -c);
    }
  }
  return w;
}

unsigned default_degree_cap(const PolySystem& F) { return classical_degree_bound(F.degree(), F.nvars()); }

MembershipVerdict certify_polynomial_inverse(const PolySystem& F, std::optional<unsigned> degree_cap) {
  if (!F.is_square()) throw std::invalid_argument("certify_polynomial_inverse: system is not square");
  const std::size_t n = F.nvars();
  PolyMatrix linear(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      linear(i, j) = Polynomial::constant(0, partial_derivative(F[j], i).constant_term());
  if (det_poly(linear).is_zero())
    throw std::domain_error("certify_polynomial_inverse: linear part at the origin is singular");

  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);
  const InversionResult inv = invert_map(F.components(), active, degree_cap);
  MembershipVerdict v;
  v.witness = inv.witness;
  v.detail = inv.detail + " [degree cap " + std::to_string(inv.degree_cap) + ", classical bound d^(n-1) = " +
             std::to_string(inv.classical_bound) + "]";
  switch (inv.status) {
    case InverseStatus::certified:
      v.verdict = Verdict::member;
      v.inverse = inv.inverse;
      break;
    case InverseStatus::not_invertible:
      v.verdict = Verdict::non_member;
      break;
    case InverseStatus::undetermined:
      v.verdict = Verdict::undetermined;
      break;
  }
  return v;
}

}  // namespace polyred
