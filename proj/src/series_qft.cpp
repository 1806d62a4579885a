#include "polyred/series_qft.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "polyred/jacobian.hpp"
#include "polyred/reduction.hpp"

namespace polyred {

std::size_t PlaneTree::size() const {
  if (is_leaf()) return 0;
  std::size_t s = 1;
  for (const auto& c : children) s += c.size();
  return s;
}

unsigned PlaneTree::theta_weight() const {
  if (is_leaf()) return 0;
  unsigned w = static_cast<unsigned>(children.size()) - 1;
  for (const auto& c : children) w += c.theta_weight();
  return w;
}

std::string PlaneTree::to_string() const {
  if (is_leaf()) return "u";
  std::string s = "[";
  for (std::size_t k = 0; k < children.size(); ++k) {
    if (k > 0) s += ' ';
    s += children[k].to_string();
  }
  return s + "]";
}

namespace {

class TreeTable {
 public:
  explicit TreeTable(unsigned d) : d_(d) {}

  const std::vector<PlaneTree>& of_weight(unsigned w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::vector<PlaneTree> out;
    if (w == 0) {
      out.emplace_back();
    } else {
      for (unsigned k = 2; k <= d_ && k - 1 <= w; ++k) {
        std::vector<PlaneTree> slots(k);
        fill(out, slots, 0, w - (k - 1));
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  // Distributes `remaining` weight over slots[pos..] in every way.
  void fill(std::vector<PlaneTree>& out, std::vector<PlaneTree>& slots, std::size_t pos, unsigned remaining) {
    if (pos + 1 == slots.size()) {
      for (const auto& t : of_weight(remaining)) {
        slots[pos] = t;
        out.push_back(PlaneTree{slots});
      }
      return;
    }
    for (unsigned here = 0; here <= remaining; ++here) {
      const auto options = of_weight(here);
      for (const auto& t : options) {
        slots[pos] = t;
        fill(out, slots, pos + 1, remaining - here);
      }
    }
  }

  unsigned d_;
  std::map<unsigned, std::vector<PlaneTree>> memo_;
};

std::vector<Polynomial> source_variables(std::size_t n) { return ring_variables(n); }

std::vector<std::size_t> all_slots(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

SeriesCheck compare_vectors(const GradedSeriesVector& a, const GradedSeriesVector& b, unsigned N,
                            const std::string& what) {
  SeriesCheck out;
  for (unsigned r = 0; r <= N; ++r)
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Polynomial diff = a[i].grade(r) - b[i].grade(r);
      if (!diff.is_zero()) {
        out.first_bad_grade = r;
        out.residual = diff;
        out.detail = what + " differs at grade " + std::to_string(r) + ", component " + std::to_string(i);
        return out;
      }
    }
  out.holds = true;
  out.detail = what + " holds through order " + std::to_string(N);
  return out;
}

}  // namespace

std::vector<PlaneTree> enumerate_trees(unsigned d, unsigned N) {
  if (d < 2) throw std::invalid_argument("enumerate_trees: d must be at least 2");
  TreeTable table(d);
  std::vector<PlaneTree> out;
  for (unsigned w = 1; w <= N; ++w) {
    const auto& level = table.of_weight(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::size_t> tree_counts_by_weight(unsigned d, unsigned N) {
  std::vector<std::size_t> counts(N + 1, 0);
  for (const auto& t : enumerate_trees(d, N)) ++counts[t.theta_weight()];
  return counts;
}

std::vector<Polynomial> tree_amplitude(const PlaneTree& T, const CouplingTensor& w) {
  const std::size_t n = w.dim();
  if (T.is_leaf()) return source_variables(n);
  const std::size_t k = T.children.size();
  std::vector<std::vector<Polynomial>> sub;
  sub.reserve(k);
  for (const auto& c : T.children) sub.push_back(tree_amplitude(c, w));

  std::vector<Polynomial> out(n, Polynomial(n));
  std::vector<std::size_t> idx(k, 0);
  // products of child amplitudes over ordered index tuples, shared by all outputs
  while (true) {
    bool any = false;
    std::vector<Coefficient> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
      coeffs[i] = w.full_entry(i, idx);
      any = any || !coeffs[i].is_zero();
    }
    if (any) {
      Polynomial prod = Polynomial::constant(n, 1);
      for (std::size_t m = 0; m < k; ++m) prod = prod * sub[m][idx[m]];
      for (std::size_t i = 0; i < n; ++i)
        if (!coeffs[i].is_zero()) out[i] += prod * coeffs[i];
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

GradedSeriesVector formal_inverse_fixed_point(const CouplingTensor& w, unsigned N) {
  return formal_inverse_fixed_point(w, N, source_variables(w.dim()));
}

GradedSeriesVector formal_inverse_fixed_point(const CouplingTensor& w, unsigned N,
                                              const std::vector<Polynomial>& sources) {
  const auto nonlinear = w.nonlinear_part();
  return fixed_point_inverse(nonlinear, all_slots(w.dim()), sources, N);
}

GradedSeriesVector tree_oracle_inverse(const CouplingTensor& w, unsigned N) {
  const std::size_t n = w.dim();
  std::vector<GradedSeries> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(GradedSeries::monomial(Polynomial::variable(n, i), N));
  for (const auto& T : enumerate_trees(w.max_degree(), N)) {
    const auto amp = tree_amplitude(T, w);
    const unsigned r = T.theta_weight();
    for (std::size_t i = 0; i < n; ++i) g[i].grade(r) += amp[i];
  }
  return GradedSeriesVector(std::move(g));
}

SeriesCheck inversion_defect(const CouplingTensor& w, const GradedSeriesVector& G) {
  const unsigned N = G.order();
  const PolySystem F = w.to_system();
  // F_i(theta G) = theta G_i - W_i(theta G), divided by theta
  for (std::size_t i = 0; i < F.size(); ++i) {
    const GradedSeries fg = substitute(F[i], G.components(), N + 1, true).shifted_down(1).truncated(N);
    const GradedSeries residual = fg - GradedSeries::monomial(G[i].grade(0), N);
    if (auto bad = residual.lowest_nonzero_grade()) {
      SeriesCheck out;
      out.first_bad_grade = bad;
      out.residual = residual.grade(*bad);
      out.detail = "F(G(u)) - u nonzero at grade " + std::to_string(*bad) + ", component " + std::to_string(i);
      return out;
    }
  }
  SeriesCheck out;
  out.holds = true;
  out.detail = "F(G(u)) = u through order " + std::to_string(N);
  return out;
}

namespace {

using SeriesMatrix = std::vector<std::vector<GradedSeries>>;

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b, std::size_t ring, unsigned N) {
  const std::size_t n = a.size();
  SeriesMatrix out(n, std::vector<GradedSeries>(n, GradedSeries(ring, N)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

GradedSeries log_partition_function(const CouplingTensor& w, unsigned N) {
  const std::size_t n = w.dim();
  const GradedSeriesVector G = formal_inverse_fixed_point(w, N);
  const auto W = w.nonlinear_part();
  SeriesMatrix M(n, std::vector<GradedSeries>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = substitute(partial_derivative(W[j], i), G.components(), N, true);

  GradedSeries log_z(n, N);
  SeriesMatrix power = M;
  for (unsigned r = 1; r <= N; ++r) {
    GradedSeries trace(n, N);
    for (std::size_t i = 0; i < n; ++i) trace += power[i][i];
    log_z += trace * Coefficient::rational(1, r);
    if (r < N) power = multiply(power, M, n, N);
  }
  return log_z;
}

GradedSeries jacobian_determinant_series(const CouplingTensor& w, const GradedSeriesVector& G) {
  const Polynomial det = det_poly(jacobian_matrix(w.to_system()));
  return substitute(det, G.components(), G.order(), true);
}

PartitionReport z_det_identity_check(const CouplingTensor& w, unsigned N) {
  const std::size_t n = w.dim();
  PartitionReport out;
  out.log_z = log_partition_function(w, N);
  const GradedSeriesVector G = formal_inverse_fixed_point(w, N);
  out.det = jacobian_determinant_series(w, G);

  const GradedSeries one = GradedSeries::monomial(Polynomial::constant(n, 1), N);
  const GradedSeries residual = exp_series(out.log_z) * out.det - one;
  if (auto bad = residual.lowest_nonzero_grade()) {
    out.z_det.first_bad_grade = bad;
    out.z_det.residual = residual.grade(*bad);
    out.z_det.detail = "Z * det J_F(G) - 1 nonzero at grade " + std::to_string(*bad);
  } else {
    out.z_det.holds = true;
    out.z_det.detail = "Z * det J_F(G) = 1 through order " + std::to_string(N);
  }
  GradedSeries neg_log_det = log1p_series(out.det - one) * Coefficient(-1);
  out.log_det_agrees = neg_log_det == out.log_z;
  return out;
}

ReducedInverseReport reduced_inverse_check(const CouplingTensor& w, unsigned N) {
  const std::size_t n = w.dim();
  const unsigned d = w.max_degree();
  if (d < 3) throw std::invalid_argument("reduced_inverse_check: needs d >= 3");
  if (!w.degree_vanishes(2)) throw std::invalid_argument("reduced_inverse_check: needs vanishing quadratic couplings");

  const CouplingTensor wt = phi_qft(w, n, d);
  const GradedSeriesVector G = formal_inverse_fixed_point(w, N);
  std::vector<Polynomial> sources = source_variables(n);
  sources.resize(wt.dim(), Polynomial(n));
  const GradedSeriesVector Gt = formal_inverse_fixed_point(wt, N, sources);

  ReducedInverseReport out;
  out.first_block_equal = true;
  for (std::size_t i = 0; i < n && out.first_block_equal; ++i)
    if (!(Gt[i] == G[i])) {
      out.first_block_equal = false;
      out.detail = "G~_" + std::to_string(i + 1) + " differs from G_" + std::to_string(i + 1);
    }

  out.auxiliary_closed_form = true;
  std::vector<std::size_t> tail(d - 1, 0);
  for (std::size_t i = 0; i < n && out.auxiliary_closed_form; ++i)
    for (std::size_t j = 0; j < n && out.auxiliary_closed_form; ++j) {
      GradedSeries expected(n, N);
      std::fill(tail.begin(), tail.end(), 0);
      while (true) {
        std::vector<std::size_t> ordered{j};
        ordered.insert(ordered.end(), tail.begin(), tail.end());
        const Coefficient c = w.full_entry(i, ordered);
        if (!c.is_zero()) {
          GradedSeries prod = GradedSeries::monomial(Polynomial::constant(n, 1), N);
          for (auto t : tail) prod = prod * G[t];
          expected += prod * c;
        }
        std::size_t pos = 0;
        while (pos < tail.size() && ++tail[pos] == n) tail[pos++] = 0;
        if (pos == tail.size()) break;
      }
      expected = expected.shifted_up(d - 2);
      if (!(Gt[n + i * n + j] == expected)) {
        out.auxiliary_closed_form = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("auxiliary coordinate (") +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs from its closed form";
      }
    }
  if (out.holds()) out.detail = "G~ matches G and the auxiliary closed form through order " + std::to_string(N);
  return out;
}

SeriesCheck theta_homogeneity_check(const CouplingTensor& w, unsigned N, const Coefficient& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("theta_homogeneity_check: lambda must be nonzero");
  const GradedSeriesVector G = formal_inverse_fixed_point(w, N);
  const Coefficient inv = lambda.inverse();
  std::vector<GradedSeries> rhs;
  for (std::size_t i = 0; i < G.size(); ++i) {
    GradedSeries s(G.nvars(), N);
    // grade r of lambda^{-1} G(lambda u, lambda^{-1} theta)
    for (unsigned r = 0; r <= N; ++r) s.grade(r) = scale_variables(G[i].grade(r), lambda) * pow(inv, r + 1);
    rhs.push_back(std::move(s));
  }
  return compare_vectors(G, GradedSeriesVector(std::move(rhs)), N, "theta-homogeneity");
}

}  // namespace polyred
