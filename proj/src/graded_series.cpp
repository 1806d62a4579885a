#include "polyred/graded_series.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace polyred {

GradedSeries::GradedSeries(std::size_t nvars, unsigned order)
    : nvars_(nvars), order_(order), grades_(order + 1, Polynomial(nvars)) {}

GradedSeries GradedSeries::monomial(const Polynomial& p, unsigned order, unsigned grade) {
  GradedSeries s(p.nvars(), order);
  if (grade <= order) s.grades_[grade] = p;
  return s;
}

bool GradedSeries::is_zero() const { return !lowest_nonzero_grade().has_value(); }

std::optional<unsigned> GradedSeries::lowest_nonzero_grade() const {
  for (unsigned r = 0; r <= order_; ++r)
    if (!grades_[r].is_zero()) return r;
  return std::nullopt;
}

GradedSeries GradedSeries::truncated(unsigned order) const {
  GradedSeries s(nvars_, order);
  for (unsigned r = 0; r <= std::min(order, order_); ++r) s.grades_[r] = grades_[r];
  return s;
}

GradedSeries GradedSeries::shifted_up(unsigned k) const {
  GradedSeries s(nvars_, order_);
  for (unsigned r = 0; r + k <= order_; ++r) s.grades_[r + k] = grades_[r];
  return s;
}

GradedSeries GradedSeries::shifted_down(unsigned k) const {
  GradedSeries s(nvars_, order_);
  for (unsigned r = 0; r <= order_; ++r) {
    if (r < k) {
      if (!grades_[r].is_zero())
        throw std::domain_error("shifted_down: grade " + std::to_string(r) + " is nonzero");
      continue;
    }
    s.grades_[r - k] = grades_[r];
  }
  return s;
}

void GradedSeries::check_compatible(const GradedSeries& o) const {
  if (nvars_ != o.nvars_ || order_ != o.order_)
    throw std::invalid_argument("graded series differ in ring or truncation order");
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  check_compatible(o);
  for (unsigned r = 0; r <= order_; ++r) grades_[r] += o.grades_[r];
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  check_compatible(o);
  for (unsigned r = 0; r <= order_; ++r) grades_[r] -= o.grades_[r];
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Coefficient& c) {
  for (auto& g : grades_) g *= c;
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.check_compatible(b);
  GradedSeries r(a.nvars_, a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.grades_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) {
      if (b.grades_[j].is_zero()) continue;
      r.grades_[i + j] += a.grades_[i] * b.grades_[j];
    }
  }
  return r;
}

GradedSeries exp_series(const GradedSeries& x) {
  if (!x.grade(0).is_zero()) throw std::domain_error("exp_series: grade 0 must vanish");
  GradedSeries result = GradedSeries::monomial(Polynomial::constant(x.nvars(), 1), x.order());
  GradedSeries term = result;
  for (unsigned m = 1; m <= x.order(); ++m) {
    term = term * x;
    term *= Coefficient::rational(1, m);
    result += term;
  }
  return result;
}

GradedSeries log1p_series(const GradedSeries& x) {
  if (!x.grade(0).is_zero()) throw std::domain_error("log1p_series: grade 0 must vanish");
  GradedSeries result(x.nvars(), x.order());
  GradedSeries power = x;
  for (unsigned m = 1; m <= x.order(); ++m) {
    GradedSeries t = power;
    t *= Coefficient::rational(m % 2 == 1 ? 1 : -1, m);
    result += t;
    power = power * x;
  }
  return result;
}

GradedSeriesVector::GradedSeriesVector(std::vector<GradedSeries> components) : components_(std::move(components)) {
  if (components_.empty()) return;
  nvars_ = components_.front().nvars();
  order_ = components_.front().order();
  for (const auto& c : components_)
    if (c.nvars() != nvars_ || c.order() != order_)
      throw std::invalid_argument("graded series vector components disagree in ring or order");
}

std::vector<Polynomial> GradedSeriesVector::grade(unsigned r) const {
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.grade(r));
  return out;
}

std::vector<Polynomial> GradedSeriesVector::collapse(unsigned max_grade) const {
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (const auto& c : components_) {
    Polynomial p(nvars_);
    for (unsigned r = 0; r <= std::min(max_grade, order_); ++r) p += c.grade(r);
    out.push_back(std::move(p));
  }
  return out;
}

GradedSeries substitute(const Polynomial& p, std::span<const std::size_t> active, std::span<const GradedSeries> subs,
                        unsigned order, bool theta_scaled) {
  if (active.size() != subs.size()) throw std::invalid_argument("substitute: active/substitute count mismatch");
  const std::size_t ring = subs.empty() ? p.nvars() : subs.front().nvars();
  std::vector<int> slot(p.nvars(), -1);
  for (std::size_t a = 0; a < active.size(); ++a) {
    if (active[a] >= p.nvars()) throw std::out_of_range("substitute: active variable out of range");
    slot[active[a]] = static_cast<int>(a);
  }

  std::vector<GradedSeries> base;
  base.reserve(subs.size());
  for (const auto& s : subs) {
    if (s.nvars() != ring) throw std::invalid_argument("substitute: substitutes live in different rings");
    base.push_back(s.truncated(order));
  }
  std::vector<std::vector<GradedSeries>> powers(subs.size());
  auto power = [&](std::size_t a, unsigned e) -> const GradedSeries& {
    auto& cache = powers[a];
    if (cache.empty()) cache.push_back(GradedSeries::monomial(Polynomial::constant(ring, 1), order));
    while (cache.size() <= e) cache.push_back(cache.back() * base[a]);
    return cache[e];
  };

  GradedSeries result(ring, order);
  for (const auto& [m, c] : p.terms()) {
    Monomial params(ring);
    unsigned active_degree = 0;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m[v] == 0) continue;
      if (slot[v] >= 0) {
        active_degree += m[v];
      } else {
        if (ring != p.nvars())
          throw std::invalid_argument("substitute: parameter variables require substitutes in the source ring");
        params[v] = m[v];
      }
    }
    const unsigned shift = theta_scaled ? active_degree : 0;
    if (shift > order) continue;
    GradedSeries t = GradedSeries::monomial(Polynomial::term(params, c), order - shift);
    for (std::size_t v = 0; v < m.nvars(); ++v)
      if (m[v] != 0 && slot[v] >= 0) t = t * power(slot[v], m[v]).truncated(order - shift);
    for (unsigned r = 0; r + shift <= order; ++r) result.grade(r + shift) += t.grade(r);
  }
  return result;
}

GradedSeries substitute(const Polynomial& p, std::span<const GradedSeries> subs, unsigned order, bool theta_scaled) {
  std::vector<std::size_t> active(p.nvars());
  std::iota(active.begin(), active.end(), 0);
  return substitute(p, active, subs, order, theta_scaled);
}

GradedSeriesVector fixed_point_inverse(std::span<const Polynomial> nonlinear, std::span<const std::size_t> active,
                                       std::span<const Polynomial> sources, unsigned order) {
  const std::size_t m = active.size();
  if (nonlinear.size() != m || sources.size() != m)
    throw std::invalid_argument("fixed_point_inverse: expected one nonlinear part and one source per active variable");
  for (const auto& w : nonlinear)
    for (const auto& [mono, c] : w.terms())
      if (mono.degree_in(active) < 2)
        throw std::invalid_argument("fixed_point_inverse: nonlinear part has a term of active degree < 2");
  const std::size_t ring = sources.empty() ? 0 : sources.front().nvars();

  std::vector<GradedSeries> g;
  g.reserve(m);
  for (const auto& s : sources) g.push_back(GradedSeries::monomial(s, order));

  for (unsigned r = 1; r <= order; ++r) {
    // grade r of G is the theta^{r+1} coefficient of W(theta G), which only
    // sees grades < r of G.
    std::vector<GradedSeries> known;
    known.reserve(m);
    for (const auto& gi : g) {
      GradedSeries k(ring, r + 1);
      for (unsigned s = 0; s < r; ++s) k.grade(s) = gi.grade(s);
      known.push_back(std::move(k));
    }
    for (std::size_t a = 0; a < m; ++a) {
      GradedSeries wa = substitute(nonlinear[a], active, known, r + 1, true);
      g[a].grade(r) = wa.grade(r + 1);
    }
  }
  return GradedSeriesVector(std::move(g));
}

}  // namespace polyred
