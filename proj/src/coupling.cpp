#include "polyred/coupling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyred {

unsigned long long distinct_orderings(std::span<const std::size_t> sorted_inputs) {
  // multinomial k! / prod(mult!) computed incrementally to stay exact
  unsigned long long result = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted_inputs.size(); ++i) {
    run = (i > 0 && sorted_inputs[i] == sorted_inputs[i - 1]) ? run + 1 : 1;
    result = result * (i + 1) / run;
  }
  return result;
}

CouplingTensor::CouplingTensor(std::size_t dim, unsigned max_degree) : dim_(dim), max_degree_(max_degree) {
  if (max_degree < 2) throw std::invalid_argument("coupling tensor needs max_degree >= 2");
}

CouplingKey CouplingTensor::make_key(std::size_t output, std::vector<std::size_t> inputs) const {
  const auto k = static_cast<unsigned>(inputs.size());
  if (k < 2 || k > max_degree_)
    throw std::out_of_range("coupling degree " + std::to_string(k) + " outside 2.." + std::to_string(max_degree_));
  if (output >= dim_) throw std::out_of_range("coupling output index out of range");
  for (auto j : inputs)
    if (j >= dim_) throw std::out_of_range("coupling input index out of range");
  std::sort(inputs.begin(), inputs.end());
  return CouplingKey{k, output, std::move(inputs)};
}

void CouplingTensor::set(std::size_t output, std::vector<std::size_t> inputs, const Coefficient& value) {
  auto key = make_key(output, std::move(inputs));
  if (value.is_zero())
    entries_.erase(key);
  else
    entries_[std::move(key)] = value;
}

void CouplingTensor::add(std::size_t output, std::vector<std::size_t> inputs, const Coefficient& value) {
  auto key = make_key(output, std::move(inputs));
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (!value.is_zero()) entries_.emplace(std::move(key), value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

Coefficient CouplingTensor::get(std::size_t output, std::vector<std::size_t> inputs) const {
  auto it = entries_.find(make_key(output, std::move(inputs)));
  return it == entries_.end() ? Coefficient() : it->second;
}

Coefficient CouplingTensor::full_entry(std::size_t output, std::span<const std::size_t> ordered_inputs) const {
  std::vector<std::size_t> sorted(ordered_inputs.begin(), ordered_inputs.end());
  std::sort(sorted.begin(), sorted.end());
  const Coefficient stored = get(output, sorted);
  if (stored.is_zero()) return stored;
  return stored / Coefficient(static_cast<long>(distinct_orderings(sorted)));
}

bool CouplingTensor::degree_vanishes(unsigned k) const {
  return std::none_of(entries_.begin(), entries_.end(), [k](const auto& e) { return e.first.degree == k; });
}

std::vector<Polynomial> CouplingTensor::homogeneous_nonlinear_part(unsigned k) const {
  std::vector<Polynomial> w(dim_, Polynomial(dim_));
  for (const auto& [key, c] : entries_) {
    if (key.degree != k) continue;
    Monomial m(dim_);
    for (auto j : key.inputs) m[j] += 1;
    w[key.output].add_term(m, c);
  }
  return w;
}

std::vector<Polynomial> CouplingTensor::nonlinear_part() const {
  std::vector<Polynomial> w(dim_, Polynomial(dim_));
  for (const auto& [key, c] : entries_) {
    Monomial m(dim_);
    for (auto j : key.inputs) m[j] += 1;
    w[key.output].add_term(m, c);
  }
  return w;
}

PolySystem CouplingTensor::to_system() const {
  auto w = nonlinear_part();
  std::vector<Polynomial> f;
  f.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) f.push_back(Polynomial::variable(dim_, i) - w[i]);
  return PolySystem(dim_, std::move(f), max_degree_);
}

}  // namespace polyred
