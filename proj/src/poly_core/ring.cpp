#include "rootclosure/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootclosure/errors.hpp"

namespace rootclosure {

RingPtr PolyRing::create(Field field, std::vector<std::string> variables,
                         std::vector<std::uint32_t> weights, MonomialOrder order) {
  if (variables.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) throw std::invalid_argument("one weight per variable required");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (weights[i] == 0) throw std::invalid_argument("weight of " + variables[i] + " must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i] == variables[j]) throw std::invalid_argument("duplicate variable " + variables[i]);
    }
  }
  auto ring = std::shared_ptr<PolyRing>(new PolyRing());
  ring->field_ = std::move(field);
  ring->variables_ = std::move(variables);
  ring->weights_ = std::move(weights);
  std::copy(ring->weights_.begin(), ring->weights_.end(), ring->weight_slots_.begin());
  ring->order_ = order;
  return ring;
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

Monomial PolyRing::monomial(std::span<const std::uint32_t> exponents) const {
  if (exponents.size() > variables_.size()) throw std::invalid_argument("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > UINT16_MAX) throw std::overflow_error("exponent too large");
    m.exps[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  m.degree = degree_of(m);
  return m;
}

Monomial PolyRing::variable(std::size_t index, std::uint32_t power) const {
  if (power > UINT16_MAX) throw std::overflow_error("exponent too large");
  Monomial m;
  m.exps[index] = static_cast<std::uint16_t>(power);
  m.degree = weight_slots_[index] * power;
  return m;
}

std::uint32_t PolyRing::degree_of(const Monomial& m) const {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) d += weight_slots_[i] * m.exps[i];
  return d;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = variables_.size();
  if (order_.elimination_mask != 0) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (order_.elimination_mask & (1U << i)) {
        da += weight_slots_[i] * a.exps[i];
        db += weight_slots_[i] * b.exps[i];
      }
    }
    if (da != db) return da < db ? -1 : 1;
  }
  switch (order_.kind) {
    case MonomialOrder::Kind::DegRevLex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Kind::DegLex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      [[fallthrough]];
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
      }
      return 0;
  }
  return 0;
}

Monomial PolyRing::multiply(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint32_t e = std::uint32_t{a.exps[i]} + b.exps[i];
    if (e > UINT16_MAX) throw std::overflow_error("exponent overflow");
    m.exps[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

Monomial PolyRing::divide(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps[i] = static_cast<std::uint16_t>(a.exps[i] - b.exps[i]);
  m.degree = a.degree - b.degree;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
  m.degree = degree_of(m);
  return m;
}

Monomial PolyRing::power(const Monomial& a, unsigned n) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint64_t e = std::uint64_t{a.exps[i]} * n;
    if (e > UINT16_MAX) throw std::overflow_error("exponent overflow");
    m.exps[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree * n;
  return m;
}

bool PolyRing::same_as(const PolyRing& other) const {
  if (this == &other) return true;
  return field_ == other.field_ && variables_ == other.variables_ && weights_ == other.weights_ &&
         order_ == other.order_;
}

RingPtr PolyRing::with_variable(const std::string& name, std::uint32_t weight, bool first,
                                MonomialOrder order) const {
  auto vars = variables_;
  auto weights = weights_;
  if (first) {
    vars.insert(vars.begin(), name);
    weights.insert(weights.begin(), weight);
  } else {
    vars.push_back(name);
    weights.push_back(weight);
  }
  return create(field_, std::move(vars), std::move(weights), order);
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return create(field_, variables_, weights_, order); }

RingPtr PolyRing::with_field(Field field) const {
  return create(std::move(field), variables_, weights_, order_);
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables_[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::description() const {
  std::string out = field_.description() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ", ";
    out += variables_[i];
    if (weights_[i] != 1) out += ":" + std::to_string(weights_[i]);
  }
  return out + "]";
}

}  // namespace rootclosure
