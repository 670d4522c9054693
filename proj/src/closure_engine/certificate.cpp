#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rootclosure/certificate.hpp"
#include "rootclosure/closure.hpp"
#include "rootclosure/errors.hpp"
#include "rootclosure/monomial_oracle.hpp"

namespace rootclosure {

void SearchBudget::validate() const {
  if (max_exponent == 0) throw std::invalid_argument("budget: max exponent must be at least 1");
  if (max_degree == 0) throw std::invalid_argument("budget: max candidate degree must be at least 1");
  if (max_tower == 0) throw std::invalid_argument("budget: max tower depth must be at least 1");
}

std::string to_string(RootSearchResult::Status s) {
  switch (s) {
    case RootSearchResult::Status::Found:
      return "Found";
    case RootSearchResult::Status::NotFoundWithinBudget:
      return "NotFoundWithinBudget";
    case RootSearchResult::Status::NotMemberExact:
      return "NotMemberExact";
  }
  return "?";
}

Polynomial witness_products_value(const Witness& w, const Ideal& ideal) {
  const auto& gens = ideal.generators();
  Polynomial sum(ideal.base());
  for (const auto& [factors, multiplier] : w.products) {
    Polynomial term = multiplier;
    for (auto index : factors) term = term * gens.at(index);
    sum += term;
  }
  return sum;
}

std::string certificate_problem(const RootCertificate& c) {
  if (c.exponent == 0) return "exponent must be at least 1";
  const RingPtr& base = c.ideal.base();
  if (!c.element.ring()->same_as(*base)) return "element is not in the ideal's ring";
  const auto& gens = c.ideal.generators();
  Polynomial rhs(base);
  for (const auto& [factors, multiplier] : c.witness.products) {
    if (factors.size() != c.exponent) return "witness product has the wrong number of factors";
    if (!multiplier.ring()->same_as(*base)) return "witness multiplier is not in the ideal's ring";
    Polynomial term = multiplier;
    for (auto index : factors) {
      if (index >= gens.size()) return "witness refers to a missing generator";
      term = term * gens[index];
    }
    rhs += term;
  }
  const auto& relations = c.ideal.ring()->relations();
  if (c.witness.relations.size() > relations.size()) return "witness has more relation coefficients than relations";
  for (std::size_t j = 0; j < c.witness.relations.size(); ++j) {
    if (!c.witness.relations[j].ring()->same_as(*base)) return "relation coefficient is not in the ideal's ring";
    rhs += c.witness.relations[j] * relations[j];
  }
  if (pow(c.element, c.exponent) != rhs) return "witness does not expand to element^exponent";
  return {};
}

RootCertificate finalize_certificate(Polynomial element, unsigned exponent, Ideal ideal,
                                     std::map<std::vector<std::uint32_t>, Polynomial> products) {
  if (exponent == 0) throw InvalidCertificateError("exponent must be at least 1");
  const PresentedRing& ring = *ideal.ring();
  Witness w;
  for (auto& [factors, multiplier] : products) {
    Polynomial m = ring.reduce(multiplier);
    if (!m.is_zero()) w.products.emplace(factors, std::move(m));
  }
  const Polynomial residual = pow(element, exponent) - witness_products_value(w, ideal);
  if (!residual.is_zero()) {
    auto rel = ring.relation_cofactors(residual);
    if (!rel) throw InvalidCertificateError("witness does not agree with element^exponent modulo the relations");
    w.relations = std::move(*rel);
  }
  RootCertificate c{std::move(element), exponent, std::move(ideal), std::move(w)};
  if (auto problem = certificate_problem(c); !problem.empty()) throw InvalidCertificateError(problem);
  return c;
}

namespace {

bool nilpotent(const Polynomial& x, const QuotientPtr& ring) {
  if (ring->is_polynomial_ring()) return x.is_zero();
  static std::mutex mutex;
  static std::map<std::string, bool> cache;
  const std::string key = ring->description() + "|" + x.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const bool result = radical_member(x, Ideal::zero(ring)).in_radical;
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

bool degree_argument(const Polynomial& x, const Ideal& i) {
  const QuotientPtr& ring = i.ring();
  if (!ring->is_graded() || x.is_zero()) return false;
  std::uint32_t delta = std::numeric_limits<std::uint32_t>::max();
  for (const auto& g : i.generators()) delta = std::min(delta, lowest_degree(g));
  if (lowest_degree(x) >= delta) return false;
  return !nilpotent(lowest_component(x), ring);
}

bool oracle_applies(const Ideal& i) {
  return i.is_monomial() && i.base()->num_variables() <= NewtonPolyhedron::kMaxDimension;
}

constexpr unsigned kMonomialExponentCap = 64;

const Ideal& cached_monomial_closure(const Ideal& i) {
  static std::mutex mutex;
  static std::map<std::string, Ideal> cache;
  const std::string key = i.ring()->description() + "|" + i.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Ideal closure = monomial_integral_closure(i);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(closure)).first->second;
}

RootCertificate certify_at(const Polynomial& x, const Polynomial& power, unsigned n, const Ideal& i) {
  auto expr = i.express_in_power(power, n);
  if (!expr) throw std::logic_error("power membership without an expression");
  std::map<std::vector<std::uint32_t>, Polynomial> products;
  for (auto& p : expr->products) products.emplace(std::move(p.factors), std::move(p.multiplier));
  return finalize_certificate(x, n, i, std::move(products));
}

// x = c*m and I monomial: x^n = (c^n m^n / prod g) * prod g for n
// generators g whose product divides m^n.
RootCertificate certify_monomial(const Polynomial& x, unsigned n, const Ideal& i) {
  const RingPtr& base = i.base();
  const Field& k = base->field();
  const auto picks = monomial_root_witness(exponent_vector(x.leading_monomial(), base->num_variables()), i, n);
  if (!picks) throw std::logic_error("monomial root exponent without a witness");
  Scalar coeff = k.pow(x.leading_coefficient(), n);
  Monomial rest = base->power(x.leading_monomial(), n);
  for (auto g : *picks) {
    const Polynomial& gen = i.generators()[g];
    coeff = k.mul(coeff, k.inv(gen.leading_coefficient()));
    rest = base->divide(rest, gen.leading_monomial());
  }
  std::map<std::vector<std::uint32_t>, Polynomial> products;
  products.emplace(*picks, Polynomial::term(base, coeff, rest));
  return finalize_certificate(x, n, i, std::move(products));
}

}  // namespace

std::string exact_non_member_tag(const Polynomial& x, const Ideal& i) {
  const Polynomial xr = i.ring()->reduce(x);
  if (xr.is_zero()) return {};
  if (oracle_applies(i)) {
    if (!cached_monomial_closure(i).contains(xr)) return "monomial-oracle";
  }
  if (degree_argument(xr, i)) return "degree-argument";
  return {};
}

RootSearchResult find_root_certificate(const Polynomial& x, const Ideal& i, const SearchBudget& budget) {
  budget.validate();
  if (!x.ring()->same_as(*i.base())) throw MixedRingError();
  const QuotientPtr& ring = i.ring();
  const Polynomial xr = ring->reduce(x);
  RootSearchResult out;
  if (auto tag = exact_non_member_tag(xr, i); !tag.empty()) {
    out.status = RootSearchResult::Status::NotMemberExact;
    out.tag = std::move(tag);
    return out;
  }
  if (oracle_applies(i) && xr.is_monomial() && !xr.is_zero() && !i.is_zero()) {
    const auto e = exponent_vector(xr.leading_monomial(), i.base()->num_variables());
    if (auto n = monomial_root_exponent(e, i, std::max(kMonomialExponentCap, budget.max_exponent))) {
      out.exponents_tried = *n;
      out.status = RootSearchResult::Status::Found;
      out.certificate = certify_monomial(xr, *n, i);
      return out;
    }
  }
  Polynomial power = xr;
  for (unsigned n = 1; n <= budget.max_exponent; ++n) {
    if (n > 1) power = ring->reduce(power * xr);
    out.exponents_tried = n;
    if (i.power_contains(power, n)) {
      out.status = RootSearchResult::Status::Found;
      out.certificate = certify_at(xr, power, n, i);
      return out;
    }
  }
  return out;
}

}  // namespace rootclosure
