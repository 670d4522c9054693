#include <stdexcept>

#include "rootclosure/errors.hpp"
#include "rootclosure/ideal.hpp"

namespace rootclosure {

namespace {

std::vector<Polynomial> with_relations(const Ideal& i) {
  std::vector<Polynomial> out = i.generators();
  for (const auto& d : i.ring()->relation_basis().generators()) out.push_back(d);
  return out;
}

std::vector<std::size_t> shifted_indices(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = v + offset;
  return map;
}

// Generators of <p> intersected with <q> in the base polynomial ring, by
// eliminating s from s*<p> + (1 - s)*<q>.
std::vector<Polynomial> intersect_lists(const RingPtr& base, const std::vector<Polynomial>& p,
                                        const std::vector<Polynomial>& q) {
  if (p.empty() || q.empty()) return {};
  MonomialOrder order = base->order();
  order.elimination_mask = 1;
  const RingPtr ext = base->with_variable("__s", 1, true, order);
  const auto up = shifted_indices(base->num_variables(), 1);
  const Polynomial s = Polynomial::variable(ext, 0);
  const Polynomial one_minus_s = Polynomial::from_int(ext, 1) - s;
  std::vector<Polynomial> gens;
  for (const auto& f : p) gens.push_back(s * map_variables(f, ext, up));
  for (const auto& f : q) gens.push_back(one_minus_s * map_variables(f, ext, up));
  const GroebnerBasis gb = buchberger(ext, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free_of_s = true;
    for (const auto& t : g.terms()) free_of_s = free_of_s && t.mono.exps[0] == 0;
    if (!free_of_s) continue;
    std::vector<Polynomial::Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (std::size_t v = 0; v < base->num_variables(); ++v) m.exps[v] = t.mono.exps[v + 1];
      m.degree = base->degree_of(m);
      terms.push_back({t.coeff, m});
    }
    out.push_back(Polynomial::from_terms(base, std::move(terms)));
  }
  return out;
}

// (I + D) : j in the base ring, for a nonzero polynomial j.
std::vector<Polynomial> colon_by_element(const Ideal& i, const Polynomial& j) {
  const RingPtr& base = i.base();
  const std::vector<Polynomial> single{j};
  std::vector<Polynomial> out;
  for (const auto& h : intersect_lists(base, with_relations(i), single)) {
    ReductionTrace trace = reduce(h, single, true);
    if (!trace.remainder.is_zero()) throw std::logic_error("intersection element not divisible by colon generator");
    out.push_back(trace.cofactors.empty() ? Polynomial(base) : trace.cofactors[0].second);
  }
  return out;
}

}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring(), *j.ring());
  std::vector<Polynomial> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal(i.ring(), gens);
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring(), *j.ring());
  std::vector<Polynomial> gens;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) gens.push_back(a * b);
  }
  return Ideal(i.ring(), gens);
}

Ideal ideal_power(const Ideal& i, unsigned n) {
  if (n == 0) throw std::invalid_argument("ideal power needs n >= 1");
  return Ideal(i.ring(), i.power_products(n));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring(), *j.ring());
  return Ideal(i.ring(), intersect_lists(i.base(), with_relations(i), with_relations(j)));
}

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring(), *j.ring());
  const QuotientPtr& ring = i.ring();
  std::optional<std::vector<Polynomial>> acc;
  for (const auto& g : j.generators()) {
    std::vector<Polynomial> part = colon_by_element(i, g);
    acc = acc ? intersect_lists(i.base(), *acc, part) : part;
  }
  Ideal result = acc ? Ideal(ring, *acc) : Ideal::unit(ring);
  for (const auto& q : result.generators()) {
    for (const auto& g : j.generators()) {
      if (!i.contains(q * g)) throw std::logic_error("colon ideal failed verification");
    }
  }
  return result;
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring(), *j.ring());
  return i.basis().generators() == j.basis().generators();
}

RadicalMembership radical_member(const Polynomial& f, const Ideal& i) {
  const QuotientPtr& ring = i.ring();
  const Polynomial x = ring->reduce(f);
  Polynomial power = ring->one();
  for (unsigned n = 1; n <= 16; ++n) {
    power = ring->reduce(power * x);
    if (i.contains(power)) return {true, n, false};
  }
  const RingPtr& base = i.base();
  const RingPtr ext = base->with_variable("__y", 1, false, base->order());
  std::vector<std::size_t> same(base->num_variables());
  for (std::size_t v = 0; v < same.size(); ++v) same[v] = v;
  std::vector<Polynomial> gens;
  for (const auto& g : with_relations(i)) gens.push_back(map_variables(g, ext, same));
  const Polynomial y = Polynomial::variable(ext, base->num_variables());
  gens.push_back(Polynomial::from_int(ext, 1) - y * map_variables(x, ext, same));
  const bool unit = buchberger(ext, gens).is_unit_ideal();
  return {unit, std::nullopt, unit};
}

bool is_nonzerodivisor(const Polynomial& f, const QuotientPtr& ring) {
  const Ideal annihilator = ideal_colon(Ideal::zero(ring), Ideal(ring, {f}));
  return annihilator.is_zero();
}

std::vector<Polynomial> homogeneous_elements(const PresentedRing& ring, std::uint32_t degree, bool monic_only,
                                             std::uint64_t max_elements) {
  const Field& k = ring.field();
  if (!k.is_finite() || !ring.is_graded()) {
    throw NotEnumerableError("homogeneous elements are enumerable only over a finite field with graded relations");
  }
  const std::vector<Monomial> monos = ring.standard_monomials(degree);
  const std::vector<Scalar> elems = k.elements();
  const std::uint64_t q = elems.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (total > max_elements / q + 1) throw BudgetExceededError("too many homogeneous elements to enumerate");
    total *= q;
  }
  if (total > max_elements) throw BudgetExceededError("too many homogeneous elements to enumerate");
  std::vector<Polynomial> out;
  std::vector<std::uint64_t> digits(monos.size(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = monos.size(); i-- > 0;) {
      digits[i] = c % q;
      c /= q;
    }
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (digits[i] != 0) terms.push_back({elems[digits[i]], monos[i]});
    }
    if (monic_only && (terms.empty() || !k.is_one(terms.front().coeff))) continue;
    out.push_back(Polynomial::from_sorted_terms(ring.base(), std::move(terms)));
  }
  return out;
}

GradedPiece graded_piece_members(const Ideal& i, std::uint32_t degree, std::uint64_t max_elements) {
  const PresentedRing& ring = *i.ring();
  GradedPiece piece;
  piece.degree = degree;
  if (ring.field().is_finite() && ring.is_graded()) {
    for (auto& f : homogeneous_elements(ring, degree, false, max_elements)) {
      if (i.contains(f)) {
        piece.members.push_back(std::move(f));
      } else {
        ++piece.non_members;
      }
    }
    return piece;
  }
  if (i.is_monomial()) {
    piece.is_span = true;
    for (const auto& m : ring.standard_monomials(degree)) {
      for (const auto& g : i.generators()) {
        if (g.leading_monomial().divides(m)) {
          piece.spanning_monomials.push_back(Polynomial::term(ring.base(), ring.field().one(), m));
          break;
        }
      }
    }
    return piece;
  }
  throw NotEnumerableError("graded piece needs a finite field or a monomial ideal");
}

bool verify_integral_dependence(const IntegralDependenceWitness& w, const Ideal& i) {
  const QuotientPtr& ring = i.ring();
  const auto n = static_cast<unsigned>(w.coefficients.size());
  if (n == 0) return false;
  if (!w.element.ring()->same_as(*i.base())) return false;
  Polynomial sum = pow(w.element, n);
  for (unsigned k = 1; k <= n; ++k) {
    const Polynomial& a = w.coefficients[k - 1];
    if (!a.ring()->same_as(*i.base())) return false;
    sum += a * pow(w.element, n - k);
    if (!i.power_contains(a, k)) return false;
  }
  return ring->is_zero(sum);
}

}  // namespace rootclosure
