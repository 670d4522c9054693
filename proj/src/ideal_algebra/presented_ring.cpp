#include <algorithm>

#include "rootclosure/errors.hpp"
#include "rootclosure/ideal.hpp"
#include "rootclosure/poly_parse.hpp"

namespace rootclosure {

PresentedRing::PresentedRing(RingPtr base, std::vector<Polynomial> relations, GroebnerBasis basis, bool graded)
    : base_(std::move(base)), relations_(std::move(relations)), basis_(std::move(basis)), graded_(graded) {}

QuotientPtr PresentedRing::create(RingPtr base, std::vector<Polynomial> relations) {
  bool graded = true;
  for (const auto& r : relations) {
    if (!r.ring()->same_as(*base)) throw MixedRingError("relation outside the base ring");
    if (!r.is_zero() && !weighted_degree(r).homogeneous) graded = false;
  }
  GroebnerBasis basis = buchberger(base, relations, {.track_lift = true});
  return QuotientPtr(new PresentedRing(std::move(base), std::move(relations), std::move(basis), graded));
}

Polynomial PresentedRing::reduce(const Polynomial& f) const {
  if (!f.ring()->same_as(*base_)) throw MixedRingError();
  if (basis_.size() == 0) return f;
  return remainder(f, basis_.generators());
}

Polynomial PresentedRing::element(std::string_view text) const { return reduce(parse_polynomial(text, base_)); }

std::optional<std::vector<Polynomial>> PresentedRing::relation_cofactors(const Polynomial& f) const {
  if (!f.ring()->same_as(*base_)) throw MixedRingError();
  if (f.is_zero()) return std::vector<Polynomial>(relations_.size(), Polynomial(base_));
  ReductionTrace trace = normal_form(f, basis_, true);
  if (!trace.remainder.is_zero()) return std::nullopt;
  return source_cofactors(trace, basis_);
}

namespace {

void enumerate_exponents(const PolyRing& ring, std::size_t var, std::uint32_t remaining, Monomial& current,
                         std::vector<Monomial>& out) {
  if (var == ring.num_variables()) {
    if (remaining == 0) {
      current.degree = ring.degree_of(current);
      out.push_back(current);
    }
    return;
  }
  const std::uint32_t w = ring.weights()[var];
  for (std::uint32_t e = 0; e * w <= remaining; ++e) {
    current.exps[var] = static_cast<std::uint16_t>(e);
    enumerate_exponents(ring, var + 1, remaining - e * w, current, out);
  }
  current.exps[var] = 0;
}

}  // namespace

std::vector<Monomial> PresentedRing::standard_monomials(std::uint32_t degree) const {
  std::vector<Monomial> all;
  Monomial m;
  enumerate_exponents(*base_, 0, degree, m, all);
  std::vector<Monomial> out;
  for (const auto& mono : all) {
    bool divisible = false;
    for (const auto& g : basis_.generators()) {
      if (g.leading_monomial().divides(mono)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) out.push_back(mono);
  }
  std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return base_->compare(a, b) > 0; });
  return out;
}

bool PresentedRing::same_as(const PresentedRing& other) const {
  if (this == &other) return true;
  return base_->same_as(*other.base_) && relations_ == other.relations_;
}

std::string PresentedRing::description() const {
  std::string out = base_->description();
  if (!relations_.empty()) out += "/" + to_string(relations_);
  return out;
}

void require_same_ring(const PresentedRing& a, const PresentedRing& b) {
  if (!a.same_as(b)) throw MixedRingError();
}

}  // namespace rootclosure
