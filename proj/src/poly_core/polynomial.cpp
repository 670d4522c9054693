#include "rootclosure/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootclosure/errors.hpp"

namespace rootclosure {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->same_as(*b.ring())) throw MixedRingError();
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({c, Monomial{}});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long long c) {
  const Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw std::out_of_range("variable index");
  const Monomial m = ring->variable(index);
  const Scalar one = ring->field().one();
  return term(std::move(ring), one, m);
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const PolyRing& r = *p.ring_;
  const Field& k = r.field();
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
      if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Scalar Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return field().zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({field().neg(t.coeff), t.mono});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = add_scaled(field().one(), Monomial{}, other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = add_scaled(field().neg(field().one()), Monomial{}, other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].mono);
  if (b.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
  const PolyRing& r = *a.ring_;
  const Field& k = r.field();
  std::vector<Polynomial::Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({k.mul(s.coeff, t.coeff), r.multiply(s.mono, t.mono)});
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  return times_term(c, Monomial{});
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  Polynomial out(ring_);
  const Field& k = field();
  if (k.is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  const bool unit_mono = m.is_one();
  const bool unit_coeff = k.is_one(c);
  for (const auto& t : terms_) {
    out.terms_.push_back({unit_coeff ? t.coeff : k.mul(c, t.coeff), unit_mono ? t.mono : ring_->multiply(t.mono, m)});
  }
  return out;
}

Polynomial Polynomial::add_scaled(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(*this, g);
  const PolyRing& r = *ring_;
  const Field& k = r.field();
  if (g.is_zero() || k.is_zero(c)) return *this;
  const bool unit_mono = m.is_one();
  const bool unit_coeff = k.is_one(c);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Term shifted{unit_coeff ? g.terms_[j].coeff : k.mul(c, g.terms_[j].coeff),
                 unit_mono ? g.terms_[j].mono : r.multiply(g.terms_[j].mono, m)};
    const int cmp = i == terms_.size() ? -1 : r.compare(terms_[i].mono, shifted.mono);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(std::move(shifted));
      ++j;
    } else {
      Scalar sum = k.add(terms_[i].coeff, shifted.coeff);
      if (!k.is_zero(sum)) out.terms_.push_back({std::move(sum), shifted.mono});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || field().is_one(leading_coefficient())) return *this;
  return scaled(field().inv(leading_coefficient()));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = k.is_negative(t.coeff);
    const Scalar magnitude = negative ? k.neg(t.coeff) : t.coeff;
    std::string body;
    if (t.mono.is_one()) {
      body = k.to_string(magnitude);
    } else if (k.is_one(magnitude)) {
      body = ring_->monomial_to_string(t.mono);
    } else {
      std::string c = k.to_string(magnitude);
      if (c.find(' ') != std::string::npos) c = "(" + c + ")";
      body = c + "*" + ring_->monomial_to_string(t.mono);
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

Polynomial pow(const Polynomial& f, unsigned n) {
  Polynomial result = Polynomial::from_int(f.ring(), 1);
  if (n == 0) return result;
  Polynomial base = f;
  while (true) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n == 0) break;
    base = base * base;
  }
  return result;
}

WeightedDegree weighted_degree(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  std::uint32_t hi = 0, lo = UINT32_MAX;
  for (const auto& t : f.terms()) {
    hi = std::max(hi, t.mono.degree);
    lo = std::min(lo, t.mono.degree);
  }
  return {hi, hi == lo};
}

std::uint32_t lowest_degree(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  std::uint32_t lo = UINT32_MAX;
  for (const auto& t : f.terms()) lo = std::min(lo, t.mono.degree);
  return lo;
}

Polynomial homogeneous_component(const Polynomial& f, std::uint32_t degree) {
  std::vector<Polynomial::Term> kept;
  for (const auto& t : f.terms()) {
    if (t.mono.degree == degree) kept.push_back(t);
  }
  // Already sorted and reduced.
  Polynomial out = Polynomial::from_terms(f.ring(), std::move(kept));
  return out;
}

Polynomial lowest_component(const Polynomial& f) {
  if (f.is_zero()) return f;
  return homogeneous_component(f, lowest_degree(f));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target) {
  const PolyRing& source = *f.ring();
  if (images.size() != source.num_variables()) {
    throw std::invalid_argument("substitute needs one image per variable");
  }
  for (const auto& img : images) {
    if (!img.ring()->same_as(*target)) throw MixedRingError("substitution image outside the target ring");
  }
  const Field& from = source.field();
  const Field& to = target->field();
  if (!from.embeds_into(to)) {
    throw NoEmbeddingError("no embedding of " + from.description() + " into " + to.description());
  }
  // Cache powers of each image as they are needed.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto image_power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, from.embed(t.coeff, to));
    for (std::size_t v = 0; v < source.num_variables() && !term.is_zero(); ++v) {
      if (t.mono.exps[v] != 0) term = term * image_power(v, t.mono.exps[v]);
    }
    out += term;
  }
  return out;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map) {
  if (!(f.field() == target->field())) throw MixedRingError("map_variables requires a common field");
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < f.ring()->num_variables(); ++v) m.exps[index_map[v]] = t.mono.exps[v];
    m.degree = target->degree_of(m);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial embed_by_name(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->same_as(*target)) return f;
  std::vector<std::size_t> index_map;
  for (const auto& name : f.ring()->variables()) {
    auto idx = target->variable_index(name);
    if (!idx) throw MixedRingError("variable " + name + " missing from target ring");
    index_map.push_back(*idx);
  }
  if (f.field() == target->field()) return map_variables(f, target, index_map);
  std::vector<Polynomial> images;
  for (auto idx : index_map) images.push_back(Polynomial::variable(target, idx));
  return substitute(f, images, target);
}

std::string to_string(const std::vector<Polynomial>& polys) {
  std::string out = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += polys[i].to_string();
  }
  return out + ")";
}

}  // namespace rootclosure
