#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootclosure/groebner.hpp"

namespace rootclosure {

class PresentedRing;
using QuotientPtr = std::shared_ptr<const PresentedRing>;

// Polynomial ring modulo a defining ideal D. Elements are handled as
// polynomials of the base ring and compared through their normal forms.
class PresentedRing {
 public:
  static QuotientPtr create(RingPtr base, std::vector<Polynomial> relations = {});

  const RingPtr& base() const { return base_; }
  const Field& field() const { return base_->field(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  // Reduced basis of D with lift over relations().
  const GroebnerBasis& relation_basis() const { return basis_; }
  bool is_polynomial_ring() const { return basis_.size() == 0; }
  // Every relation is weighted-homogeneous, so the grading descends.
  bool is_graded() const { return graded_; }

  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool equal(const Polynomial& f, const Polynomial& g) const { return reduce(f - g).is_zero(); }
  // Parses text in the base ring and returns its normal form.
  Polynomial element(std::string_view text) const;
  Polynomial variable(std::size_t index) const { return reduce(Polynomial::variable(base_, index)); }
  Polynomial one() const { return Polynomial::from_int(base_, 1); }
  Polynomial zero() const { return Polynomial(base_); }

  // Coefficients c_j with f = sum c_j * relations()[j]; nullopt if f is not in D.
  std::optional<std::vector<Polynomial>> relation_cofactors(const Polynomial& f) const;

  // Monomials of weighted degree d that are not divisible by a leading
  // monomial of D's basis, in decreasing monomial order.
  std::vector<Monomial> standard_monomials(std::uint32_t degree) const;

  bool same_as(const PresentedRing& other) const;
  std::string description() const;

 private:
  PresentedRing(RingPtr base, std::vector<Polynomial> relations, GroebnerBasis basis, bool graded);

  RingPtr base_;
  std::vector<Polynomial> relations_;
  GroebnerBasis basis_;
  bool graded_;
};

void require_same_ring(const PresentedRing& a, const PresentedRing& b);

// f = sum generator_coeffs[i] * generators[i] + sum relation_coeffs[j] * relations[j].
struct LinearForm {
  std::vector<Polynomial> generator_coeffs;
  std::vector<Polynomial> relation_coeffs;
};

// f = sum over products of (multiplier * product of the generators with the
// listed indices) + sum relation_coeffs[j] * relations[j].
struct PowerExpression {
  struct Product {
    std::vector<std::uint32_t> factors;
    Polynomial multiplier;
  };
  std::vector<Product> products;
  std::vector<Polynomial> relation_coeffs;
};

// Finitely generated ideal of a presented ring. Generators are stored as
// normal forms; zero and repeated generators are dropped.
class Ideal {
 public:
  Ideal(QuotientPtr ring, const std::vector<Polynomial>& generators);
  static Ideal zero(QuotientPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const QuotientPtr& ring) { return Ideal(ring, {ring->one()}); }

  const QuotientPtr& ring() const { return ring_; }
  const RingPtr& base() const { return ring_->base(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  // Polynomial ring and every generator a monomial.
  bool is_monomial() const;

  // Basis of generators + D in the base ring.
  const GroebnerBasis& basis() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return basis().is_unit_ideal(); }
  Polynomial normal_form(const Polynomial& f) const;
  std::optional<LinearForm> express(const Polynomial& f) const;

  // Products of n generators, one per multiset of generator indices in
  // lexicographic order. Not reduced or deduplicated.
  const std::vector<std::vector<std::uint32_t>>& power_multisets(unsigned n) const;
  const std::vector<Polynomial>& power_products(unsigned n) const;
  // Membership in I^n without forming the power ideal explicitly.
  bool power_contains(const Polynomial& f, unsigned n) const;
  Polynomial power_normal_form(const Polynomial& f, unsigned n) const;
  std::optional<PowerExpression> express_in_power(const Polynomial& f, unsigned n) const;

  std::string to_string() const;

 private:
  struct PowerData {
    std::vector<std::vector<std::uint32_t>> multisets;
    std::vector<Polynomial> products;
    std::optional<GroebnerBasis> basis;
    std::optional<GroebnerBasis> lifted;
  };
  struct Cache {
    std::mutex mutex;
    std::optional<GroebnerBasis> basis;
    std::optional<GroebnerBasis> lifted;
    std::vector<std::unique_ptr<PowerData>> powers;
  };

  PowerData& power_data(unsigned n) const;
  const GroebnerBasis& power_basis(unsigned n) const;

  QuotientPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
// Generators are all products of n generators, deduplicated. Throws
// std::invalid_argument for n = 0.
Ideal ideal_power(const Ideal& i, unsigned n);
// {f : f * J subset of I}, post-verified generator by generator.
Ideal ideal_colon(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
bool ideal_equal(const Ideal& i, const Ideal& j);

struct RadicalMembership {
  bool in_radical = false;
  // Smallest n <= 16 with f^n in I, when one exists.
  std::optional<unsigned> exponent;
  // Decided by 1 in I + <1 - y f> in one extra variable.
  bool by_auxiliary_variable = false;
};
RadicalMembership radical_member(const Polynomial& f, const Ideal& i);

// True iff (0 : f) = 0 in the ring.
bool is_nonzerodivisor(const Polynomial& f, const QuotientPtr& ring);

struct GradedPiece {
  std::uint32_t degree = 0;
  // Exhaustive list of the homogeneous degree-d residues lying in I
  // (finite field), zero included.
  std::vector<Polynomial> members;
  // Every enumerated residue that is not in I.
  std::size_t non_members = 0;
  // Over an infinite field for a monomial ideal: the piece is the span of
  // these monomials and `members` is empty.
  std::vector<Polynomial> spanning_monomials;
  bool is_span = false;
};
// Throws NotEnumerableError when neither enumeration strategy applies and
// BudgetExceededError above max_elements residues.
GradedPiece graded_piece_members(const Ideal& i, std::uint32_t degree, std::uint64_t max_elements = 1U << 20);

// Every homogeneous residue of weighted degree d (finite field, graded ring),
// in canonical order: coefficient vectors over standard_monomials(d) counted
// in the field's element order. Only elements with leading coefficient 1
// when `monic_only`.
std::vector<Polynomial> homogeneous_elements(const PresentedRing& ring, std::uint32_t degree, bool monic_only,
                                             std::uint64_t max_elements = 1U << 20);

// x^n + a_1 x^(n-1) + ... + a_n = 0 with a_i in I^i.
struct IntegralDependenceWitness {
  Polynomial element;
  std::vector<Polynomial> coefficients;  // a_1, ..., a_n
};
bool verify_integral_dependence(const IntegralDependenceWitness& w, const Ideal& i);

}  // namespace rootclosure
