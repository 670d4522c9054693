#pragma once

#include <span>
#include <string>
#include <vector>

#include "rootclosure/ring.hpp"

namespace rootclosure {

// Sparse polynomial: nonzero terms sorted strictly descending in the ring's
// monomial order. The empty term list is zero.
class Polynomial {
 public:
  struct Term {
    Scalar coeff;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial from_int(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Scalar& c, const Monomial& m);
  // Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Terms must already be nonzero and strictly descending.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coefficient() const { return terms_.front().coeff; }
  Scalar coefficient_of(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  // *this + c * m * g, computed by a single merge.
  Polynomial add_scaled(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  // Leading coefficient 1; zero stays zero.
  Polynomial monic() const;
  // Everything but the leading term.
  Polynomial tail() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

// f^n by binary exponentiation; f^0 = 1.
Polynomial pow(const Polynomial& f, unsigned n);

struct WeightedDegree {
  std::uint32_t degree;
  bool homogeneous;
};

// Maximum weighted degree over the terms. Throws ZeroPolynomialError.
WeightedDegree weighted_degree(const Polynomial& f);
// Minimum weighted degree over the terms. Throws ZeroPolynomialError.
std::uint32_t lowest_degree(const Polynomial& f);
Polynomial homogeneous_component(const Polynomial& f, std::uint32_t degree);
// Smallest nonzero homogeneous component (zero for f = 0).
Polynomial lowest_component(const Polynomial& f);

// Ring homomorphism given by the image of every variable. The coefficient
// field of f must embed into the target's field (NoEmbeddingError).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target);

// Re-homes f into a ring sharing the field, sending variable i to target
// variable index_map[i]. Cheaper than substitute for inclusions.
Polynomial map_variables(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> index_map);

// Inclusion into a ring that contains every variable of f's ring by name.
Polynomial embed_by_name(const Polynomial& f, const RingPtr& target);

std::string to_string(const std::vector<Polynomial>& polys);

}  // namespace rootclosure
