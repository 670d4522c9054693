#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rootclosure/ideal.hpp"

namespace rootclosure {

using ExponentVector = std::vector<std::uint32_t>;

// normal . v >= rhs, with normal >= 0.
struct Halfspace {
  std::vector<mpz_class> normal;
  mpz_class rhs;
};

// conv(points) + nonnegative orthant, as an intersection of halfspaces.
class NewtonPolyhedron {
 public:
  static constexpr std::size_t kMaxDimension = 4;

  // Throws std::invalid_argument above kMaxDimension; points must share the
  // dimension and be nonempty.
  NewtonPolyhedron(std::vector<ExponentVector> points, std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  const std::vector<ExponentVector>& points() const { return points_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  bool contains(const ExponentVector& v) const;

 private:
  std::size_t dimension_;
  std::vector<ExponentVector> points_;
  std::vector<Halfspace> halfspaces_;
};

ExponentVector exponent_vector(const Monomial& m, std::size_t num_variables);
Polynomial monomial_from_exponents(const RingPtr& ring, const ExponentVector& e);

// Exact integral closure through the Newton polyhedron. Throws
// NotMonomialError for non-monomial ideals or quotient rings.
Ideal monomial_integral_closure(const Ideal& i);

// Smallest n <= max_n with m^n in I^n, decided by divisibility of n*m by a
// sum of n generator exponents.
std::optional<unsigned> monomial_root_exponent(const ExponentVector& m, const Ideal& i, unsigned max_n);

// Indices into I's generators, sorted, of n generators whose product divides
// m^n; nullopt when there is none.
std::optional<std::vector<std::uint32_t>> monomial_root_witness(const ExponentVector& m, const Ideal& i, unsigned n);

// Monomials with every coordinate below the generators' componentwise
// maximum and total degree <= max_degree that pass monomial_root_exponent,
// minimalized. max_degree = 0 means the whole box.
Ideal monomial_closure_bruteforce(const Ideal& i, unsigned max_n, unsigned max_degree = 0);

// Minimal generators of the monomial ideal spanned by the given exponents,
// sorted by decreasing monomial order.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> exponents);

}  // namespace rootclosure
