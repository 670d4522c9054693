#pragma once

#include <random>
#include <vector>

#include "example_rings.hpp"
#include "generators.hpp"

namespace rctest {

inline std::vector<QuotientPtr> small_rings() {
  auto f2 = PolyRing::create(Field::prime(2), {"x", "y"});
  auto f3 = PolyRing::create(Field::prime(3), {"x", "y"});
  return {PresentedRing::create(f2), PresentedRing::create(f3), nilpotent_free_ring(),
          PresentedRing::create(f2, {parse_polynomial("x^2*y + x*y^2", f2)})};
}

// 1..2 monic homogeneous generators of degree 1..2.
inline Ideal random_homogeneous_ideal(const QuotientPtr& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  const unsigned n = 1 + static_cast<unsigned>(rng() % 2);
  for (unsigned k = 0; k < n; ++k) {
    const auto d = static_cast<std::uint32_t>(1 + rng() % 2);
    auto elems = homogeneous_elements(*r, d, true);
    gens.push_back(elems[rng() % elems.size()]);
  }
  return Ideal(r, gens);
}

inline Polynomial random_element(const QuotientPtr& r, std::mt19937_64& rng) {
  return r->reduce(random_polynomial(r->base(), rng, 3, 2));
}

}  // namespace rctest
