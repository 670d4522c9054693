#pragma once

#include <random>
#include <string>
#include <vector>

#include "rootclosure/ideal.hpp"

namespace rctest {

// Random monomial ideal in 1..3 variables over QQ with 1..4 generators of
// total degree 1..4.
inline rootclosure::Ideal random_monomial_ideal(std::mt19937_64& rng) {
  using namespace rootclosure;
  static const std::vector<std::string> names{"x", "y", "z"};
  const std::size_t nvars = 1 + rng() % 3;
  auto base = PolyRing::create(Field::rationals(), std::vector<std::string>(names.begin(), names.begin() + nvars));
  auto ring = PresentedRing::create(base);
  const std::size_t ngens = 1 + rng() % 4;
  std::vector<Polynomial> gens;
  for (std::size_t g = 0; g < ngens; ++g) {
    const unsigned degree = 1 + static_cast<unsigned>(rng() % 4);
    std::vector<std::uint32_t> e(nvars, 0);
    for (unsigned k = 0; k < degree; ++k) ++e[rng() % nvars];
    gens.push_back(Polynomial::term(base, base->field().one(), base->monomial(e)));
  }
  return Ideal(ring, gens);
}

}  // namespace rctest
