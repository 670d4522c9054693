#include <gtest/gtest.h>

#include <random>

#include "example_rings.hpp"
#include "generators.hpp"
#include "rootclosure/errors.hpp"
#include "rootclosure/ideal.hpp"
#include "rootclosure/poly_parse.hpp"

using namespace rootclosure;

namespace {

using rctest::cubic_ring;
using rctest::make;
using rctest::nilpotent_free_ring;
using rctest::qq_xy;
using rctest::weighted_ring;

std::vector<QuotientPtr> random_rings() {
  auto f2 = PolyRing::create(Field::prime(2), {"x", "y", "z"});
  auto f3 = PolyRing::create(Field::prime(3), {"x", "y"});
  return {PresentedRing::create(f2), PresentedRing::create(f3), nilpotent_free_ring(),
          PresentedRing::create(f2, {parse_polynomial("x*y - z^2", f2)}), qq_xy()};
}

Ideal random_ideal(const QuotientPtr& r, std::mt19937_64& rng, unsigned max_gens = 2) {
  std::vector<Polynomial> gens;
  const unsigned n = 1 + static_cast<unsigned>(rng() % max_gens);
  for (unsigned i = 0; i < n; ++i) gens.push_back(rctest::random_nonzero_polynomial(r->base(), rng, 2, 2));
  return Ideal(r, gens);
}

}  // namespace

TEST(PresentedRing, ResidueRepresentativesAreCanonical) {
  auto r = nilpotent_free_ring();
  EXPECT_EQ(r->element("A^2"), r->element("A*T"));
  EXPECT_TRUE(r->is_graded());
  EXPECT_FALSE(r->is_polynomial_ring());
  auto cof = r->relation_cofactors(parse_polynomial("A^3 - A^2*T", r->base()));
  ASSERT_TRUE(cof.has_value());
  EXPECT_EQ((*cof)[0] * r->relations()[0], parse_polynomial("A^3 - A^2*T", r->base()));
  EXPECT_FALSE(r->relation_cofactors(parse_polynomial("A", r->base())).has_value());
  auto base = PolyRing::create(Field::prime(2), {"x"});
  EXPECT_FALSE(PresentedRing::create(base, {parse_polynomial("x^2 + x", base)})->is_graded());
}

TEST(PresentedRing, StandardMonomials) {
  auto r = weighted_ring();
  // Degree 2 with A, B of weight 2: A, B, C^2, C*T, T^2, less A, the leading
  // monomial of T^2 - A - B in weighted degrevlex.
  std::vector<std::string> names;
  for (const auto& m : r->standard_monomials(2)) names.push_back(r->base()->monomial_to_string(m));
  EXPECT_EQ(names, (std::vector<std::string>{"B", "C^2", "C*T", "T^2"}));
}

TEST(IdealCombine, Examples) {
  auto r = qq_xy();
  EXPECT_EQ(ideal_product(make(r, {"x"}), make(r, {"y"})).to_string(), "(x*y)");
  EXPECT_EQ(ideal_sum(make(r, {"x^2", "y^2"}), make(r, {"x*y"})).to_string(), "(x^2, y^2, x*y)");
  auto c = cubic_ring();
  EXPECT_EQ(ideal_product(make(c, {"A"}), make(c, {"A"})).to_string(), "(A^2)");
  EXPECT_THROW(ideal_sum(make(r, {"x"}), make(c, {"A"})), MixedRingError);
}

TEST(IdealPower, Examples) {
  auto r = qq_xy();
  EXPECT_EQ(ideal_power(make(r, {"x^2", "y^2"}), 2).to_string(), "(x^4, x^2*y^2, y^4)");
  auto i = make(r, {"x^2", "x*y"});
  EXPECT_TRUE(ideal_equal(ideal_power(i, 1), i));
  auto s = nilpotent_free_ring();
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      auto p = ideal_power(make(s, {"T^" + std::to_string(m)}), n);
      EXPECT_TRUE(ideal_equal(p, make(s, {"T^" + std::to_string(m * n)})));
    }
  }
  EXPECT_THROW(ideal_power(i, 0), std::invalid_argument);
}

TEST(IdealColon, SquareByVariableWithBruteForce) {
  auto r = qq_xy();
  auto c = ideal_colon(make(r, {"x^2"}), make(r, {"x"}));
  EXPECT_TRUE(ideal_equal(c, make(r, {"x"})));
  const Ideal target = make(r, {"x^2"}), expected = make(r, {"x"});
  EXPECT_TRUE(target.contains(r->element("x*x")));
  // <x^2> is monomial, so f*x in <x^2> iff every term of f does; scan all
  // monomials of degree <= 3.
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; a + b <= 3; ++b) {
      const Polynomial m = r->element("x^" + std::to_string(a) + "*y^" + std::to_string(b));
      EXPECT_EQ(target.contains(m * r->element("x")), expected.contains(m));
    }
  }
}

TEST(IdealColon, TrivialAndZeroDivisorCases) {
  auto r = qq_xy();
  auto i = make(r, {"x^2 + y", "x*y"});
  EXPECT_TRUE(ideal_equal(ideal_colon(i, Ideal::unit(r)), i));
  EXPECT_TRUE(ideal_colon(i, Ideal::zero(r)).is_unit());
  auto s = nilpotent_free_ring();
  EXPECT_TRUE(ideal_colon(Ideal::zero(s), make(s, {"T"})).is_zero());
  auto ann = ideal_colon(Ideal::zero(s), make(s, {"A"}));
  EXPECT_TRUE(ideal_equal(ann, make(s, {"A - T"})));
}

TEST(IdealEqual, Examples) {
  auto r = PresentedRing::create(PolyRing::create(Field::rationals(), {"x", "y"}));
  EXPECT_TRUE(ideal_equal(make(r, {"x^2 - 1", "x - 1"}), make(r, {"x - 1"})));
  EXPECT_FALSE(ideal_equal(make(r, {"x"}), make(r, {"y"})));
  auto i = make(r, {"x^2", "y^3"});
  EXPECT_TRUE(ideal_equal(i, ideal_sum(i, make(r, {"x^2*y + y^4"}))));
}

TEST(RadicalMember, Examples) {
  auto r = qq_xy();
  auto res = radical_member(r->element("y"), make(r, {"y^2"}));
  EXPECT_TRUE(res.in_radical);
  EXPECT_EQ(res.exponent, 2U);

  auto c = cubic_ring();
  auto nil = radical_member(c->element("A^2*T + A*B*T + B^2*T"), Ideal::zero(c));
  EXPECT_TRUE(nil.in_radical);

  auto s = nilpotent_free_ring();
  auto a = radical_member(s->element("A"), Ideal::zero(s));
  EXPECT_FALSE(a.in_radical);
  EXPECT_FALSE(a.exponent.has_value());
}

TEST(RadicalMember, AuxiliaryVariablePath) {
  // x^17 in <x^17>: no exponent <= 16 works, the extra variable decides.
  auto r = qq_xy();
  auto res = radical_member(r->element("x"), make(r, {"x^17"}));
  EXPECT_TRUE(res.in_radical);
  EXPECT_TRUE(res.by_auxiliary_variable);
}

TEST(RadicalMember, WeightedRingGenerators) {
  auto r = weighted_ring();
  for (const char* g : {"T^2 - A - B", "T^4 + T*C^3", "B^2*T + B*T^3 + T^2*C^3", "B^3 + C^6"}) {
    EXPECT_TRUE(radical_member(r->element(g), Ideal::zero(r)).in_radical) << g;
  }
}

TEST(NonZeroDivisor, Examples) {
  auto s = nilpotent_free_ring();
  EXPECT_TRUE(is_nonzerodivisor(s->element("T"), s));
  EXPECT_FALSE(is_nonzerodivisor(s->element("A"), s));
  EXPECT_TRUE(s->is_zero(s->element("A") * s->element("A - T")));
  EXPECT_TRUE(is_nonzerodivisor(s->one(), s));
}

TEST(GradedPiece, PowerOfMaximalIdealInWeightedRing) {
  auto r = weighted_ring();
  auto m = make(r, {"A", "B", "C"});
  for (unsigned d = 1; d <= 4; ++d) {
    auto piece = graded_piece_members(ideal_power(m, d), d);
    ASSERT_EQ(piece.members.size(), 2U) << d;
    EXPECT_TRUE(piece.members[0].is_zero());
    EXPECT_EQ(piece.members[1], r->element("C^" + std::to_string(d)));
  }
}

TEST(GradedPiece, DegreeOneOfPrincipalIdeal) {
  auto c = cubic_ring();
  auto piece = graded_piece_members(make(c, {"A"}), 1);
  ASSERT_EQ(piece.members.size(), 2U);
  EXPECT_TRUE(piece.members[0].is_zero());
  EXPECT_EQ(piece.members[1].to_string(), "A");
  EXPECT_EQ(piece.non_members, 6U);
  auto zero = graded_piece_members(Ideal::zero(c), 2);
  ASSERT_EQ(zero.members.size(), 1U);
  EXPECT_TRUE(zero.members[0].is_zero());
}

TEST(GradedPiece, MonomialIdealOverRationalsAndNotEnumerable) {
  auto r = qq_xy();
  auto piece = graded_piece_members(make(r, {"x^2", "y^3"}), 3);
  EXPECT_TRUE(piece.is_span);
  EXPECT_EQ(rootclosure::to_string(piece.spanning_monomials), "(x^3, x^2*y, y^3)");
  EXPECT_THROW(graded_piece_members(make(r, {"x + y"}), 1), NotEnumerableError);
}

TEST(IntegralDependence, Examples) {
  auto s = nilpotent_free_ring();
  EXPECT_TRUE(verify_integral_dependence({s->element("A"), {s->element("T"), s->zero()}}, make(s, {"T"})));
  auto r = qq_xy();
  auto i = make(r, {"x^2", "y^2"});
  EXPECT_TRUE(verify_integral_dependence({r->element("x*y"), {r->zero(), r->element("-x^2*y^2")}}, i));
  EXPECT_TRUE(verify_integral_dependence({r->element("x^2"), {r->element("-x^2")}}, i));
  EXPECT_FALSE(verify_integral_dependence({r->element("x*y"), {r->zero(), r->element("-x^2*y^2 + x^4")}}, i));
  // Right identity, coefficient outside I^1.
  EXPECT_FALSE(verify_integral_dependence({r->element("x"), {r->element("-x")}}, i));
}

TEST(Properties, PowersMultiply) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 8; ++round) {
    for (const auto& r : random_rings()) {
      auto i = random_ideal(r, rng);
      for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned n = 1; m + n <= 5; ++n) {
          EXPECT_TRUE(ideal_equal(ideal_product(ideal_power(i, m), ideal_power(i, n)), ideal_power(i, m + n)));
        }
      }
    }
  }
}

TEST(Properties, ColonTimesDivisorInsideIdeal) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 20; ++round) {
    for (const auto& r : random_rings()) {
      auto i = random_ideal(r, rng, 3);
      auto j = random_ideal(r, rng);
      auto c = ideal_colon(i, j);
      EXPECT_TRUE(i.contains(ideal_product(c, j)));
      EXPECT_TRUE(c.contains(i));
    }
  }
}

TEST(Properties, ResidueArithmeticSound) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 100; ++round) {
    for (const auto& r : random_rings()) {
      auto f = rctest::random_polynomial(r->base(), rng, 4, 3), g = rctest::random_polynomial(r->base(), rng, 4, 3);
      EXPECT_EQ(r->reduce(f * g), r->reduce(r->reduce(f) * r->reduce(g)));
    }
  }
}

TEST(Properties, GradedPieceMembersAgreeWithMembership) {
  std::mt19937_64 rng(44);
  for (const auto& r : {cubic_ring(), weighted_ring(), nilpotent_free_ring()}) {
    for (int round = 0; round < 6; ++round) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k) {
        auto elems = homogeneous_elements(*r, 1 + static_cast<std::uint32_t>(rng() % 2), true);
        gens.push_back(elems[rng() % elems.size()]);
      }
      Ideal i(r, gens);
      for (std::uint32_t d = 1; d <= 3; ++d) {
        auto all = homogeneous_elements(*r, d, false);
        auto piece = graded_piece_members(i, d);
        EXPECT_EQ(piece.members.size() + piece.non_members, all.size());
        for (const auto& f : piece.members) EXPECT_TRUE(i.contains(f));
        std::size_t outside = 0;
        for (const auto& f : all) outside += i.contains(f) ? 0 : 1;
        EXPECT_EQ(outside, piece.non_members);
      }
    }
  }
}

TEST(Properties, IntegralDependenceRejectsCorruptedWitnesses) {
  std::mt19937_64 rng(45);
  for (int round = 0; round < 40; ++round) {
    for (const auto& r : random_rings()) {
      auto i = random_ideal(r, rng);
      const auto& base = r->base();
      // x in I makes every choice of a_1..a_(n-1) completable.
      const Polynomial x = r->reduce(rctest::random_nonzero_polynomial(base, rng, 2, 1) * i.generators()[0]);
      const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
      IntegralDependenceWitness w{x, {}};
      Polynomial sum = pow(x, n);
      for (unsigned k = 1; k < n; ++k) {
        const auto& prods = i.power_products(k);
        Polynomial a = rctest::random_polynomial(base, rng, 2, 1) * prods[rng() % prods.size()];
        w.coefficients.push_back(a);
        sum += a * pow(x, n - k);
      }
      w.coefficients.push_back(-sum);
      EXPECT_TRUE(verify_integral_dependence(w, i));
      // Corrupt one coefficient by a residue that is nonzero in the ring.
      auto bad = w;
      const std::size_t slot = rng() % n;
      Polynomial delta = rctest::random_nonzero_polynomial(base, rng, 2, 2);
      if (r->is_zero(delta)) delta = r->one();
      bad.coefficients[slot] += delta * pow(x, 0);
      Polynomial expansion = pow(bad.element, n);
      for (unsigned k = 1; k <= n; ++k) expansion += bad.coefficients[k - 1] * pow(bad.element, n - k);
      EXPECT_EQ(verify_integral_dependence(bad, i),
                r->is_zero(expansion) && [&] {
                  for (unsigned k = 1; k <= n; ++k) {
                    if (!i.power_contains(bad.coefficients[k - 1], k)) return false;
                  }
                  return true;
                }());
      if (r->is_polynomial_ring()) {
        EXPECT_FALSE(verify_integral_dependence(bad, i));
      }
    }
  }
}
