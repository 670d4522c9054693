#include <gtest/gtest.h>

#include <random>

#include "example_rings.hpp"
#include "monomial_generators.hpp"
#include "rootclosure/errors.hpp"
#include "rootclosure/monomial_oracle.hpp"
#include "rootclosure/rees.hpp"

using namespace rootclosure;
using rctest::cubic_ring;
using rctest::make;
using rctest::nilpotent_free_ring;
using rctest::qq_xy;
using rctest::weighted_ring;

namespace {

SearchBudget budget(unsigned n, unsigned d, unsigned l = 3) {
  SearchBudget b;
  b.max_exponent = n;
  b.max_degree = d;
  b.max_tower = l;
  return b;
}

}  // namespace

TEST(ReesPiece, Examples) {
  auto r = qq_xy();
  const Ideal i = make(r, {"x^2", "y^2"});
  auto p1 = rees_piece(i, 1, {});
  EXPECT_TRUE(ideal_equal(p1.piece, make(r, {"x^2", "x*y", "y^2"})));
  EXPECT_EQ(p1.provenance, ReesProvenance::MonomialExact);
  auto p0 = rees_piece(i, 0, {});
  EXPECT_TRUE(p0.piece.is_unit());

  auto w = weighted_ring();
  auto pc = rees_piece(make(w, {"C"}), 1, budget(9, 2));
  EXPECT_TRUE(pc.piece.contains(w->element("T")));
  EXPECT_EQ(pc.provenance, ReesProvenance::NaturalApprox);
}

TEST(ReesLift, Examples) {
  auto r = qq_xy();
  const Ideal i = make(r, {"x^2", "y^2"});
  auto c = *find_root_certificate(r->element("x*y"), i, {}).certificate;
  auto w = lift_certificate(c, i, 1);
  EXPECT_EQ(rees_witness_problem(w), "");
  EXPECT_EQ(w.lifted().to_string(), "x*y*t");
  EXPECT_EQ(pow(w.lifted(), 2).to_string(), "x^2*y^2*t^2");
  EXPECT_EQ(w.ring->description(), "QQ[x, y, t]");

  auto cubic = cubic_ring();
  const Ideal a = make(cubic, {"A"});
  SearchBudget b = budget(9, 1);
  auto cb = *find_root_certificate(cubic->element("B"), a, b).certificate;
  auto wb = lift_certificate(cb, a, 1);
  EXPECT_EQ(rees_witness_problem(wb), "");
  EXPECT_EQ(wb.exponent, 3U);
  EXPECT_EQ(pow(wb.lifted(), 3).to_string(), "B^3*t^3");

  auto c0 = *find_root_certificate(r->element("x + 1"), Ideal::unit(r), {}).certificate;
  auto w0 = lift_certificate(c0, i, 0);
  EXPECT_EQ(rees_witness_problem(w0), "");

  // Certificate over I^2 lifts at degree 2 with factors from I.
  auto sq = *find_root_certificate(r->element("x^3*y"), ideal_power(i, 2), {}).certificate;
  EXPECT_EQ(rees_witness_problem(lift_certificate(sq, i, 2)), "");
  // The ideal of a certificate over I is not a power I^2.
  EXPECT_THROW(lift_certificate(c, i, 2), InvalidCertificateError);
}

TEST(ReesLift, CorruptedWitnessIsRejected) {
  auto r = qq_xy();
  const Ideal i = make(r, {"x^2", "y^2"});
  auto c = *find_root_certificate(r->element("x*y"), i, {}).certificate;
  auto w = lift_certificate(c, i, 1);
  auto bad = w;
  bad.degree = 2;
  EXPECT_NE(rees_witness_problem(bad), "");
  bad = w;
  bad.witness.products.begin()->second += r->one();
  EXPECT_NE(rees_witness_problem(bad), "");
  bad = w;
  bad.element = r->element("x");
  EXPECT_NE(rees_witness_problem(bad), "");
}

TEST(ReesLift, NameClashGetsFreshVariable) {
  auto base = PolyRing::create(Field::prime(2), {"x", "t"});
  EXPECT_EQ(rees_ring(base)->description(), "GF(2)[x, t, t_]");
}

TEST(Theorem31, MonomialExample) {
  auto r = qq_xy();
  auto report = theorem31_check(make(r, {"x^2", "y^2"}), 3, {});
  ASSERT_EQ(report.degrees.size(), 4U);
  EXPECT_TRUE(report.pass);
  for (const auto& d : report.degrees) {
    EXPECT_TRUE(d.pass) << d.degree;
    if (d.degree > 0) {
      ASSERT_TRUE(d.monomial_exact_pass.has_value());
      EXPECT_TRUE(*d.monomial_exact_pass);
      EXPECT_EQ(d.lifted, d.generators);
    }
  }
  // Independent brute-force closures of I^n.
  const Ideal i = make(r, {"x^2", "y^2"});
  for (unsigned n = 1; n <= 3; ++n) {
    EXPECT_TRUE(ideal_equal(report.pieces[n].piece, monomial_closure_bruteforce(ideal_power(i, n), 12)));
  }
  EXPECT_FALSE(report.scope.empty());
}

TEST(Theorem31, IntegralButNotNatural) {
  auto r = nilpotent_free_ring();
  const Ideal i = make(r, {"T"});
  auto report = theorem31_check(i, 2, budget(9, 2));
  EXPECT_TRUE(report.pass);
  EXPECT_FALSE(report.pieces[1].piece.contains(r->element("A")));
  IntegralDependenceWitness w{r->element("A"), {r->element("T"), r->zero()}};
  EXPECT_TRUE(verify_integral_dependence(w, i));
}

TEST(Theorem31, ZeroIdeal) {
  auto r = qq_xy();
  auto report = theorem31_check(Ideal::zero(r), 3, {});
  EXPECT_TRUE(report.pass);
  for (unsigned n = 1; n <= 3; ++n) EXPECT_TRUE(report.pieces[n].piece.is_zero());
}

TEST(Theorem31, WeightedRingLiftsNaturalChains) {
  auto w = weighted_ring();
  auto report = theorem31_check(make(w, {"C"}), 2, budget(9, 2, 2));
  EXPECT_TRUE(report.pass);
  for (const auto& d : report.degrees) EXPECT_EQ(d.lifted, d.generators) << d.degree;
}

TEST(ReesProperties, NaturalPiecesMatchMonomialOracle) {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 25; ++trial) {
    const Ideal i = rctest::random_monomial_ideal(rng);
    for (unsigned n = 1; n <= 4; ++n) {
      auto p = rees_piece(i, n, {});
      EXPECT_EQ(p.provenance, ReesProvenance::MonomialExact);
      EXPECT_TRUE(ideal_equal(p.piece, monomial_integral_closure(ideal_power(i, n)))) << i.to_string() << " n=" << n;
    }
  }
}

TEST(ReesProperties, LiftedWitnessesVerify) {
  std::mt19937_64 rng(910);
  for (int trial = 0; trial < 40; ++trial) {
    const Ideal i = rctest::random_monomial_ideal(rng);
    const unsigned n = 1 + static_cast<unsigned>(rng() % 2);
    const Ideal power = ideal_power(i, n);
    auto a = sharp_approx(power, {});
    for (const auto& c : a.certificates()) {
      auto w = lift_certificate(c, i, n);
      EXPECT_EQ(rees_witness_problem(w), "") << c.element.to_string();
      EXPECT_EQ(w.ring->num_variables(), i.base()->num_variables() + 1);
    }
  }
}
