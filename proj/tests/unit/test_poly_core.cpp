#include <gtest/gtest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "rootclosure/errors.hpp"
#include "rootclosure/poly_parse.hpp"

using namespace rootclosure;
using rctest::random_nonzero_polynomial;
using rctest::random_polynomial;

namespace {

RingPtr qq_xy() { return PolyRing::create(Field::rationals(), {"X", "Y"}); }
RingPtr f2_xy() { return PolyRing::create(Field::prime(2), {"X", "Y"}); }
Field f4() { return Field::extension(2, {1, 1, 1}); }

// Evaluates f at a point whose coordinates live in the field of `point_ring`
// (a ring without variables) by substituting constants.
Scalar evaluate(const Polynomial& f, const RingPtr& point_ring, const std::vector<Scalar>& point) {
  std::vector<Polynomial> images;
  for (const auto& c : point) images.push_back(Polynomial::constant(point_ring, c));
  Polynomial v = substitute(f, images, point_ring);
  return v.is_zero() ? point_ring->field().zero() : v.leading_coefficient();
}

// Test-side reference: exhaustive factor search for a monic univariate
// polynomial over F_p (coefficients low to high).
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    a.pop_back();
  }
  return a;
}

bool reducible_by_search(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      auto r = poly_rem(f, g, p);
      bool zero = true;
      for (auto x : r) zero = zero && x == 0;
      if (zero) return true;
    }
  }
  return false;
}

// Naive product through an exponent map, independent of the sorted merge.
std::map<std::vector<int>, Scalar> naive_product(const Polynomial& f, const Polynomial& g) {
  const Field& k = f.field();
  std::map<std::vector<int>, Scalar> acc;
  const std::size_t n = f.ring()->num_variables();
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = s.mono.exps[i] + t.mono.exps[i];
      auto it = acc.find(e);
      const Scalar c = k.mul(s.coeff, t.coeff);
      if (it == acc.end()) {
        acc.emplace(e, c);
      } else {
        it->second = k.add(it->second, c);
      }
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = k.is_zero(it->second) ? acc.erase(it) : std::next(it);
  return acc;
}

std::map<std::vector<int>, Scalar> as_map(const Polynomial& f) {
  std::map<std::vector<int>, Scalar> out;
  for (const auto& t : f.terms()) {
    std::vector<int> e(f.ring()->num_variables());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono.exps[i];
    out.emplace(e, t.coeff);
  }
  return out;
}

std::vector<RingPtr> property_rings() {
  return {PolyRing::create(Field::prime(2), {"x", "y", "z"}), PolyRing::create(Field::prime(3), {"x", "y"}),
          PolyRing::create(f4(), {"x", "y", "z"}), PolyRing::create(Field::rationals(), {"x", "y", "z"}),
          PolyRing::create(Field::prime(5), {"A", "B", "C", "T"}, {2, 2, 1, 1})};
}

}  // namespace

TEST(Field, RejectsCompositeModulus) {
  try {
    Field::prime(4);
    FAIL() << "composite modulus accepted";
  } catch (const InvalidFieldError& e) {
    EXPECT_EQ(e.reason(), InvalidFieldError::Reason::NotPrime);
  }
  EXPECT_THROW(Field::prime(1), InvalidFieldError);
  EXPECT_NO_THROW(Field::prime(2147483647));
}

TEST(Field, RejectsReducibleMinimalPolynomial) {
  try {
    Field::extension(2, {1, 0, 1});
    FAIL() << "x^2 + 1 accepted over F_2";
  } catch (const InvalidFieldError& e) {
    EXPECT_EQ(e.reason(), InvalidFieldError::Reason::Reducible);
  }
  EXPECT_THROW(Field::extension(2, {1, 1}), InvalidFieldError);
  EXPECT_THROW(Field::extension(2, {1, 1, 0, 0, 0, 1}), InvalidFieldError);
}

TEST(Field, IrreducibilityMatchesExhaustiveSearch) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (std::size_t k = 2; k <= 4; ++k) {
      if (p == 5 && k == 4) continue;
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < k; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> f(k + 1);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
          f[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        f[k] = 1;
        EXPECT_EQ(is_irreducible_mod_p(f, p), !reducible_by_search(f, p)) << "p=" << p << " code=" << code;
      }
    }
  }
}

TEST(Field, AxiomsOnFiniteFields) {
  for (const Field& k : {Field::prime(7), f4(), Field::extension(3, {1, 0, 1}), Field::extension(2, {1, 1, 0, 1})}) {
    const auto elems = k.elements();
    ASSERT_EQ(elems.size(), *k.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Scalar& a = elems[i];
      EXPECT_EQ(k.ordinal(a), i);
      EXPECT_TRUE(k.is_zero(k.add(a, k.neg(a))));
      if (!k.is_zero(a)) EXPECT_TRUE(k.is_one(k.mul(a, k.inv(a))));
      for (const Scalar& b : elems) {
        EXPECT_EQ(k.mul(a, b), k.mul(b, a));
        EXPECT_EQ(k.add(k.sub(a, b), b), a);
      }
    }
    EXPECT_THROW(k.inv(k.zero()), std::domain_error);
  }
}

TEST(Field, RationalCanonicalForm) {
  const Field q = Field::rationals();
  const Scalar half = q.mul(q.from_int(2), q.inv(q.from_int(4)));
  EXPECT_EQ(q.to_string(half), "1/2");
  EXPECT_EQ(q.to_string(q.neg(half)), "-1/2");
  EXPECT_EQ(q.to_string(q.from_integer_string("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_EQ(Field::prime(7).to_string(Field::prime(7).from_int(-1)), "6");
}

TEST(Field, DescriptionAndEmbedding) {
  EXPECT_EQ(Field::prime(2).description(), "GF(2)");
  EXPECT_EQ(f4().description(), "GF(2^2, w^2 + w + 1)");
  EXPECT_EQ(Field::rationals().description(), "QQ");
  EXPECT_TRUE(Field::prime(2).embeds_into(f4()));
  EXPECT_FALSE(f4().embeds_into(Field::prime(2)));
  EXPECT_FALSE(Field::prime(3).embeds_into(f4()));
  EXPECT_THROW(f4().embed(f4().generator(), Field::prime(2)), NoEmbeddingError);
}

TEST(PolyArith, SquareOverRationals) {
  auto r = qq_xy();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  EXPECT_EQ((x + y) * (x + y), parse_polynomial("X^2 + 2*X*Y + Y^2", r));
  EXPECT_EQ(((x + y) * (x + y)).to_string(), "X^2 + 2*X*Y + Y^2");
}

TEST(PolyArith, SquareInCharacteristicTwoAgreesWithEvaluationInF4) {
  auto r = f2_xy();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  const Polynomial sq = (x + y) * (x + y);
  EXPECT_EQ(sq.to_string(), "X^2 + Y^2");
  auto point_ring = PolyRing::create(f4(), {});
  const Field k = f4();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    std::vector<Scalar> pt{rctest::random_scalar(k, rng), rctest::random_scalar(k, rng)};
    const Scalar s = k.add(pt[0], pt[1]);
    EXPECT_EQ(evaluate(sq, point_ring, pt), k.mul(s, s));
  }
}

TEST(PolyArith, ZeroAbsorbsAndMixedRingsThrow) {
  auto r = qq_xy();
  auto f = parse_polynomial("X^3 - 2*Y + 1", r);
  EXPECT_TRUE((f * Polynomial(r)).is_zero());
  EXPECT_THROW(f + Polynomial::variable(f2_xy(), 0), MixedRingError);
  EXPECT_THROW(f * Polynomial::variable(PolyRing::create(Field::rationals(), {"X", "Z"}), 0), MixedRingError);
}

TEST(PolyPow, BinomialCoefficients) {
  auto r = qq_xy();
  auto s = parse_polynomial("X + Y", r);
  EXPECT_EQ(pow(s, 2), parse_polynomial("X^2 + 2*X*Y + Y^2", r));
  EXPECT_EQ(pow(s, 0), Polynomial::from_int(r, 1));
  EXPECT_EQ(pow(s, 1), s);
  const Field& q = r->field();
  for (unsigned n = 1; n <= 6; ++n) {
    const Monomial m = r->monomial(std::vector<std::uint32_t>{1, 2 * n - 1});
    EXPECT_EQ(pow(s, 2 * n).coefficient_of(m), q.from_int(2 * n));
  }
}

TEST(WeightedDegree, Examples) {
  auto r = PolyRing::create(Field::prime(2), {"A", "B", "C", "T"}, {2, 2, 1, 1});
  auto d = weighted_degree(parse_polynomial("A", r));
  EXPECT_EQ(d.degree, 2U);
  EXPECT_TRUE(d.homogeneous);
  d = weighted_degree(parse_polynomial("A^2*B", r));
  EXPECT_EQ(d.degree, 6U);
  EXPECT_TRUE(d.homogeneous);
  d = weighted_degree(parse_polynomial("T + A", r));
  EXPECT_EQ(d.degree, 2U);
  EXPECT_FALSE(d.homogeneous);
  EXPECT_THROW(weighted_degree(Polynomial(r)), ZeroPolynomialError);
  EXPECT_THROW(lowest_degree(Polynomial(r)), ZeroPolynomialError);
}

TEST(HomogeneousComponent, Examples) {
  auto r = PolyRing::create(Field::prime(2), {"A", "B", "T"});
  auto f = parse_polynomial("T + A + A^2*B + T^3 + A*B*T", r);
  EXPECT_EQ(homogeneous_component(f, 1), parse_polynomial("T + A", r));
  EXPECT_EQ(lowest_component(f), parse_polynomial("T + A", r));
  auto g = parse_polynomial("A^2*B + T^3", r);
  EXPECT_EQ(homogeneous_component(g, 3), g);
  auto q = PolyRing::create(Field::rationals(), {"X"});
  EXPECT_EQ(lowest_component(parse_polynomial("X^3 + X", q)), parse_polynomial("X", q));
  EXPECT_TRUE(homogeneous_component(Polynomial(q), 2).is_zero());
}

TEST(Substitute, Examples) {
  auto r = PolyRing::create(Field::prime(2), {"A", "B", "T"});
  auto a = Polynomial::variable(r, 0), t = Polynomial::variable(r, 2);
  std::vector<Polynomial> b_to_a{a, a, t};
  EXPECT_TRUE(substitute(parse_polynomial("A^3 - B^3", r), b_to_a, r).is_zero());

  auto r4 = PolyRing::create(f4(), {"A", "B", "T"});
  auto one_w_w2 = parse_polynomial("(1 + w + w^2)*A^3", r4);
  EXPECT_TRUE(one_w_w2.is_zero());

  auto f = parse_polynomial("A^2*T + B + 1", r);
  std::vector<Polynomial> ident{a, Polynomial::variable(r, 1), t};
  EXPECT_EQ(substitute(f, ident, r), f);

  std::vector<Polynomial> into4{Polynomial::variable(r4, 0), Polynomial::variable(r4, 1), Polynomial::variable(r4, 2)};
  EXPECT_EQ(substitute(f, into4, r4).to_string(), "A^2*T + B + 1");
  EXPECT_EQ(embed_by_name(f, r4), substitute(f, into4, r4));
  std::vector<Polynomial> back{a, a, t};
  EXPECT_THROW(substitute(parse_polynomial("w*A", r4), back, r), NoEmbeddingError);
}

TEST(Substitute, OmegaCaseInF4) {
  // B -> w*A sends A^3 - B^3 to (1 - w^3) A^3 = 0 since w^3 = 1.
  auto r4 = PolyRing::create(f4(), {"A", "B", "T"});
  std::vector<Polynomial> img{Polynomial::variable(r4, 0), parse_polynomial("w*A", r4), Polynomial::variable(r4, 2)};
  EXPECT_TRUE(substitute(parse_polynomial("A^3 - B^3", r4), img, r4).is_zero());
}

TEST(Printing, Formats) {
  auto q = qq_xy();
  EXPECT_EQ(parse_polynomial("X - 1/2*Y - 3", q).to_string(), "X - 1/2*Y - 3");
  EXPECT_EQ(parse_polynomial("-X^2", q).to_string(), "-X^2");
  EXPECT_EQ(Polynomial(q).to_string(), "0");
  auto r4 = PolyRing::create(f4(), {"X"});
  EXPECT_EQ(parse_polynomial("(w + 1)*X + w", r4).to_string(), "(w + 1)*X + w");
  auto w = PolyRing::create(Field::prime(2), {"A", "B"}, {2, 1});
  EXPECT_EQ(w->description(), "GF(2)[A:2, B]");
}

TEST(Parser, AcceptsJuxtapositionAndDivision) {
  auto q = qq_xy();
  EXPECT_EQ(parse_polynomial("2XY", q), parse_polynomial("2*X*Y", q));
  EXPECT_EQ(parse_polynomial("(X+Y)(X-Y)", q), parse_polynomial("X^2 - Y^2", q));
  EXPECT_EQ(parse_polynomial("X/2 + Y/(1+1)", q), parse_polynomial("1/2*X + 1/2*Y", q));
  EXPECT_EQ(parse_polynomial("X*-Y", q), parse_polynomial("-X*Y", q));
  EXPECT_EQ(parse_polynomial("# comment\nX", q), parse_polynomial("X", q));
}

TEST(Parser, ReportsErrorsWithPosition) {
  auto q = qq_xy();
  try {
    parse_polynomial("X + Z", q);
    FAIL();
  } catch (const UndeclaredNameError& e) {
    EXPECT_EQ(e.line(), 1U);
    EXPECT_EQ(e.column(), 5U);
    EXPECT_EQ(e.token(), "Z");
  }
  EXPECT_THROW(parse_polynomial("X +", q), SyntaxError);
  EXPECT_THROW(parse_polynomial("X / Y", q), SyntaxError);
  EXPECT_THROW(parse_polynomial("X / 0", q), SyntaxError);
  EXPECT_THROW(parse_polynomial("(X", q), SyntaxError);
  EXPECT_THROW(parse_polynomial("X $ Y", q), SyntaxError);
  try {
    parse_polynomial("X +\n  ) ", q);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 3U);
  }
}

TEST(Properties, PrintParseRoundTrip) {
  std::mt19937_64 rng(2024);
  for (const auto& r : property_rings()) {
    for (int i = 0; i < 500; ++i) {
      Polynomial f = random_polynomial(r, rng, 5, 4);
      ASSERT_EQ(parse_polynomial(f.to_string(), r), f) << f.to_string();
    }
  }
}

TEST(Properties, RingAxioms) {
  std::mt19937_64 rng(7);
  for (const auto& r : property_rings()) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_polynomial(r, rng), g = random_polynomial(r, rng), h = random_polynomial(r, rng);
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ(f * g, g * f);
      EXPECT_TRUE((f - f).is_zero());
      EXPECT_EQ(as_map(f * g), naive_product(f, g));
    }
  }
}

TEST(Properties, TermsStayCanonical) {
  std::mt19937_64 rng(8);
  for (const auto& r : property_rings()) {
    for (int i = 0; i < 100; ++i) {
      auto p = random_polynomial(r, rng) * random_polynomial(r, rng) - random_polynomial(r, rng);
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_FALSE(r->field().is_zero(p.terms()[j].coeff));
        if (j) EXPECT_GT(r->compare(p.terms()[j - 1].mono, p.terms()[j].mono), 0);
      }
    }
  }
}

TEST(Properties, FrobeniusInPositiveCharacteristic) {
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {2U, 3U}) {
    auto r = PolyRing::create(Field::prime(p), {"x", "y", "z"});
    for (int i = 0; i < 100; ++i) {
      auto f = random_polynomial(r, rng), g = random_polynomial(r, rng);
      EXPECT_EQ(pow(f + g, p), pow(f, p) + pow(g, p));
    }
  }
}

TEST(Properties, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(10);
  for (const auto& r : property_rings()) {
    for (int i = 0; i < 30; ++i) {
      auto f = random_polynomial(r, rng, 3, 2);
      Polynomial acc = Polynomial::from_int(r, 1);
      for (unsigned n = 0; n <= 6; ++n) {
        EXPECT_EQ(pow(f, n), acc);
        acc = acc * f;
      }
    }
  }
}

TEST(Properties, HomogeneousComponentsSumToPolynomial) {
  std::mt19937_64 rng(12);
  for (const auto& r : property_rings()) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_polynomial(r, rng, 6, 3);
      Polynomial sum(r);
      if (!f.is_zero()) {
        for (std::uint32_t d = 0; d <= weighted_degree(f).degree; ++d) sum += homogeneous_component(f, d);
      }
      EXPECT_EQ(sum, f);
    }
  }
}

TEST(Properties, SubstitutionComposes) {
  std::mt19937_64 rng(13);
  for (const auto& r : property_rings()) {
    const std::size_t n = r->num_variables();
    for (int i = 0; i < 50; ++i) {
      auto f = random_polynomial(r, rng, 4, 2);
      std::vector<Polynomial> sigma, tau;
      for (std::size_t v = 0; v < n; ++v) {
        sigma.push_back(Polynomial::term(r, rctest::random_scalar(r->field(), rng), rctest::random_monomial(r, rng, 2)));
        tau.push_back(Polynomial::term(r, rctest::random_scalar(r->field(), rng), rctest::random_monomial(r, rng, 2)));
      }
      // (tau o sigma)(x_v) = tau(sigma(x_v)).
      std::vector<Polynomial> composed;
      for (const auto& s : sigma) composed.push_back(substitute(s, tau, r));
      EXPECT_EQ(substitute(substitute(f, sigma, r), tau, r), substitute(f, composed, r));
    }
  }
}
