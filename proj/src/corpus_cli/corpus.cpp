#include "rootclosure/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "rootclosure/monomial_oracle.hpp"
#include "rootclosure/script.hpp"

namespace rootclosure {

SearchBudget BudgetOverrides::apply(SearchBudget b) const {
  if (max_exponent) b.max_exponent = *max_exponent;
  if (max_degree) b.max_degree = *max_degree;
  if (max_tower) b.max_tower = *max_tower;
  return b;
}

namespace {

SearchBudget make_budget(unsigned n, unsigned d, unsigned l) {
  SearchBudget b;
  b.max_exponent = n;
  b.max_degree = d;
  b.max_tower = l;
  return b;
}

class CaseBuilder {
 public:
  CaseBuilder(std::string id, std::string setup, SearchBudget budget) {
    report_.id = std::move(id);
    report_.setup = std::move(setup);
    report_.budget = budget;
    script_ = parse_script(report_.setup);
  }

  const SessionScript& script() const { return script_; }
  const SearchBudget& budget() const { return report_.budget; }
  Polynomial el(const std::string& text, const std::string& ring) const { return script_.parse_element(text, ring); }
  const Ideal& ideal(const std::string& name) const { return script_.ideal(name).ideal; }

  void check(std::string id, std::string kind, std::string anchor, std::string provenance, bool passed,
             std::string detail = {}) {
    report_.assertions.push_back(
        {std::move(id), std::move(kind), std::move(anchor), std::move(provenance), passed, std::move(detail)});
    report_.passed = report_.passed && passed;
  }

  // Certificate with the expected exponent for x over I.
  void root(std::string id, std::string anchor, const Polynomial& x, const Ideal& i, unsigned expected,
            const SearchBudget& b) {
    RootSearchResult r = find_root_certificate(x, i, b);
    const bool found = r.status == RootSearchResult::Status::Found;
    std::string detail = to_string(r.status);
    if (found) {
      detail += ", n = " + std::to_string(r.certificate->exponent);
      report_.certificates.push_back(*r.certificate);
    }
    check(std::move(id), "certificate-exponent", std::move(anchor), "exact",
          found && r.certificate->exponent == expected && certificate_problem(*r.certificate).empty(), detail);
  }

  void add_certificate(const RootCertificate& c) { report_.certificates.push_back(c); }

  CorpusReport finish() { return std::move(report_); }

 private:
  CorpusReport report_;
  SessionScript script_;
};

std::string names(const std::vector<Polynomial>& polys) { return to_string(polys); }

CorpusReport remark_1_3(const BudgetOverrides& o) {
  CaseBuilder c("remark-1.3",
                "ring S = QQ[X, Y];\n"
                "ideal I = (X^2, Y^2) in S;\n"
                "ring S2 = GF(2)[X, Y];\n"
                "ideal I2 = (X^2, Y^2) in S2;\n",
                o.apply(make_budget(6, 2, 3)));
  const Ideal& i = c.ideal("I");
  const SearchBudget& b = c.budget();
  c.root("x2-root", "X^2 in I", c.el("X^2", "S"), i, 1, b);
  c.root("y2-root", "Y^2 in I", c.el("Y^2", "S"), i, 1, b);
  c.root("2xy-root", "(2XY)^2 = 4 X^2 Y^2 in I^2", c.el("2*X*Y", "S"), i, 2, b);

  const Polynomial s = c.el("(X + Y)^2", "S");
  RootSearchResult r = find_root_certificate(s, i, b);
  c.check("sum-square-no-root", "non-membership-within-budget",
          "(X + Y)^(2n) not in I^n over QQ for n <= " + std::to_string(b.max_exponent), "budget",
          r.status == RootSearchResult::Status::NotFoundWithinBudget, to_string(r.status));
  const ClosureApproximation a = sharp_approx(i, b);
  c.check("sum-square-in-sharp", "membership", "(X + Y)^2 = X^2 + 2XY + Y^2 is a sum of roots of I", "exact",
          a.result.contains(s), "sharp generators " + a.result.to_string());

  const Ideal& i2 = c.ideal("I2");
  const Polynomial s2 = c.el("(X + Y)^2", "S2");
  c.check("char2-sum-square-in-I", "membership", "(X + Y)^2 = X^2 + Y^2 in I over GF(2)", "normal-form",
          i2.contains(s2), s2.to_string());
  c.root("char2-sum-square-root", "(X + Y)^2 in I^1 over GF(2)", s2, i2, 1, b);
  return c.finish();
}

CorpusReport example_4_1(const BudgetOverrides& o) {
  CaseBuilder c("example-4.1",
                "ring S = QQ[x, y];\n"
                "ideal I = (x^2, y^2) in S;\n",
                o.apply(make_budget(8, 2, 3)));
  const Ideal& i = c.ideal("I");
  const QuotientPtr& s = c.script().ring("S");
  const Ideal expected(s, {c.el("x^2", "S"), c.el("x*y", "S"), c.el("y^2", "S")});
  const Ideal closure = monomial_integral_closure(i);
  c.check("closure-equality", "ideal-equality", "closure of (x^2, y^2) is (x^2, xy, y^2)", "monomial-oracle",
          ideal_equal(closure, expected), closure.to_string());
  const Polynomial xy = c.el("x*y", "S");
  c.check("xy-not-in-I", "non-membership", "xy not in (x^2, y^2)", "normal-form", !i.contains(xy),
          "normal form " + i.normal_form(xy).to_string());
  c.root("xy-root", "(xy)^2 = x^2 y^2 in I^2", xy, i, 2, c.budget());
  const ClosureApproximation a = sharp_approx(i, c.budget());
  c.check("sharp-equals-closure", "ideal-equality", "sharp of (x^2, y^2) is (x^2, xy, y^2)", "monomial-oracle",
          a.exact && ideal_equal(a.result, expected), a.result.to_string());
  return c.finish();
}

CorpusReport example_4_2(const BudgetOverrides& o) {
  CaseBuilder c("example-4.2",
                "ring R = GF(2)[A, B, T]/(A^3 - B^3, T^3 - A^2*B - A*B^2);\n"
                "ideal I = (A) in R;\n",
                o.apply(make_budget(9, 1, 2)));
  const Ideal& i = c.ideal("I");
  const QuotientPtr& r = c.script().ring("R");
  const SearchBudget& b = c.budget();
  const Polynomial a = c.el("A", "R"), bb = c.el("B", "R"), t = c.el("T", "R");
  c.root("b-root", "b^3 = a^3 in I^3", bb, i, 3, b);

  const ClosureApproximation tower = sharp_tower(i, 2, b);
  bool t_level2 = false;
  std::string detail = "level 2 not reached";
  if (tower.levels.size() >= 2) {
    const SharpLevel& l2 = tower.levels[1];
    detail = "level-1 ideal " + l2.target.to_string();
    for (const auto& cert : l2.certificates) {
      if (cert.element == t && cert.exponent == 3 && certificate_problem(cert).empty()) {
        t_level2 = true;
        c.add_certificate(cert);
      }
    }
  }
  c.check("t-tower-level-2", "certificate-exponent", "t^3 = a^2 b + a b^2 in <a, b>^3", "exact", t_level2, detail);

  const ClosureApproximation sharp = sharp_approx(i, b);
  const CandidateSet cands = enumerate_candidates(i, b);
  std::vector<Polynomial> certified = sharp.levels.front().certified;
  std::sort(certified.begin(), certified.end(), [](const Polynomial& x, const Polynomial& y) {
    return x.to_string() < y.to_string();
  });
  // Monic homogeneous elements of degree <= 1 over GF(2) in three variables: 1 + (2^3 - 1).
  const std::size_t expected_count = b.max_degree == 1 ? 8 : cands.elements.size();
  const bool sweep = cands.strategy == "homogeneous" && cands.elements.size() == expected_count &&
                     certified == std::vector<Polynomial>{a, bb};
  c.check("degree-1-sweep", "check",
          "among degree <= 1 elements only a and b have x^n in I^n for n <= " + std::to_string(b.max_exponent),
          "budget", sweep,
          std::to_string(cands.elements.size()) + " candidates (" + cands.strategy + "), certified " +
              names(certified));
  c.check("t-not-in-sharp", "non-membership-within-budget", "t not in sharp of <a>", "budget",
          !sharp.result.contains(t), "sharp generators " + sharp.result.to_string());
  c.check("t-not-in-span", "non-membership", "t not in <a, b>", "normal-form", !Ideal(r, {a, bb}).contains(t));

  const RingPtr& base = r->base();
  const QuotientPtr poly = PresentedRing::create(base);
  const Ideal defining(poly, r->relations());
  const Polynomial rad = parse_polynomial("A^2*T + A*B*T + B^2*T", base);
  const RadicalMembership rm = radical_member(rad, defining);
  c.check("radical-generator", "membership", "A^2 T + A B T + B^2 T in rad(D)", "exact", rm.in_radical,
          rm.exponent ? "power " + std::to_string(*rm.exponent) + " lies in D" : "by auxiliary variable");
  std::vector<Polynomial> stated = r->relations();
  stated.push_back(rad);
  const Ideal stated_ideal(poly, stated);
  c.check("radical-contains-defining", "check", "D lies in the stated radical; rad(D) = stated is not checked",
          "exact", stated_ideal.contains(defining));
  return c.finish();
}

CorpusReport example_4_3(const BudgetOverrides& o) {
  CaseBuilder c("example-4.3",
                "ring R = GF(2)[A:2, B:2, C, T]/(A^3 - C^6, B^3 - C^6, T^2 - A - B);\n"
                "ideal I = (C) in R;\n",
                o.apply(make_budget(9, 2, 3)));
  const Ideal& i = c.ideal("I");
  const QuotientPtr& r = c.script().ring("R");
  const SearchBudget& b = c.budget();
  const Polynomial a = c.el("A", "R"), bb = c.el("B", "R"), cc = c.el("C", "R"), t = c.el("T", "R");
  const Ideal abc(r, {a, bb, cc});
  c.root("a-root", "a^3 = c^6 in I^3", a, i, 3, b);
  c.root("b-root", "b^3 = c^6 in I^3", bb, i, 3, b);

  const ClosureApproximation sharp = sharp_approx(i, b);
  c.check("sharp-equals-abc", "ideal-equality", "sharp of <c> is <a, b, c> over weighted degree <= 2 candidates",
          "budget", ideal_equal(sharp.result, abc), sharp.result.to_string());
  const ClosureApproximation boxed = boxed_sharp_approx(i, b);
  c.check("boxed-stabilizes", "ideal-equality", "the sharp tower of <c> stops at <a, b, c>", "budget",
          boxed.stabilized_at.has_value() && ideal_equal(boxed.result, abc),
          boxed.stabilized_at ? "stabilized at level " + std::to_string(*boxed.stabilized_at) : "no stabilization");
  c.check("t-not-in-boxed", "non-membership-within-budget", "t not in boxed sharp of <c>", "budget",
          !boxed.result.contains(t), boxed.result.to_string());

  const Ideal i2 = ideal_power(i, 2);
  c.root("a-root-in-square", "a^3 = c^6 in (I^2)^3", a, i2, 3, b);
  c.root("b-root-in-square", "b^3 = c^6 in (I^2)^3", bb, i2, 3, b);
  const auto nc = find_natural_certificate(t, i, b);
  const bool natural_ok = nc && nc->exponent == 2 && natural_certificate_problem(*nc, i).empty();
  if (nc) c.add_certificate(nc->membership);
  c.check("t-natural", "certificate-exponent", "t^2 = a + b lies in boxed sharp of I^2", "exact", natural_ok,
          nc ? "n = " + std::to_string(nc->exponent) : "no natural certificate");
  const ClosureApproximation natural = natural_approx(i, b);
  c.check("t-in-natural", "membership", "t in natural of <c>", "exact", natural.result.contains(t),
          natural.result.to_string());

  const RingPtr& base = r->base();
  const QuotientPtr poly = PresentedRing::create(base);
  const Ideal defining(poly, r->relations());
  std::vector<Polynomial> stated;
  bool all_in = true;
  std::string failed;
  for (const char* g : {"T^2 - A - B", "T^4 + T*C^3", "B^2*T + B*T^3 + T^2*C^3", "B^3 + C^6"}) {
    stated.push_back(parse_polynomial(g, base));
    if (!radical_member(stated.back(), defining).in_radical) {
      all_in = false;
      failed += std::string(failed.empty() ? "" : ", ") + g;
    }
  }
  c.check("radical-generators", "membership", "each stated generator lies in rad(D)", "exact", all_in,
          failed.empty() ? "" : "outside: " + failed);
  c.check("radical-contains-defining", "check", "D lies in the stated radical; rad(D) = stated is not checked",
          "exact", Ideal(poly, stated).contains(defining));
  return c.finish();
}

CorpusReport example_4_4(const BudgetOverrides& o) {
  CaseBuilder c("example-4.4",
                "ring R = GF(2)[A, T]/(A^2 - A*T);\n"
                "ideal I = (T) in R;\n"
                "ideal M = (A, T) in R;\n",
                o.apply(make_budget(9, 2, 3)));
  const Ideal& i = c.ideal("I");
  const QuotientPtr& r = c.script().ring("R");
  const SearchBudget& b = c.budget();
  const Polynomial a = c.el("A", "R"), t = c.el("T", "R");
  c.check("integral-dependence", "membership", "a^2 + t a = 0 with t in I", "exact",
          verify_integral_dependence({a, {t, r->zero()}}, i));
  c.check("a-not-in-I", "non-membership", "a not in <t>", "normal-form", !i.contains(a));
  c.check("t-nonzerodivisor", "check", "t is a nonzerodivisor", "exact", is_nonzerodivisor(t, r));
  const RingPtr& base = r->base();
  const QuotientPtr poly = PresentedRing::create(base);
  std::vector<Polynomial> p1 = r->relations(), p2 = r->relations();
  p1.push_back(parse_polynomial("T - A", base));
  p2.push_back(parse_polynomial("A", base));
  const Polynomial tt = parse_polynomial("T", base);
  c.check("t-avoids-minimal-primes", "non-membership", "T not in <T - A> + D and T not in <A> + D", "normal-form",
          !Ideal(poly, p1).contains(tt) && !Ideal(poly, p2).contains(tt));

  const ClosureApproximation natural = natural_approx(i, b);
  c.check("a-not-natural", "non-membership-within-budget", "a not in natural of <t>", "budget",
          !natural.result.contains(a), natural.result.to_string());

  const Ideal& m = c.ideal("M");
  bool pieces_ok = true;
  std::string detail;
  for (unsigned k = 1; k <= 5; ++k) {
    const Ideal mk = ideal_power(m, k);
    const Ideal target(r, {pow(t, k - 1)});
    const GradedPiece piece = graded_piece_members(mk, k);
    bool ok = target.contains(mk);
    for (const auto& x : piece.members) ok = ok && target.contains(x);
    pieces_ok = pieces_ok && ok;
    detail += std::string(detail.empty() ? "" : ", ") + "m=" + std::to_string(k) + ":" +
              std::to_string(piece.members.size()) + (ok ? " ok" : " fail");
  }
  c.check("graded-pieces", "check", "<a, t>^m in <t^(m-1)> for m <= 5, degree-m parts included", "exact", pieces_ok,
          detail);

  const Theorem31Report rees = theorem31_check(i, 1, b);
  c.check("rees-piece-excludes-a", "non-membership-within-budget", "a t not in degree 1 of the Rees root closure",
          "budget", rees.pass && !rees.pieces[1].piece.contains(a), rees.pieces[1].piece.to_string());
  return c.finish();
}

Ideal random_monomial_ideal(std::mt19937_64& rng) {
  static const char* kNames[] = {"x", "y", "z"};
  const std::size_t nv = 1 + rng() % 3;
  std::vector<std::string> vars(kNames, kNames + nv);
  const QuotientPtr ring = PresentedRing::create(PolyRing::create(Field::rationals(), vars));
  const std::size_t ng = 1 + rng() % 4;
  std::vector<Polynomial> gens;
  for (std::size_t g = 0; g < ng; ++g) {
    const unsigned degree = 1 + rng() % 4;
    std::vector<std::uint32_t> e(nv, 0);
    for (unsigned k = 0; k < degree; ++k) ++e[rng() % nv];
    gens.push_back(monomial_from_exponents(ring->base(), e));
  }
  return Ideal(ring, gens);
}

CorpusReport monomial_coincidence(const BudgetOverrides& o, std::uint64_t seed) {
  CaseBuilder c("monomial-coincidence", "", o.apply(make_budget(8, 4, 3)));
  std::mt19937_64 rng(seed);
  constexpr int kTrials = 100;
  int agree = 0;
  std::string failed;
  for (int k = 0; k < kTrials; ++k) {
    const Ideal i = random_monomial_ideal(rng);
    const Ideal closure = monomial_integral_closure(i);
    const bool ok = ideal_equal(sharp_approx(i, c.budget()).result, closure) &&
                    ideal_equal(boxed_sharp_approx(i, c.budget()).result, closure) &&
                    ideal_equal(natural_approx(i, c.budget()).result, closure) &&
                    ideal_equal(monomial_closure_bruteforce(i, 12), closure);
    if (ok) {
      ++agree;
    } else if (failed.size() < 400) {
      failed += " " + i.to_string();
    }
  }
  c.check("all-coincide", "ideal-equality",
          "for monomial I: sharp = boxed sharp = natural = Newton closure = brute force", "monomial-oracle",
          agree == kTrials,
          std::to_string(agree) + "/" + std::to_string(kTrials) + " ideals, seed " + std::to_string(seed) + failed);
  return c.finish();
}

}  // namespace

std::vector<std::string> corpus_case_ids() {
  return {"example-4.1", "example-4.2", "example-4.3", "example-4.4", "monomial-coincidence", "remark-1.3"};
}

CorpusReport run_case(const std::string& id, const BudgetOverrides& o, std::uint64_t seed) {
  if (id == "remark-1.3") return remark_1_3(o);
  if (id == "example-4.1") return example_4_1(o);
  if (id == "example-4.2") return example_4_2(o);
  if (id == "example-4.3") return example_4_3(o);
  if (id == "example-4.4") return example_4_4(o);
  if (id == "monomial-coincidence") return monomial_coincidence(o, seed);
  throw std::invalid_argument("unknown corpus case: " + id);
}

std::vector<CorpusReport> run_corpus(const std::string& id_or_all, const BudgetOverrides& o, std::uint64_t seed) {
  if (id_or_all != "all") return {run_case(id_or_all, o, seed)};
  std::vector<CorpusReport> out;
  for (const auto& id : corpus_case_ids()) out.push_back(run_case(id, o, seed));
  return out;
}

Json corpus_report_json(const CorpusReport& r) {
  Json assertions = Json::array();
  for (const auto& a : r.assertions) {
    assertions.push_back(Json{{"id", a.id},
                              {"kind", a.kind},
                              {"anchor", a.anchor},
                              {"provenance", a.provenance},
                              {"passed", a.passed},
                              {"detail", a.detail}});
  }
  return Json{{"id", r.id},
              {"setup", r.setup},
              {"budget", budget_json(r.budget)},
              {"assertions", std::move(assertions)},
              {"passed", r.passed}};
}

}  // namespace rootclosure
