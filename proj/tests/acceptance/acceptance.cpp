#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "calculus_generators.hpp"
#include "monomial_generators.hpp"
#include "rootclosure/cli.hpp"
#include "rootclosure/corpus.hpp"
#include "rootclosure/monomial_oracle.hpp"
#include "rootclosure/json_io.hpp"
#include "rootclosure/script.hpp"

using namespace rootclosure;

namespace {

using Status = RootSearchResult::Status;

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<std::string()> run;  // empty string on success
};

SearchBudget budget(unsigned n, unsigned d, unsigned l) {
  SearchBudget b;
  b.max_exponent = n;
  b.max_degree = d;
  b.max_tower = l;
  return b;
}

// x^n == sum multiplier * prod generators + sum r_j D_j, expanded term by term.
bool expands(const RootCertificate& c) {
  const auto& gens = c.ideal.generators();
  const auto& rel = c.ideal.ring()->relations();
  Polynomial rhs(c.ideal.base());
  for (const auto& [factors, multiplier] : c.witness.products) {
    if (factors.size() != c.exponent) return false;
    Polynomial term = multiplier;
    for (auto k : factors) {
      if (k >= gens.size()) return false;
      term *= gens[k];
    }
    rhs += term;
  }
  if (c.witness.relations.size() > rel.size()) return false;
  for (std::size_t j = 0; j < c.witness.relations.size(); ++j) rhs += c.witness.relations[j] * rel[j];
  Polynomial lhs = Polynomial::from_int(c.ideal.base(), 1);
  for (unsigned k = 0; k < c.exponent; ++k) lhs *= c.element;
  return lhs == rhs;
}

std::string failed_assertions(const CorpusReport& r) {
  std::string out;
  for (const auto& a : r.assertions) {
    if (!a.passed) out += (out.empty() ? "" : "; ") + a.id + " (" + a.detail + ")";
  }
  return out;
}

std::string root_exponent(const Polynomial& x, const Ideal& i, const SearchBudget& b, unsigned want) {
  auto r = find_root_certificate(x, i, b);
  if (r.status != Status::Found) return x.to_string() + ": " + to_string(r.status);
  if (r.certificate->exponent != want) return x.to_string() + ": n = " + std::to_string(r.certificate->exponent);
  if (!expands(*r.certificate)) return x.to_string() + ": certificate does not expand";
  return {};
}

std::string criterion1() {
  auto s = parse_script("ring S = QQ[x, y]; ideal I = (x^2, y^2) in S;");
  const Ideal& i = s.ideal("I").ideal;
  const QuotientPtr& r = s.ring("S");
  if (!ideal_equal(monomial_integral_closure(i), Ideal(r, {r->element("x^2"), r->element("x*y"), r->element("y^2")}))) {
    return "closure differs from (x^2, xy, y^2)";
  }
  if (i.contains(r->element("x*y"))) return "xy in I";
  return root_exponent(r->element("x*y"), i, {}, 2);
}

std::string criterion2() {
  auto s = parse_script(
      "ring S = QQ[X, Y]; ideal I = (X^2, Y^2) in S;"
      "ring F = GF(2)[X, Y]; ideal J = (X^2, Y^2) in F;");
  const Ideal& i = s.ideal("I").ideal;
  const QuotientPtr& r = s.ring("S");
  const SearchBudget b = budget(6, 2, 3);
  for (const auto& [x, n] : std::vector<std::pair<std::string, unsigned>>{{"X^2", 1}, {"Y^2", 1}, {"2*X*Y", 2}}) {
    if (auto e = root_exponent(r->element(x), i, b, n); !e.empty()) return e;
  }
  // Termwise: (X + Y)^(2n) has the monomial X^(2n-1) Y with coefficient 2n, outside the monomial ideal I^n.
  const Polynomial s2 = r->element("(X + Y)^2");
  for (unsigned n = 1; n <= 6; ++n) {
    if (i.power_contains(pow(s2, n), n)) return "(X + Y)^2 has a root at n = " + std::to_string(n);
  }
  if (find_root_certificate(s2, i, b).status != Status::NotFoundWithinBudget) return "search reports a root";
  const QuotientPtr& f = s.ring("F");
  const Ideal& j = s.ideal("J").ideal;
  if (!j.contains(f->element("(X + Y)^2"))) return "(X + Y)^2 not in I over GF(2)";
  return root_exponent(f->element("(X + Y)^2"), j, b, 1);
}

std::string criterion3() {
  const CorpusReport r = run_case("example-4.2");
  if (!r.passed) return failed_assertions(r);
  // Independent sweep: t + l1 a + l2 b never has a power in <a>^n, n <= 9.
  auto s = parse_script("ring R = GF(2)[A, B, T]/(A^3 - B^3, T^3 - A^2*B - A*B^2); ideal I = (A) in R;");
  const Ideal& i = s.ideal("I").ideal;
  const QuotientPtr& q = s.ring("R");
  for (const char* x : {"T", "T + A", "T + B", "T + A + B"}) {
    const Polynomial y = q->element(x);
    for (unsigned n = 1; n <= 9; ++n) {
      if (i.power_contains(q->reduce(pow(y, n)), n)) return std::string(x) + " has a root at n = " + std::to_string(n);
    }
  }
  return {};
}

std::string criterion4() {
  const CorpusReport r = run_case("example-4.3");
  return r.passed ? std::string() : failed_assertions(r);
}

std::string criterion5() {
  const CorpusReport r = run_case("example-4.4");
  return r.passed ? std::string() : failed_assertions(r);
}

std::string criterion6() {
  std::mt19937_64 rng(kDefaultSeed);
  const SearchBudget b = budget(8, 4, 3);
  for (int k = 0; k < 100; ++k) {
    const Ideal i = rctest::random_monomial_ideal(rng);
    const Ideal oracle = monomial_closure_bruteforce(i, 12);
    const bool ok = ideal_equal(sharp_approx(i, b).result, oracle) &&
                    ideal_equal(boxed_sharp_approx(i, b).result, oracle) &&
                    ideal_equal(natural_approx(i, b).result, oracle) &&
                    ideal_equal(monomial_integral_closure(i), oracle);
    if (!ok) return "mismatch for " + i.to_string();
  }
  return {};
}

std::string criterion7() {
  std::mt19937_64 rng(707);
  const auto rings = rctest::small_rings();
  auto f4base = PolyRing::create(Field::extension(2, {1, 1, 1}), {"x", "y", "z"});
  auto f4 = PresentedRing::create(f4base);
  int done[5] = {0, 0, 0, 0, 0};
  const char* names[5] = {"scale", "raise", "product", "colon", "extend"};
  for (int trial = 0; done[0] < 200 || done[1] < 200 || done[2] < 200 || done[3] < 200 || done[4] < 200; ++trial) {
    if (trial > 50000) return "ran out of instances";
    const auto& r = rings[trial % rings.size()];
    const Ideal i = rctest::random_homogeneous_ideal(r, rng);
    const Polynomial x = rctest::random_element(r, rng);
    auto res = find_root_certificate(x, i, budget(3, 1, 1));
    if (res.status != Status::Found) continue;
    const RootCertificate& c = *res.certificate;
    auto check = [&](int kind, const RootCertificate& d) -> std::string {
      ++done[kind];
      return expands(d) ? std::string() : std::string(names[kind]) + " of " + x.to_string();
    };
    if (auto e = check(0, cert_scale(c, rctest::random_element(r, rng))); !e.empty()) return e;
    if (auto e = check(1, cert_raise(c, 1 + static_cast<unsigned>(rng() % 3))); !e.empty()) return e;
    const Ideal j = rctest::random_homogeneous_ideal(r, rng);
    auto other = find_root_certificate(rctest::random_element(r, rng), j, budget(2, 1, 1));
    if (other.status == Status::Found) {
      if (auto e = check(2, cert_product(c, *other.certificate)); !e.empty()) return e;
    }
    const Ideal big = ideal_product(i, j);
    auto over_colon = find_root_certificate(x, ideal_colon(big, j), budget(3, 1, 1));
    if (over_colon.status == Status::Found) {
      const Polynomial jg = j.generators()[rng() % j.size()];
      if (auto e = check(3, cert_colon_transfer(*over_colon.certificate, big, j, jg)); !e.empty()) return e;
    }
    if (r->is_polynomial_ring() && r->field().description() == "GF(2)") {
      std::vector<Polynomial> images;
      for (std::size_t v = 0; v < r->base()->num_variables(); ++v) {
        images.push_back(rctest::random_polynomial(f4base, rng, 2, 1));
      }
      if (auto e = check(4, cert_extend_ring(c, f4, images)); !e.empty()) return e;
    }
  }
  return {};
}

std::string criterion8() {
  auto s = parse_script(
      "ring S = QQ[x, y]; ideal I = (x^2, y^2) in S;"
      "ring R = GF(2)[A, T]/(A^2 - A*T); ideal J = (T) in R;");
  const Ideal& i = s.ideal("I").ideal;
  const Theorem31Report rep = theorem31_check(i, 3, {});
  if (!rep.pass) return "report fails for (x^2, y^2)";
  for (unsigned n = 1; n <= 3; ++n) {
    if (rep.pieces[n].provenance != ReesProvenance::MonomialExact) return "inexact piece " + std::to_string(n);
    if (!ideal_equal(rep.pieces[n].piece, monomial_closure_bruteforce(ideal_power(i, n), 12))) {
      return "piece " + std::to_string(n) + " differs from brute force";
    }
  }
  const Ideal& j = s.ideal("J").ideal;
  const QuotientPtr& r = s.ring("R");
  const Theorem31Report rj = theorem31_check(j, 1, budget(9, 2, 3));
  const Polynomial a = r->element("A");
  if (rj.pieces[1].piece.contains(a)) return "a in piece 1";
  if (!verify_integral_dependence({a, {r->element("T"), r->zero()}}, j)) return "integral dependence fails";
  return {};
}

std::string criterion9() {
  auto run = [](const std::vector<std::string>& args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return std::make_pair(code, out.str());
  };
  const auto first = run({"repro", "all", "--format", "json"});
  const auto second = run({"repro", "all", "--format", "json"});
  if (first.first != 0) return "repro all exit " + std::to_string(first.first);
  if (first.second != second.second) return "repro all output differs between runs";
  const Json doc = Json::parse(first.second);
  const Json& certs = doc["certificates"];
  if (certs.empty()) return "no certificates emitted";
  if (run({"cert", "verify"}, first.second).first != 0) return "emitted certificates rejected";
  std::mt19937_64 rng(909);
  for (int k = 0; k < 200; ++k) {
    const Json original = certs[rng() % certs.size()];
    Json flat = original.flatten();
    auto it = std::next(flat.begin(), static_cast<long>(rng() % flat.size()));
    Json& leaf = it.value();
    if (leaf.is_string()) {
      std::string v = leaf.get<std::string>();
      if (it.key() == "/digest") {
        v[0] = v[0] == '0' ? '1' : '0';
      } else {
        v = "(" + v + ") + 1";
      }
      leaf = v;
    } else if (leaf.is_number_unsigned()) {
      leaf = leaf.get<std::uint64_t>() + 1;
    } else if (leaf.is_boolean()) {
      leaf = !leaf.get<bool>();
    } else {
      leaf = "1";
    }
    if (run({"cert", "verify"}, flat.unflatten().dump()).first != 1) return "mutation " + std::to_string(k) + " accepted";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "example-4.1 reproduction", 1, criterion1},
      {2, "remark-1.3 reproduction", 5, criterion2},
      {3, "example-4.2 reproduction", 60, criterion3},
      {4, "example-4.3 reproduction", 120, criterion4},
      {5, "example-4.4 reproduction", 60, criterion5},
      {6, "monomial coincidence on 100 ideals", 120, criterion6},
      {7, "certificate calculus, 200 instances each", 60, criterion7},
      {8, "Rees graded-piece check", 60, criterion8},
      {9, "determinism and certificate mutations", 30, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.limit_seconds) problem = "over the time limit";
    const bool pass = problem.empty();
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s (limit %.0f s)", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " -- " << timing;
    if (!pass) std::cout << " -- " << problem;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
