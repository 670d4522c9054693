#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rootclosure/errors.hpp"
#include "rootclosure/monomial_oracle.hpp"
#include "rootclosure/rees.hpp"

namespace rootclosure {

std::string to_string(ReesProvenance p) {
  return p == ReesProvenance::MonomialExact ? "MonomialExact" : "NaturalApprox";
}

RingPtr rees_ring(const RingPtr& base) {
  std::string name = "t";
  while (base->variable_index(name)) name += "_";
  return base->with_variable(name, 1, false, base->order());
}

namespace {

Polynomial embed(const Polynomial& f, const RingPtr& ring) {
  std::vector<std::size_t> same(f.ring()->num_variables());
  std::iota(same.begin(), same.end(), 0);
  return map_variables(f, ring, same);
}

Polynomial t_power(const RingPtr& ring, unsigned k) {
  return pow(Polynomial::variable(ring, ring->num_variables() - 1), k);
}

bool monomial_case(const Ideal& i) {
  return i.is_monomial() && i.base()->num_variables() <= NewtonPolyhedron::kMaxDimension;
}

}  // namespace

Polynomial ReesWitness::lifted() const { return embed(element, ring) * t_power(ring, degree); }

std::string rees_witness_problem(const ReesWitness& w) {
  if (w.exponent == 0) return "exponent must be at least 1";
  const RingPtr& base = w.source->base();
  if (w.ring->num_variables() != base->num_variables() + 1) return "Rees ring must add exactly one variable";
  if (!w.element.ring()->same_as(*base)) return "element is not in the base ring";
  const unsigned total = w.degree * w.exponent;
  const Polynomial lifted_gen = t_power(w.ring, w.generator_degree);
  Polynomial rhs(w.ring);
  for (const auto& [factors, multiplier] : w.witness.products) {
    if (factors.size() * w.generator_degree != total) return "product has the wrong t-degree";
    Polynomial term = embed(multiplier, w.ring);
    for (auto index : factors) {
      if (index >= w.generators.size()) return "witness refers to a missing generator";
      term = term * embed(w.generators[index], w.ring) * lifted_gen;
    }
    rhs += term;
  }
  const auto& relations = w.source->relations();
  if (w.witness.relations.size() > relations.size()) return "too many relation coefficients";
  const Polynomial tt = t_power(w.ring, total);
  for (std::size_t j = 0; j < w.witness.relations.size(); ++j) {
    rhs += embed(w.witness.relations[j], w.ring) * embed(relations[j], w.ring) * tt;
  }
  if (pow(w.lifted(), w.exponent) != rhs) return "witness does not expand to (x t^n)^m";
  if (w.power_check && w.power_check->second > 0) {
    if (!w.power_check->first.power_contains(w.source->reduce(pow(w.element, w.exponent)), w.power_check->second)) {
      return "x^m is not in the claimed power of I";
    }
  }
  return {};
}

ReesWitness lift_certificate(const RootCertificate& c, const Ideal& i, unsigned n) {
  if (auto p = certificate_problem(c); !p.empty()) throw InvalidCertificateError("input certificate: " + p);
  require_same_ring(*c.ideal.ring(), *i.ring());
  const QuotientPtr& ring = i.ring();
  const unsigned m = c.exponent;
  ReesWitness w{ring, rees_ring(i.base()), c.element, n, m, i.generators(), 1, {}, std::nullopt};
  if (n == 0) {
    w.witness.products.emplace(std::vector<std::uint32_t>{}, pow(c.element, m));
    return w;
  }
  const auto& multisets = i.power_multisets(n);
  const auto& raw = i.power_products(n);
  std::vector<const std::vector<std::uint32_t>*> source(c.ideal.size(), nullptr);
  for (std::size_t s = 0; s < multisets.size(); ++s) {
    const Polynomial r = ring->reduce(raw[s]);
    for (std::size_t k = 0; k < c.ideal.size(); ++k) {
      if (!source[k] && c.ideal.generators()[k] == r) source[k] = &multisets[s];
    }
  }
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (!source[k]) throw InvalidCertificateError("certificate ideal is not generated by products of n generators of I");
  }
  Witness out;
  for (const auto& [factors, multiplier] : c.witness.products) {
    std::vector<std::uint32_t> f;
    for (auto k : factors) f.insert(f.end(), source[k]->begin(), source[k]->end());
    std::sort(f.begin(), f.end());
    auto [it, inserted] = out.products.try_emplace(std::move(f), multiplier);
    if (!inserted) it->second += multiplier;
  }
  Polynomial expanded(i.base());
  for (const auto& [factors, multiplier] : out.products) {
    Polynomial term = multiplier;
    for (auto index : factors) term = term * i.generators()[index];
    expanded += term;
  }
  const Polynomial residual = pow(c.element, m) - expanded;
  if (!residual.is_zero()) {
    auto rel = ring->relation_cofactors(residual);
    if (!rel) throw std::logic_error("lifted witness disagrees modulo the relations");
    out.relations = std::move(*rel);
  }
  w.witness = std::move(out);
  w.power_check = std::make_pair(i, n * m);
  if (auto p = rees_witness_problem(w); !p.empty()) throw InvalidCertificateError("lift: " + p);
  return w;
}

ReesWitness lift_coefficient_certificate(const RootCertificate& c, unsigned n) {
  if (auto p = certificate_problem(c); !p.empty()) throw InvalidCertificateError("input certificate: " + p);
  ReesWitness w{c.ideal.ring(), rees_ring(c.ideal.base()), c.element, n, c.exponent, c.ideal.generators(), n,
                c.witness, std::nullopt};
  if (auto p = rees_witness_problem(w); !p.empty()) throw InvalidCertificateError("lift: " + p);
  return w;
}

ReesPiece rees_piece(const Ideal& i, unsigned n, const SearchBudget& budget) {
  if (n == 0) return {i, 0, Ideal::unit(i.ring()), ReesProvenance::NaturalApprox, std::nullopt};
  ClosureApproximation a = natural_approx(ideal_power(i, n), budget);
  const ReesProvenance prov =
      monomial_case(i) && a.exact ? ReesProvenance::MonomialExact : ReesProvenance::NaturalApprox;
  Ideal piece = a.result;
  return {i, n, std::move(piece), prov, std::move(a)};
}

namespace {

// Lifts every certificate behind one natural certificate of a degree-n
// generator. Returns the first failure, empty on success.
std::string lift_natural(const NaturalCertificate& nc, const Ideal& i, unsigned n) {
  const unsigned nk = n * nc.exponent;
  try {
    const auto& levels = nc.boxed_power->levels;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      for (const auto& c : levels[l].certificates) {
        ReesWitness w = l == 0 ? lift_certificate(c, i, nk) : lift_coefficient_certificate(c, nk);
        if (auto p = rees_witness_problem(w); !p.empty()) return p;
      }
    }
    ReesWitness m = lift_coefficient_certificate(nc.membership, nk);
    if (auto p = rees_witness_problem(m); !p.empty()) return p;
  } catch (const AlgebraError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

Theorem31Report theorem31_check(const Ideal& i, unsigned max_degree, const SearchBudget& budget) {
  Theorem31Report report;
  report.scope =
      "one-directional: certified generators of each piece lift into the root closure of A[It]; the reverse "
      "inclusion is not searched and is exact only for monomial ideals";
  for (unsigned n = 0; n <= max_degree; ++n) report.pieces.push_back(rees_piece(i, n, budget));
  for (unsigned n = 0; n <= max_degree; ++n) {
    const ReesPiece& piece = report.pieces[n];
    ReesDegreeReport d;
    d.degree = n;
    d.generators = piece.piece.size();
    if (n == 0) {
      d.lifted = d.generators;
    } else {
      const ClosureApproximation& a = *piece.approximation;
      for (const auto& g : a.base.generators()) {
        RootSearchResult r = find_root_certificate(g, a.base, budget);
        std::string problem = r.status == RootSearchResult::Status::Found ? "" : "generator of I^n not certified";
        if (problem.empty()) {
          try {
            problem = rees_witness_problem(lift_certificate(*r.certificate, i, n));
          } catch (const AlgebraError& e) {
            problem = e.what();
          }
        }
        if (problem.empty()) {
          ++d.lifted;
        } else {
          d.lifts_pass = false;
          d.failures.push_back("lift of " + g.to_string() + ": " + problem);
        }
      }
      for (const auto& nc : a.natural_certificates) {
        if (auto p = lift_natural(nc, i, n); p.empty()) {
          ++d.lifted;
        } else {
          d.lifts_pass = false;
          d.failures.push_back("lift of " + nc.element.to_string() + ": " + p);
        }
      }
      for (unsigned a1 = 1; 2 * a1 <= n; ++a1) {
        const Ideal& p1 = report.pieces[a1].piece;
        const Ideal& p2 = report.pieces[n - a1].piece;
        for (const auto& x : p1.generators()) {
          for (const auto& y : p2.generators()) {
            if (!piece.piece.contains(x * y)) {
              d.multiplicative_pass = false;
              d.failures.push_back("product " + x.to_string() + " * " + y.to_string() + " of degrees " +
                                   std::to_string(a1) + " and " + std::to_string(n - a1) + " is missing");
            }
          }
        }
      }
      if (monomial_case(i)) {
        d.monomial_exact_pass = ideal_equal(piece.piece, monomial_integral_closure(ideal_power(i, n)));
        if (!*d.monomial_exact_pass) d.failures.push_back("piece differs from the monomial closure of I^n");
      }
    }
    d.pass = d.lifts_pass && d.multiplicative_pass && d.monomial_exact_pass.value_or(true);
    report.pass = report.pass && d.pass;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace rootclosure
