#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "rootclosure/closure.hpp"
#include "rootclosure/errors.hpp"
#include "rootclosure/monomial_oracle.hpp"

namespace rootclosure {

std::string to_string(ApproximationKind k) {
  switch (k) {
    case ApproximationKind::Sharp:
      return "sharp";
    case ApproximationKind::BoxedSharp:
      return "boxed";
    case ApproximationKind::Natural:
      return "natural";
  }
  return "?";
}

namespace {

bool same_generators(const Ideal& a, const Ideal& b) {
  return a.ring()->same_as(*b.ring()) && a.generators() == b.generators();
}

std::vector<Polynomial> box_monomials(const Ideal& i) {
  const RingPtr& base = i.base();
  const std::size_t d = base->num_variables();
  ExponentVector hi(d, 0);
  for (const auto& g : i.generators()) {
    const auto e = exponent_vector(g.leading_monomial(), d);
    for (std::size_t k = 0; k < d; ++k) hi[k] = std::max(hi[k], e[k]);
  }
  std::vector<Monomial> monos;
  if (i.is_zero()) return {};
  ExponentVector cur(d, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == d) {
      monos.push_back(base->monomial(cur));
      return;
    }
    for (std::uint32_t e = 0; e <= hi[k]; ++e) {
      cur[k] = e;
      walk(k + 1);
    }
    cur[k] = 0;
  };
  walk(0);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return base->compare(a, b) > 0;
  });
  std::vector<Polynomial> out;
  for (const auto& m : monos) out.push_back(Polynomial::term(base, base->field().one(), m));
  return out;
}

void append_unique(std::vector<Polynomial>& out, const Polynomial& f) {
  if (f.is_zero()) return;
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

SharpLevel sharp_level(const Ideal& target, const SearchBudget& budget, CandidateSet* strategy_out) {
  CandidateSet cands = enumerate_candidates(target, budget);
  SharpLevel level{target, target, {}, {}};
  std::vector<Polynomial> gens = target.generators();
  for (const auto& x : cands.elements) {
    if (target.contains(x)) {
      level.certified.push_back(x);
      continue;
    }
    RootSearchResult r = find_root_certificate(x, target, budget);
    if (r.status != RootSearchResult::Status::Found) continue;
    level.certified.push_back(x);
    if (level.result.contains(x)) continue;
    gens.push_back(x);
    level.result = Ideal(target.ring(), gens);
    level.certificates.push_back(std::move(*r.certificate));
  }
  if (strategy_out) *strategy_out = std::move(cands);
  return level;
}

ClosureApproximation tower(const Ideal& i, unsigned max_levels, bool stop_when_stable, ApproximationKind kind,
                           const SearchBudget& budget) {
  budget.validate();
  ClosureApproximation a{kind, max_levels, i, i, {}, {}, {}, budget, false, std::nullopt, {}};
  CandidateSet first;
  for (unsigned k = 1; k <= max_levels; ++k) {
    const Ideal target = a.levels.empty() ? i : a.levels.back().result;
    if (!a.levels.empty() && a.stabilized_at) {
      SharpLevel copy = a.levels.back();
      copy.target = target;
      copy.certificates.clear();
      a.levels.push_back(std::move(copy));
      continue;
    }
    a.levels.push_back(sharp_level(target, budget, k == 1 ? &first : nullptr));
    if (ideal_equal(a.levels.back().result, target)) {
      a.stabilized_at = std::max(1U, k - 1);
      if (stop_when_stable) break;
    }
  }
  a.result = a.levels.back().result;
  a.certified = a.levels.back().certified;
  a.strategy = first.strategy;
  a.exact = first.exact;
  if (kind == ApproximationKind::BoxedSharp) a.level = static_cast<unsigned>(a.levels.size());
  if (kind == ApproximationKind::Sharp) a.stabilized_at.reset();
  return a;
}

using BoxedCache = std::map<unsigned, std::shared_ptr<const ClosureApproximation>>;

std::optional<NaturalCertificate> natural_search(const Polynomial& x, const Ideal& i, const SearchBudget& budget,
                                                 BoxedCache& cache) {
  const QuotientPtr& ring = i.ring();
  const Polynomial xr = ring->reduce(x);
  Polynomial power = ring->one();
  for (unsigned n = 1; n <= budget.max_exponent; ++n) {
    power = ring->reduce(power * xr);
    auto& boxed = cache[n];
    if (!boxed) boxed = std::make_shared<const ClosureApproximation>(boxed_sharp_approx(ideal_power(i, n), budget));
    const Ideal& target = boxed->result;
    if (!target.contains(power)) continue;
    auto expr = target.express_in_power(power, 1);
    if (!expr) throw std::logic_error("membership without an expression");
    std::map<std::vector<std::uint32_t>, Polynomial> products;
    for (auto& p : expr->products) products.emplace(std::move(p.factors), std::move(p.multiplier));
    RootCertificate membership = finalize_certificate(pow(xr, n), 1, target, std::move(products));
    return NaturalCertificate{xr, n, boxed, std::move(membership)};
  }
  return std::nullopt;
}

}  // namespace

CandidateSet enumerate_candidates(const Ideal& i, const SearchBudget& budget) {
  budget.validate();
  const PresentedRing& ring = *i.ring();
  std::vector<Polynomial> extras;
  for (const auto& e : budget.extra_candidates) {
    if (!e.ring()->same_as(*i.base())) throw MixedRingError("extra candidate is not in the ideal's ring");
    extras.push_back(ring.reduce(e));
  }
  CandidateSet out;
  if (i.is_monomial() && i.base()->num_variables() <= NewtonPolyhedron::kMaxDimension) {
    out.strategy = "monomial";
    out.exact = true;
    out.elements = box_monomials(i);
  } else if (ring.field().is_finite() && ring.is_graded()) {
    out.strategy = "homogeneous";
    for (std::uint32_t d = 0; d <= budget.max_degree; ++d) {
      const std::uint64_t room = budget.max_candidates - std::min<std::uint64_t>(budget.max_candidates, out.elements.size());
      for (auto& f : homogeneous_elements(ring, d, true, room)) out.elements.push_back(std::move(f));
    }
  } else if (!ring.field().is_finite() || !extras.empty()) {
    out.strategy = "monomials+extras";
    for (std::uint32_t d = 0; d <= budget.max_degree; ++d) {
      for (const auto& m : ring.standard_monomials(d)) {
        out.elements.push_back(Polynomial::term(i.base(), ring.field().one(), m));
      }
    }
  } else {
    throw NotEnumerableError("no candidate strategy: need a finite field with graded relations, a monomial ideal, "
                             "or extra candidates");
  }
  std::vector<Polynomial> unique;
  for (const auto& f : out.elements) append_unique(unique, f);
  for (const auto& f : extras) append_unique(unique, f);
  if (unique.size() > budget.max_candidates) throw BudgetExceededError("too many closure candidates");
  out.elements = std::move(unique);
  return out;
}

std::vector<RootCertificate> ClosureApproximation::certificates() const {
  std::vector<RootCertificate> out;
  for (const auto& l : levels) out.insert(out.end(), l.certificates.begin(), l.certificates.end());
  for (const auto& n : natural_certificates) out.push_back(n.membership);
  return out;
}

ClosureApproximation sharp_approx(const Ideal& i, const SearchBudget& budget) {
  return tower(i, 1, false, ApproximationKind::Sharp, budget);
}

ClosureApproximation sharp_tower(const Ideal& i, unsigned levels, const SearchBudget& budget) {
  if (levels == 0) throw std::invalid_argument("tower level must be at least 1");
  return tower(i, levels, false, ApproximationKind::Sharp, budget);
}

ClosureApproximation boxed_sharp_approx(const Ideal& i, const SearchBudget& budget) {
  return tower(i, budget.max_tower, true, ApproximationKind::BoxedSharp, budget);
}

std::optional<NaturalCertificate> find_natural_certificate(const Polynomial& x, const Ideal& i,
                                                           const SearchBudget& budget) {
  budget.validate();
  if (!x.ring()->same_as(*i.base())) throw MixedRingError();
  if (!exact_non_member_tag(x, i).empty()) return std::nullopt;
  BoxedCache cache;
  return natural_search(x, i, budget, cache);
}

ClosureApproximation natural_approx(const Ideal& i, const SearchBudget& budget) {
  budget.validate();
  const CandidateSet cands = enumerate_candidates(i, budget);
  ClosureApproximation a{ApproximationKind::Natural, 1, i, i, {}, {}, {}, budget, cands.exact, std::nullopt,
                         cands.strategy};
  std::vector<Polynomial> gens = i.generators();
  BoxedCache cache;
  for (const auto& x : cands.elements) {
    if (i.contains(x)) {
      a.certified.push_back(x);
      continue;
    }
    if (!exact_non_member_tag(x, i).empty()) continue;
    auto nc = natural_search(x, i, budget, cache);
    if (!nc) continue;
    a.certified.push_back(x);
    if (a.result.contains(x)) continue;
    gens.push_back(x);
    a.result = Ideal(i.ring(), gens);
    a.natural_certificates.push_back(std::move(*nc));
  }
  return a;
}

std::string natural_certificate_problem(const NaturalCertificate& c, const Ideal& i) {
  if (c.exponent == 0) return "exponent must be at least 1";
  if (!c.boxed_power) return "missing boxed approximation";
  const ClosureApproximation& boxed = *c.boxed_power;
  if (boxed.kind != ApproximationKind::BoxedSharp) return "chain does not end in a boxed approximation";
  if (!ideal_equal(boxed.base, ideal_power(i, c.exponent))) return "boxed approximation is not taken of I^n";
  if (auto p = approximation_problem(boxed); !p.empty()) return "boxed approximation: " + p;
  if (c.membership.exponent != 1) return "membership certificate must have exponent 1";
  if (!same_generators(c.membership.ideal, boxed.result)) return "membership is not against the boxed result";
  if (c.membership.element != pow(c.element, c.exponent)) return "membership element is not element^n";
  return certificate_problem(c.membership);
}

std::string approximation_problem(const ClosureApproximation& a) {
  const Ideal* previous = &a.base;
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    const SharpLevel& l = a.levels[k];
    const std::string at = "level " + std::to_string(k + 1) + ": ";
    if (!same_generators(l.target, *previous)) return at + "target is not the previous result";
    std::vector<Polynomial> gens = l.target.generators();
    for (const auto& c : l.certificates) {
      if (!same_generators(c.ideal, l.target)) return at + "certificate is not against the level target";
      if (auto p = certificate_problem(c); !p.empty()) return at + p;
      gens.push_back(c.element);
    }
    if (!ideal_equal(Ideal(l.target.ring(), gens), l.result)) return at + "result is not target plus certified elements";
    previous = &l.result;
  }
  if (!a.levels.empty() && !same_generators(a.result, a.levels.back().result)) return "result is not the last level";
  if (a.kind == ApproximationKind::Natural) {
    std::vector<Polynomial> gens = a.base.generators();
    for (const auto& n : a.natural_certificates) {
      if (auto p = natural_certificate_problem(n, a.base); !p.empty()) return "natural certificate: " + p;
      gens.push_back(n.element);
    }
    if (!ideal_equal(Ideal(a.base.ring(), gens), a.result)) return "result is not base plus certified elements";
  }
  return {};
}

RootClosedResult is_root_closed(const Ideal& i, const SearchBudget& budget) {
  budget.validate();
  const CandidateSet cands = enumerate_candidates(i, budget);
  RootClosedResult out;
  for (const auto& x : cands.elements) {
    if (i.contains(x)) continue;
    RootSearchResult r = find_root_certificate(x, i, budget);
    if (r.status == RootSearchResult::Status::Found) {
      out.closed = false;
      out.counterexample = std::move(r.certificate);
      return out;
    }
  }
  out.exact = cands.exact;
  return out;
}

}  // namespace rootclosure
