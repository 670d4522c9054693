#include "rootclosure/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rootclosure/errors.hpp"

namespace rootclosure {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> source, std::vector<Polynomial> generators,
                             std::vector<std::vector<Polynomial>> lift)
    : ring_(std::move(ring)), source_(std::move(source)), generators_(std::move(generators)), lift_(std::move(lift)) {}

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exps[i] != 0 && b.exps[i] != 0) return false;
  }
  return true;
}

// Reduces with divisors given by pointer so the engine can pass its working
// list without copying.
ReductionTrace reduce_impl(const Polynomial& f, const std::vector<const Polynomial*>& divisors, bool traced) {
  const RingPtr& ring = f.ring();
  const Field& k = ring->field();
  std::vector<Polynomial::Term> rem;
  std::map<std::size_t, std::vector<Polynomial::Term>> cof;
  Polynomial p = f;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& g = *divisors[i];
      if (g.is_zero() || !g.leading_monomial().divides(lt.mono)) continue;
      const Scalar c = k.mul(lt.coeff, k.inv(g.leading_coefficient()));
      const Monomial m = ring->divide(lt.mono, g.leading_monomial());
      if (traced) cof[i].push_back({c, m});
      p = p.add_scaled(k.neg(c), m, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  ReductionTrace trace{f, Polynomial::from_sorted_terms(ring, std::move(rem)), {}};
  for (auto& [i, terms] : cof) {
    Polynomial c = Polynomial::from_terms(ring, std::move(terms));
    if (!c.is_zero()) trace.cofactors.emplace_back(i, std::move(c));
  }
  return trace;
}

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

class Engine {
 public:
  Engine(RingPtr ring, const std::vector<Polynomial>& source, const GroebnerOptions& options)
      : ring_(std::move(ring)), source_(source), options_(options), pairs_(PairLess{ring_.get()}) {}

  GroebnerBasis run() {
    const Field& k = ring_->field();
    for (std::size_t s = 0; s < source_.size(); ++s) {
      if (!source_[s].ring()->same_as(*ring_)) throw MixedRingError();
      if (source_[s].is_zero()) continue;
      std::vector<Polynomial> lift;
      if (options_.track_lift) {
        lift.assign(source_.size(), Polynomial(ring_));
        lift[s] = Polynomial::constant(ring_, k.inv(source_[s].leading_coefficient()));
      }
      add_element(source_[s].monic(), std::move(lift));
    }
    while (!pairs_.empty()) {
      if (pairs_.size() > options_.pair_cap) {
        throw BudgetExceededError("Groebner pair queue exceeded " + std::to_string(options_.pair_cap) + " pairs");
      }
      const Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      pending_[pair.i][pair.j] = pending_[pair.j][pair.i] = false;
      if (chain_criterion(pair)) continue;
      process(pair);
    }
    return finish();
  }

 private:
  struct PairLess {
    const PolyRing* ring;
    bool operator()(const Pair& a, const Pair& b) const {
      const int c = ring->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void add_element(Polynomial g, std::vector<Polynomial> lift) {
    const std::size_t n = basis_.size();
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial& a = basis_[i].leading_monomial();
      const Monomial& b = g.leading_monomial();
      if (coprime(a, b)) continue;
      pairs_.insert({ring_->lcm(a, b), i, n});
      pending_[i][n] = pending_[n][i] = true;
    }
    basis_.push_back(std::move(g));
    lifts_.push_back(std::move(lift));
  }

  bool chain_criterion(const Pair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis_[k].leading_monomial().divides(pair.lcm)) continue;
      if (!pending_[pair.i][k] && !pending_[pair.j][k]) return true;
    }
    return false;
  }

  std::vector<Polynomial> combine_lift(std::vector<Polynomial> base, const ReductionTrace& trace) const {
    for (const auto& [idx, c] : trace.cofactors) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        if (!lifts_[idx][s].is_zero()) base[s] -= c * lifts_[idx][s];
      }
    }
    return base;
  }

  void process(const Pair& pair) {
    const Field& k = ring_->field();
    const Polynomial& gi = basis_[pair.i];
    const Polynomial& gj = basis_[pair.j];
    const Monomial mi = ring_->divide(pair.lcm, gi.leading_monomial());
    const Monomial mj = ring_->divide(pair.lcm, gj.leading_monomial());
    const Polynomial s = gi.times_term(k.one(), mi).add_scaled(k.neg(k.one()), mj, gj);
    std::vector<const Polynomial*> divisors;
    for (const auto& g : basis_) divisors.push_back(&g);
    ReductionTrace trace = reduce_impl(s, divisors, options_.track_lift);
    if (trace.remainder.is_zero()) return;
    const Scalar inv = k.inv(trace.remainder.leading_coefficient());
    std::vector<Polynomial> lift;
    if (options_.track_lift) {
      lift.reserve(source_.size());
      for (std::size_t t = 0; t < source_.size(); ++t) {
        lift.push_back(lifts_[pair.i][t].times_term(k.one(), mi).add_scaled(k.neg(k.one()), mj, lifts_[pair.j][t]));
      }
      lift = combine_lift(std::move(lift), trace);
      for (auto& l : lift) l = l.scaled(inv);
    }
    add_element(trace.remainder.scaled(inv), std::move(lift));
  }

  GroebnerBasis finish() {
    const Field& k = ring_->field();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& lj = basis_[j].leading_monomial();
        const Monomial& li = basis_[i].leading_monomial();
        if (lj.divides(li) && (lj != li || j < i)) redundant = true;
      }
      if (!redundant) kept.push_back(i);
    }
    std::vector<Polynomial> gens;
    std::vector<std::vector<Polynomial>> lifts;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      std::vector<const Polynomial*> others;
      std::vector<std::size_t> other_index;
      for (std::size_t b = 0; b < kept.size(); ++b) {
        if (b == a) continue;
        others.push_back(&basis_[kept[b]]);
        other_index.push_back(kept[b]);
      }
      const Polynomial& g = basis_[kept[a]];
      ReductionTrace tail = reduce_impl(g, others, options_.track_lift);
      const Scalar inv = k.inv(tail.remainder.leading_coefficient());
      gens.push_back(tail.remainder.scaled(inv));
      if (options_.track_lift) {
        for (auto& [idx, c] : tail.cofactors) idx = other_index[idx];
        auto lift = combine_lift(lifts_[kept[a]], tail);
        for (auto& l : lift) l = l.scaled(inv);
        lifts.push_back(std::move(lift));
      }
    }
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ring_->compare(gens[a].leading_monomial(), gens[b].leading_monomial()) < 0;
    });
    std::vector<Polynomial> sorted;
    std::vector<std::vector<Polynomial>> sorted_lifts;
    for (auto i : order) {
      sorted.push_back(gens[i]);
      if (options_.track_lift) sorted_lifts.push_back(lifts[i]);
    }
    return GroebnerBasis(ring_, source_, std::move(sorted), std::move(sorted_lifts));
  }

  RingPtr ring_;
  const std::vector<Polynomial>& source_;
  GroebnerOptions options_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<Polynomial>> lifts_;
  std::vector<std::vector<bool>> pending_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs a ring; pass it explicitly for empty input");
  return buchberger(generators.front().ring(), generators, options);
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         const GroebnerOptions& options) {
  return Engine(ring, generators, options).run();
}

ReductionTrace reduce(const Polynomial& f, std::span<const Polynomial> divisors, bool traced) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& d : divisors) {
    require_same_ring(f, d);
    ptrs.push_back(&d);
  }
  return reduce_impl(f, ptrs, traced);
}

ReductionTrace normal_form(const Polynomial& f, const GroebnerBasis& basis, bool traced) {
  if (!f.ring()->same_as(*basis.ring())) throw MixedRingError();
  return reduce(f, basis.generators(), traced);
}

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors) {
  return reduce(f, divisors, false).remainder;
}

bool trace_holds(const ReductionTrace& trace, std::span<const Polynomial> divisors) {
  Polynomial sum = trace.remainder;
  for (const auto& [idx, c] : trace.cofactors) {
    if (idx >= divisors.size()) return false;
    sum += c * divisors[idx];
  }
  if (!(sum == trace.input)) return false;
  for (const auto& t : trace.remainder.terms()) {
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

std::vector<Polynomial> source_cofactors(const ReductionTrace& trace, const GroebnerBasis& basis) {
  if (!basis.has_lift()) throw std::logic_error("basis was computed without lift tracking");
  std::vector<Polynomial> out(basis.source().size(), Polynomial(basis.ring()));
  for (const auto& [idx, c] : trace.cofactors) {
    for (std::size_t s = 0; s < out.size(); ++s) {
      const Polynomial& l = basis.lift()[idx][s];
      if (!l.is_zero()) out[s] += c * l;
    }
  }
  return out;
}

MembershipResult ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  ReductionTrace trace = normal_form(f, basis, true);
  if (trace.remainder.is_zero()) return Member{std::move(trace)};
  return NotMember{std::move(trace.remainder)};
}

MembershipResult ideal_member(const Polynomial& f, const std::vector<Polynomial>& generators,
                              const GroebnerOptions& options) {
  return ideal_member(f, buchberger(f.ring(), generators, options));
}

}  // namespace rootclosure
