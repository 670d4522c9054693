#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "rootclosure/polynomial.hpp"

namespace rootclosure {

struct GroebnerOptions {
  std::size_t pair_cap = 200000;
  // Record, for every basis element, its expression over the source
  // generators. Needed whenever a membership proof has to name sources.
  bool track_lift = false;
};

// Reduced Groebner basis in the monomial order of its ring, sorted by
// increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> source, std::vector<Polynomial> generators,
                std::vector<std::vector<Polynomial>> lift);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& source() const { return source_; }
  std::size_t size() const { return generators_.size(); }
  bool is_unit_ideal() const { return generators_.size() == 1 && generators_[0].is_constant(); }
  bool has_lift() const { return !lift_.empty() || generators_.empty(); }
  // lift()[i][j] is the coefficient of source()[j] in generators()[i].
  const std::vector<std::vector<Polynomial>>& lift() const { return lift_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> source_;
  std::vector<Polynomial> generators_;
  std::vector<std::vector<Polynomial>> lift_;
};

// Throws BudgetExceededError when the pending pair queue outgrows the cap.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options = {});
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                         const GroebnerOptions& options = {});

// input = sum(cofactor * divisor) + remainder, no remainder term divisible by
// a divisor's leading monomial.
struct ReductionTrace {
  Polynomial input;
  Polynomial remainder;
  std::vector<std::pair<std::size_t, Polynomial>> cofactors;
};

// Full reduction; reducers are tried in index order.
ReductionTrace reduce(const Polynomial& f, std::span<const Polynomial> divisors, bool traced);
ReductionTrace normal_form(const Polynomial& f, const GroebnerBasis& basis, bool traced);
Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors);

// Re-expands the identity of a trace against the divisors.
bool trace_holds(const ReductionTrace& trace, std::span<const Polynomial> divisors);

// Coefficients over basis.source() for a trace against basis with zero
// remainder. Requires has_lift().
std::vector<Polynomial> source_cofactors(const ReductionTrace& trace, const GroebnerBasis& basis);

struct Member {
  ReductionTrace trace;
};
struct NotMember {
  Polynomial remainder;
};
using MembershipResult = std::variant<Member, NotMember>;

MembershipResult ideal_member(const Polynomial& f, const GroebnerBasis& basis);
MembershipResult ideal_member(const Polynomial& f, const std::vector<Polynomial>& generators,
                              const GroebnerOptions& options = {});

}  // namespace rootclosure
