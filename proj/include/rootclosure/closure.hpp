#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootclosure/certificate.hpp"

namespace rootclosure {

enum class ApproximationKind { Sharp, BoxedSharp, Natural };
std::string to_string(ApproximationKind k);

struct CandidateSet {
  std::vector<Polynomial> elements;
  // "homogeneous", "monomial" or "monomials+extras".
  std::string strategy;
  // Candidates cover every generator of the true closure.
  bool exact = false;
};

// Canonical candidate order: increasing degree, then enumeration order,
// then the budget's extra candidates. Throws NotEnumerableError when no
// strategy applies.
CandidateSet enumerate_candidates(const Ideal& i, const SearchBudget& budget);

struct SharpLevel {
  // Ideal the level's certificates are taken against.
  Ideal target;
  Ideal result;
  // One per generator added to target.
  std::vector<RootCertificate> certificates;
  // Candidates with a root certificate over target (members of target
  // included): the bounded stand-in for the set of all roots.
  std::vector<Polynomial> certified;
};

struct ClosureApproximation;

// x^n lies in the boxed approximation of I^n, shown by a chain of root
// certificates for the boxed generators and an exponent-1 membership
// certificate for x^n.
struct NaturalCertificate {
  Polynomial element;
  unsigned exponent;
  std::shared_ptr<const ClosureApproximation> boxed_power;
  RootCertificate membership;
};

struct ClosureApproximation {
  ApproximationKind kind;
  unsigned level = 1;
  Ideal base;
  Ideal result;
  std::vector<SharpLevel> levels;
  std::vector<NaturalCertificate> natural_certificates;
  std::vector<Polynomial> certified;
  SearchBudget budget;
  bool exact = false;
  std::optional<unsigned> stabilized_at;
  std::string strategy;

  std::vector<RootCertificate> certificates() const;
};

ClosureApproximation sharp_approx(const Ideal& i, const SearchBudget& budget);
ClosureApproximation sharp_tower(const Ideal& i, unsigned levels, const SearchBudget& budget);
ClosureApproximation boxed_sharp_approx(const Ideal& i, const SearchBudget& budget);
ClosureApproximation natural_approx(const Ideal& i, const SearchBudget& budget);

// Smallest n <= N with x^n in boxed_sharp_approx(I^n).
std::optional<NaturalCertificate> find_natural_certificate(const Polynomial& x, const Ideal& i,
                                                           const SearchBudget& budget);

// Checks the chain of a natural certificate against I. Empty when valid.
std::string natural_certificate_problem(const NaturalCertificate& c, const Ideal& i);

// Every certificate verifies against its level and the levels chain.
std::string approximation_problem(const ClosureApproximation& a);

struct RootClosedResult {
  bool closed = true;
  std::optional<RootCertificate> counterexample;
  // Closed and the candidates are exact.
  bool exact = false;
};
RootClosedResult is_root_closed(const Ideal& i, const SearchBudget& budget);

// Certificate calculus. Inputs must verify (InvalidCertificateError) and
// every output is re-verified.
RootCertificate cert_scale(const RootCertificate& c, const Polynomial& r);
RootCertificate cert_product(const RootCertificate& cx, const RootCertificate& cy);
RootCertificate cert_raise(const RootCertificate& c, unsigned k);
// c certifies x over a colon ideal (I : J), j in J; the result certifies
// x*j over I.
RootCertificate cert_colon_transfer(const RootCertificate& c, const Ideal& i, const Ideal& j_ideal,
                                    const Polynomial& j);
// Ring map given by variable images in target's base ring; relations must
// map into target's relations.
RootCertificate cert_extend_ring(const RootCertificate& c, const QuotientPtr& target,
                                 const std::vector<Polynomial>& images);

}  // namespace rootclosure
