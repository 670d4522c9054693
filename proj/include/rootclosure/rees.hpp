#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootclosure/closure.hpp"

namespace rootclosure {

enum class ReesProvenance { NaturalApprox, MonomialExact };
std::string to_string(ReesProvenance p);

// Coefficient ideal of t^n in the bounded stand-in for the root closure of
// A[It].
struct ReesPiece {
  Ideal base;
  unsigned degree;
  Ideal piece;
  ReesProvenance provenance;
  // natural_approx of I^n; absent for n = 0.
  std::optional<ClosureApproximation> approximation;
};

ReesPiece rees_piece(const Ideal& i, unsigned n, const SearchBudget& budget);

// A[t] with t appended after the base variables (weight 1), named "t" unless
// the base already uses that name.
RingPtr rees_ring(const RingPtr& base);

// (x t^n)^m = sum multiplier * prod (generator * t^d) + sum r_j D_j t^(nm)
// in A[t], where d is generator_degree.
struct ReesWitness {
  QuotientPtr source;  // A
  RingPtr ring;        // A's base ring with t appended
  Polynomial element;  // x, in A
  unsigned degree;     // n
  unsigned exponent;   // m
  std::vector<Polynomial> generators;
  unsigned generator_degree;
  Witness witness;
  // When set, x^m must also lie in check->first ^ check->second.
  std::optional<std::pair<Ideal, unsigned>> power_check;

  Polynomial lifted() const;
};

// Raw expansion in A[t] plus the optional ideal membership check. Empty
// when valid.
std::string rees_witness_problem(const ReesWitness& w);

// c certifies x^m in (I^n)^m. The result expresses (x t^n)^m through the
// degree-one generators g t of A[It]. Throws InvalidCertificateError when c
// does not verify or its ideal is not generated by products of n generators
// of I.
ReesWitness lift_certificate(const RootCertificate& c, const Ideal& i, unsigned n);

// Generic lift for a certificate over any coefficient ideal J placed in
// t-degree n: (x t^n)^m through the elements h t^n, h a generator of J.
ReesWitness lift_coefficient_certificate(const RootCertificate& c, unsigned n);

struct ReesDegreeReport {
  unsigned degree = 0;
  std::size_t generators = 0;
  std::size_t lifted = 0;
  bool lifts_pass = true;
  bool multiplicative_pass = true;
  std::optional<bool> monomial_exact_pass;
  bool pass = true;
  std::vector<std::string> failures;
};

struct Theorem31Report {
  std::vector<ReesPiece> pieces;
  std::vector<ReesDegreeReport> degrees;
  bool pass = true;
  std::string scope;
};

Theorem31Report theorem31_check(const Ideal& i, unsigned max_degree, const SearchBudget& budget);

}  // namespace rootclosure
