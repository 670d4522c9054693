#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootclosure/ideal.hpp"

namespace rootclosure {

struct SearchBudget {
  unsigned max_exponent = 8;       // N
  unsigned max_degree = 4;         // D
  unsigned max_tower = 3;          // L
  std::vector<Polynomial> extra_candidates;
  std::uint64_t max_candidates = 1U << 16;

  // Throws std::invalid_argument when a bound is zero.
  void validate() const;
};

// value = sum over products of multiplier * (product of the ideal's
// generators at the listed indices) + sum_j relations[j] * D_j.
struct Witness {
  std::map<std::vector<std::uint32_t>, Polynomial> products;
  std::vector<Polynomial> relations;
};

// Proof that element^exponent lies in ideal^exponent: the witness re-expands
// to element^exponent exactly in the base polynomial ring.
struct RootCertificate {
  Polynomial element;
  unsigned exponent;
  Ideal ideal;
  Witness witness;
};

// Independent re-expansion using polynomial arithmetic only. Returns an
// empty string when the certificate is valid, otherwise the first problem.
std::string certificate_problem(const RootCertificate& c);
inline bool verify_certificate(const RootCertificate& c) { return certificate_problem(c).empty(); }

// Expands sum multiplier * product of generators.
Polynomial witness_products_value(const Witness& w, const Ideal& ideal);

// Completes a witness whose products already agree with element^exponent
// modulo the relations: multipliers are reduced and the relation part is
// recomputed. Throws InvalidCertificateError if the congruence fails.
RootCertificate finalize_certificate(Polynomial element, unsigned exponent, Ideal ideal,
                                     std::map<std::vector<std::uint32_t>, Polynomial> products);

struct RootSearchResult {
  enum class Status { Found, NotFoundWithinBudget, NotMemberExact };
  Status status = Status::NotFoundWithinBudget;
  std::optional<RootCertificate> certificate;
  // "degree-argument" or "monomial-oracle" for NotMemberExact.
  std::string tag;
  unsigned exponents_tried = 0;
};

std::string to_string(RootSearchResult::Status s);

// "monomial-oracle" when x lies outside the integral closure of a monomial
// ideal, "degree-argument" when a graded lower bound rules out every
// x^n in I^n; empty otherwise. Either tag excludes x from every closure
// contained in the integral closure.
std::string exact_non_member_tag(const Polynomial& x, const Ideal& i);

// Smallest n <= N with x^n in I^n, with witness. For monomial ideals of a
// polynomial ring the search is exact and continues past N when the oracle
// guarantees a root.
RootSearchResult find_root_certificate(const Polynomial& x, const Ideal& i, const SearchBudget& budget);

}  // namespace rootclosure
