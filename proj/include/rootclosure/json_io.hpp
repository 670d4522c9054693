#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rootclosure/rees.hpp"

namespace rootclosure {

using Json = nlohmann::ordered_json;

Json polys_json(const std::vector<Polynomial>& polys);
Json budget_json(const SearchBudget& budget);

// {"ring", "ideal", "element", "exponent", "witness": {"products",
// "relations"}, "digest"}. The digest is BLAKE2b-128 over the compact dump
// of the other fields.
Json certificate_json(const RootCertificate& c);
std::string certificate_digest(const Json& j);
// Rebuilds a certificate without checking its algebra. Throws
// InvalidCertificateError for structural problems and ParseError or
// InvalidFieldError for bad ring or polynomial text.
RootCertificate certificate_from_json(const Json& j, bool check_digest = true);
// Empty when j parses and the certificate verifies.
std::string certificate_json_problem(const Json& j, bool check_digest = true);

// Verifies a certificate object, an array of them, or an envelope with a
// "certificates" array. Returns one problem per rejected certificate
// ("#k: ..."); empty when every certificate verifies.
std::vector<std::string> verify_certificates_json(const Json& j);

Json search_result_json(const RootSearchResult& r);
Json approximation_json(const ClosureApproximation& a);
Json natural_certificate_json(const NaturalCertificate& c);
Json groebner_json(const GroebnerBasis& gb, const std::vector<Polynomial>& source);
Json theorem31_json(const Theorem31Report& r);

// Every root certificate behind an approximation, natural chains included.
std::vector<RootCertificate> all_certificates(const ClosureApproximation& a);

Json envelope(const std::string& command, Json inputs, Json result, const std::vector<RootCertificate>& certificates,
              bool exact, const SearchBudget& budget);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace rootclosure
