#include <mutex>
#include <set>

#include <sodium.h>

#include "rootclosure/errors.hpp"
#include "rootclosure/json_io.hpp"
#include "rootclosure/script.hpp"

namespace rootclosure {

namespace {

constexpr unsigned kMaxJsonExponent = 4096;

Json optional_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

QuotientPtr cached_ring(const std::string& text) {
  static std::mutex mutex;
  static std::map<std::string, QuotientPtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(text); it != cache.end()) return it->second;
  }
  QuotientPtr ring = parse_ring(text);
  std::lock_guard lock(mutex);
  return cache.emplace(text, ring).first->second;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidCertificateError(message);
}

void require_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& what) {
  require(j.is_object(), what + " must be an object");
  require(j.size() == keys.size(), what + " has unexpected fields");
  for (const char* k : keys) require(j.contains(k), what + " is missing \"" + k + "\"");
}

const std::string& text_field(const Json& j, const std::string& what) {
  require(j.is_string(), what + " must be a string");
  return j.get_ref<const std::string&>();
}

Polynomial poly_field(const Json& j, const RingPtr& base, const std::string& what) {
  return parse_polynomial(text_field(j, what), base);
}

}  // namespace

Json polys_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json budget_json(const SearchBudget& b) {
  return Json{{"max_exponent", b.max_exponent},
              {"max_degree", b.max_degree},
              {"max_tower", b.max_tower},
              {"extra_candidates", polys_json(b.extra_candidates)},
              {"max_candidates", b.max_candidates}};
}

std::string certificate_digest(const Json& j) {
  static const int ready = sodium_init();
  (void)ready;
  Json body = j;
  body.erase("digest");
  const std::string text = body.dump();
  unsigned char out[16];
  crypto_generichash(out, sizeof out, reinterpret_cast<const unsigned char*>(text.data()), text.size(), nullptr, 0);
  char hex[2 * sizeof out + 1];
  sodium_bin2hex(hex, sizeof hex, out, sizeof out);
  return hex;
}

Json certificate_json(const RootCertificate& c) {
  Json products = Json::array();
  for (const auto& [factors, multiplier] : c.witness.products) {
    products.push_back(Json{{"factors", factors}, {"multiplier", multiplier.to_string()}});
  }
  Json j{{"ring", c.ideal.ring()->description()},
         {"ideal", polys_json(c.ideal.generators())},
         {"element", c.element.to_string()},
         {"exponent", c.exponent},
         {"witness", Json{{"products", std::move(products)}, {"relations", polys_json(c.witness.relations)}}}};
  j["digest"] = certificate_digest(j);
  return j;
}

RootCertificate certificate_from_json(const Json& j, bool check_digest) {
  require_keys(j, {"ring", "ideal", "element", "exponent", "witness", "digest"}, "certificate");
  if (check_digest) require(text_field(j["digest"], "digest") == certificate_digest(j), "digest mismatch");
  const QuotientPtr ring = cached_ring(text_field(j["ring"], "ring"));
  const RingPtr& base = ring->base();
  require(j["ideal"].is_array(), "ideal must be an array");
  std::vector<Polynomial> gens;
  for (const auto& g : j["ideal"]) gens.push_back(poly_field(g, base, "ideal generator"));
  Ideal ideal(ring, gens);
  require(ideal.generators() == gens, "ideal generators must be distinct nonzero normal forms");
  Polynomial element = poly_field(j["element"], base, "element");
  require(j["exponent"].is_number_unsigned(), "exponent must be a positive integer");
  const auto exponent = j["exponent"].get<std::uint64_t>();
  require(exponent >= 1 && exponent <= kMaxJsonExponent, "exponent out of range");
  const Json& w = j["witness"];
  require_keys(w, {"products", "relations"}, "witness");
  require(w["products"].is_array() && w["relations"].is_array(), "witness fields must be arrays");
  Witness witness;
  for (const auto& p : w["products"]) {
    require_keys(p, {"factors", "multiplier"}, "product");
    require(p["factors"].is_array(), "factors must be an array");
    std::vector<std::uint32_t> factors;
    for (const auto& f : p["factors"]) {
      require(f.is_number_unsigned() && f.get<std::uint64_t>() < gens.size(), "factor index out of range");
      factors.push_back(f.get<std::uint32_t>());
    }
    require(std::is_sorted(factors.begin(), factors.end()), "factors must be sorted");
    const bool fresh = witness.products.emplace(std::move(factors), poly_field(p["multiplier"], base, "multiplier")).second;
    require(fresh, "repeated factor list");
  }
  for (const auto& r : w["relations"]) witness.relations.push_back(poly_field(r, base, "relation coefficient"));
  return RootCertificate{std::move(element), static_cast<unsigned>(exponent), std::move(ideal), std::move(witness)};
}

std::string certificate_json_problem(const Json& j, bool check_digest) {
  try {
    return certificate_problem(certificate_from_json(j, check_digest));
  } catch (const AlgebraError& e) {
    return e.what();
  } catch (const Json::exception& e) {
    return e.what();
  }
}

std::vector<std::string> verify_certificates_json(const Json& j) {
  const Json* list = &j;
  Json single = Json::array();
  if (j.is_object() && j.contains("certificates")) {
    list = &j["certificates"];
  } else if (!j.is_array()) {
    single.push_back(j);
    list = &single;
  }
  std::vector<std::string> problems;
  if (!list->is_array()) return {"certificates must be an array"};
  std::size_t k = 0;
  for (const auto& c : *list) {
    if (auto p = certificate_json_problem(c); !p.empty()) problems.push_back("#" + std::to_string(k) + ": " + p);
    ++k;
  }
  return problems;
}

Json search_result_json(const RootSearchResult& r) {
  Json j{{"status", to_string(r.status)},
         {"exponent", r.certificate ? Json(r.certificate->exponent) : Json(nullptr)},
         {"exponents_tried", r.exponents_tried},
         {"tag", r.tag.empty() ? Json(nullptr) : Json(r.tag)}};
  return j;
}

Json natural_certificate_json(const NaturalCertificate& c) {
  return Json{{"element", c.element.to_string()},
              {"exponent", c.exponent},
              {"power_ideal", polys_json(c.boxed_power->base.generators())},
              {"boxed_power", polys_json(c.boxed_power->result.generators())},
              {"membership_digest", certificate_json(c.membership)["digest"]}};
}

Json approximation_json(const ClosureApproximation& a) {
  Json levels = Json::array();
  for (const auto& l : a.levels) {
    levels.push_back(Json{{"target", polys_json(l.target.generators())},
                          {"result", polys_json(l.result.generators())},
                          {"certified", polys_json(l.certified)}});
  }
  Json natural = Json::array();
  for (const auto& c : a.natural_certificates) natural.push_back(natural_certificate_json(c));
  return Json{{"kind", to_string(a.kind)},
              {"level", a.level},
              {"base", polys_json(a.base.generators())},
              {"result", polys_json(a.result.generators())},
              {"certified", polys_json(a.certified)},
              {"levels", std::move(levels)},
              {"natural", std::move(natural)},
              {"stabilized_at", optional_json(a.stabilized_at)},
              {"strategy", a.strategy},
              {"exact", a.exact}};
}

Json groebner_json(const GroebnerBasis& gb, const std::vector<Polynomial>& source) {
  return Json{{"ring", gb.ring()->description()}, {"source", polys_json(source)}, {"basis", polys_json(gb.generators())}};
}

Json theorem31_json(const Theorem31Report& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    pieces.push_back(
        Json{{"degree", p.degree}, {"piece", polys_json(p.piece.generators())}, {"provenance", to_string(p.provenance)}});
  }
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"generators", d.generators},
                           {"lifted", d.lifted},
                           {"lifts_pass", d.lifts_pass},
                           {"multiplicative_pass", d.multiplicative_pass},
                           {"monomial_exact_pass", d.monomial_exact_pass ? Json(*d.monomial_exact_pass) : Json(nullptr)},
                           {"pass", d.pass},
                           {"failures", d.failures}});
  }
  return Json{{"pass", r.pass}, {"scope", r.scope}, {"pieces", std::move(pieces)}, {"degrees", std::move(degrees)}};
}

std::vector<RootCertificate> all_certificates(const ClosureApproximation& a) {
  std::vector<RootCertificate> out;
  for (const auto& l : a.levels) out.insert(out.end(), l.certificates.begin(), l.certificates.end());
  for (const auto& n : a.natural_certificates) {
    auto inner = all_certificates(*n.boxed_power);
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(n.membership);
  }
  return out;
}

Json envelope(const std::string& command, Json inputs, Json result, const std::vector<RootCertificate>& certificates,
              bool exact, const SearchBudget& budget) {
  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(certificate_json(c));
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"certificates", std::move(certs)},
              {"exact", exact},
              {"budget", budget_json(budget)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rootclosure
