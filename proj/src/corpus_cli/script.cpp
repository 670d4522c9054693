#include "rootclosure/script.hpp"

#include <set>
#include <stdexcept>

#include "rootclosure/errors.hpp"

namespace rootclosure {

namespace {

bool is_symbol(const Token& t, std::string_view s) { return t.kind == Token::Kind::Symbol && t.text == s; }

std::uint64_t parse_count(Lexer& lexer, std::string_view what) {
  const Token t = lexer.expect_number(what);
  if (t.text.size() > 9) throw SyntaxError(std::string(what) + " is too large", t.line, t.column, t.text);
  return std::stoull(t.text);
}

// Coefficients (degree 0 upward) of a univariate polynomial over F_p.
std::vector<std::uint32_t> univariate_coefficients(const Polynomial& f) {
  std::vector<std::uint32_t> out;
  for (const auto& term : f.terms()) {
    const std::size_t d = term.mono.exps[0];
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] = term.coeff.residues()[0];
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> default_minimal_polynomial(std::uint32_t p, unsigned k) {
  if (k < 2 || k > 4) throw InvalidFieldError(InvalidFieldError::Reason::BadDegree, "extension degree must be 2, 3 or 4");
  std::vector<std::uint32_t> poly(k + 1, 0);
  poly[k] = 1;
  while (true) {
    if (is_irreducible_mod_p(poly, p)) return poly;
    std::size_t i = 0;
    while (i < k && ++poly[i] == p) poly[i++] = 0;
    if (i == k) throw std::logic_error("no irreducible polynomial found");
  }
}

Field parse_field(Lexer& lexer) {
  const Token head = lexer.expect_identifier("field");
  if (head.text == "QQ") return Field::rationals();
  if (head.text != "GF") throw SyntaxError("expected GF(...) or QQ", head.line, head.column, head.text);
  lexer.expect("(");
  const Token pt = lexer.peek();
  const auto p = parse_count(lexer, "characteristic");
  if (!is_prime(p)) {
    throw InvalidFieldError(InvalidFieldError::Reason::NotPrime,
                            std::to_string(pt.line) + ":" + std::to_string(pt.column) + ": " + pt.text +
                                " is not prime");
  }
  const Field base = Field::prime(static_cast<std::uint32_t>(p));
  if (lexer.accept(")")) return base;
  lexer.expect("^");
  const Token kt = lexer.peek();
  const auto k = parse_count(lexer, "extension degree");
  if (k == 0) throw SyntaxError("extension degree must be positive", kt.line, kt.column, kt.text);
  if (lexer.accept(")")) {
    if (k == 1) return base;
    return Field::extension(base.characteristic(), default_minimal_polynomial(base.characteristic(), k));
  }
  lexer.expect(",");
  std::string generator;
  for (std::size_t ahead = 0, depth = 0;; ++ahead) {
    const Token& t = lexer.peek(ahead);
    if (t.kind == Token::Kind::End) break;
    if (is_symbol(t, "(")) ++depth;
    if (is_symbol(t, ")")) {
      if (depth == 0) break;
      --depth;
    }
    if (t.kind != Token::Kind::Identifier) continue;
    if (generator.empty()) {
      generator = t.text;
    } else if (generator != t.text) {
      throw SyntaxError("minimal polynomial must use a single variable", t.line, t.column, t.text);
    }
  }
  if (generator.empty()) generator = "w";
  const Token at = lexer.peek();
  const auto ring = PolyRing::create(base, {generator});
  const Polynomial m = parse_expression(lexer, ring);
  lexer.expect(")");
  if (m.is_zero() || m.leading_monomial().exps[0] != k) {
    throw InvalidFieldError(InvalidFieldError::Reason::BadDegree,
                            std::to_string(at.line) + ":" + std::to_string(at.column) +
                                ": minimal polynomial degree differs from the extension degree");
  }
  if (k == 1) throw InvalidFieldError(InvalidFieldError::Reason::BadDegree, "GF(p^1) takes no minimal polynomial");
  return Field::extension(base.characteristic(), univariate_coefficients(m), generator);
}

namespace {

QuotientPtr parse_ring_body(Lexer& lexer, const std::set<std::string>& taken) {
  const Field field = parse_field(lexer);
  const Token open = lexer.expect("[");
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  do {
    const Token v = lexer.expect_identifier("variable");
    const bool clash = std::find(names.begin(), names.end(), v.text) != names.end() || taken.count(v.text) ||
                       (field.kind() == Field::Kind::Extension && v.text == field.generator_name());
    if (clash) throw SyntaxError("variable name already in use", v.line, v.column, v.text);
    names.push_back(v.text);
    std::uint32_t weight = 1;
    if (lexer.accept(":") || lexer.accept(";")) {
      const Token w = lexer.next();
      if (w.kind != Token::Kind::Number || w.text.size() > 9 || std::stoul(w.text) == 0) {
        throw BadWeightError("weight must be a positive integer", w.line, w.column, w.text);
      }
      weight = static_cast<std::uint32_t>(std::stoul(w.text));
    }
    weights.push_back(weight);
  } while (lexer.accept(","));
  lexer.expect("]");
  RingPtr base;
  try {
    base = PolyRing::create(field, names, weights);
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(e.what(), open.line, open.column, open.text);
  }
  std::vector<Polynomial> relations;
  if (lexer.accept("/")) {
    lexer.expect("(");
    do {
      relations.push_back(parse_expression(lexer, base));
    } while (lexer.accept(","));
    lexer.expect(")");
  }
  return PresentedRing::create(base, std::move(relations));
}

struct CommandShape {
  std::string_view name;
  // x: element name, I: ideal name, n: integer.
  std::string_view args;
};

constexpr CommandShape kCommands[] = {
    {"groebner", "I"},     {"member", "xI"},           {"power_member", "xI"}, {"radical_member", "xI"},
    {"sharp", "I"},        {"tower", "In"},            {"boxed", "I"},         {"natural", "I"},
    {"monomial_closure", "I"}, {"rees_check", "In"},
};

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : lexer_(text) {}

  SessionScript run() {
    while (!lexer_.at_end()) {
      if (lexer_.is_keyword("ring")) {
        ring_decl();
      } else if (lexer_.is_keyword("ideal")) {
        ideal_decl();
      } else if (lexer_.is_keyword("let")) {
        let_decl();
      } else {
        command();
      }
      lexer_.expect(";");
    }
    return std::move(script_);
  }

 private:
  Token fresh_name() {
    const Token t = lexer_.expect_identifier("name");
    if (script_.rings.count(t.text) || script_.ideals.count(t.text) || script_.elements.count(t.text)) {
      throw SyntaxError("name already declared", t.line, t.column, t.text);
    }
    return t;
  }

  std::string ring_ref() {
    const Token t = lexer_.expect_identifier("ring name");
    if (!script_.rings.count(t.text)) throw UndeclaredNameError("undeclared ring", t.line, t.column, t.text);
    return t.text;
  }

  std::set<std::string> declared_names() const {
    std::set<std::string> out;
    for (const auto& [name, _] : script_.elements) out.insert(name);
    return out;
  }

  void ring_decl() {
    lexer_.next();
    const Token name = fresh_name();
    lexer_.expect("=");
    script_.rings.emplace(name.text, parse_ring_body(lexer_, declared_names()));
    last_ring_ = name.text;
  }

  void ideal_decl() {
    lexer_.next();
    const Token name = fresh_name();
    lexer_.expect("=");
    Lexer body = lexer_;
    lexer_.expect("(");
    for (std::size_t depth = 1; depth > 0;) {
      const Token t = lexer_.next();
      if (t.kind == Token::Kind::End) lexer_.fail("unterminated generator list");
      if (is_symbol(t, "(")) ++depth;
      if (is_symbol(t, ")")) --depth;
    }
    if (!lexer_.is_keyword("in")) lexer_.fail("expected 'in'");
    lexer_.next();
    const std::string ring = ring_ref();
    const QuotientPtr& r = script_.rings.at(ring);
    const NameResolver resolve = script_.resolver(ring);
    body.expect("(");
    std::vector<Polynomial> gens;
    do {
      gens.push_back(parse_expression(body, r->base(), resolve));
    } while (body.accept(","));
    body.expect(")");
    script_.ideals.emplace(name.text, IdealDecl{ring, Ideal(r, gens)});
  }

  void let_decl() {
    lexer_.next();
    const Token name = fresh_name();
    lexer_.expect("=");
    Lexer body = lexer_;
    while (!lexer_.at_end() && !lexer_.is_symbol(";") && !lexer_.is_keyword("in")) lexer_.next();
    std::string ring = last_ring_;
    if (lexer_.is_keyword("in")) {
      lexer_.next();
      ring = ring_ref();
    } else if (ring.empty()) {
      throw UndeclaredNameError("let before any ring declaration", name.line, name.column, name.text);
    }
    const RingPtr& base = script_.rings.at(ring)->base();
    if (base->variable_index(name.text)) throw SyntaxError("name shadows a variable", name.line, name.column, name.text);
    Polynomial value = parse_expression(body, base, script_.resolver(ring));
    if (!body.is_symbol(";") && !body.is_keyword("in")) body.fail("unexpected token in expression");
    script_.elements.emplace(name.text, ElementDecl{ring, std::move(value)});
  }

  void command() {
    const Token name = lexer_.expect_identifier("statement");
    const CommandShape* shape = nullptr;
    for (const auto& c : kCommands) {
      if (c.name == name.text) shape = &c;
    }
    if (!shape) throw SyntaxError("unknown statement", name.line, name.column, name.text);
    ScriptCommand cmd{name.text, {}, name.line, name.column};
    lexer_.expect("(");
    for (std::size_t k = 0; k < shape->args.size(); ++k) {
      if (k) lexer_.expect(",");
      const Token a = lexer_.next();
      const char kind = shape->args[k];
      if (kind == 'n') {
        if (a.kind != Token::Kind::Number) throw SyntaxError("expected an integer", a.line, a.column, a.text);
      } else if (a.kind != Token::Kind::Identifier) {
        throw SyntaxError("expected a name", a.line, a.column, a.text);
      } else if (kind == 'I' && !script_.ideals.count(a.text)) {
        throw UndeclaredNameError("undeclared ideal", a.line, a.column, a.text);
      } else if (kind == 'x' && !script_.elements.count(a.text)) {
        throw UndeclaredNameError("undeclared element", a.line, a.column, a.text);
      }
      cmd.args.push_back(a.text);
    }
    lexer_.expect(")");
    script_.commands.push_back(std::move(cmd));
  }

  Lexer lexer_;
  SessionScript script_;
  std::string last_ring_;
};

}  // namespace

const QuotientPtr& SessionScript::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw UndeclaredNameError("undeclared ring", 0, 0, name);
  return it->second;
}

const IdealDecl& SessionScript::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw UndeclaredNameError("undeclared ideal", 0, 0, name);
  return it->second;
}

NameResolver SessionScript::resolver(const std::string& ring_name) const {
  return [this, ring_name](const std::string& name) -> std::optional<Polynomial> {
    auto it = elements.find(name);
    if (it == elements.end() || it->second.ring != ring_name) return std::nullopt;
    return it->second.element;
  };
}

Polynomial SessionScript::parse_element(std::string_view text, const std::string& ring_name) const {
  return parse_polynomial(text, ring(ring_name)->base(), resolver(ring_name));
}

SessionScript parse_script(std::string_view text) { return ScriptParser(text).run(); }

QuotientPtr parse_ring(std::string_view text) {
  Lexer lexer(text);
  QuotientPtr ring = parse_ring_body(lexer, {});
  if (!lexer.at_end()) lexer.fail("unexpected token after ring");
  return ring;
}

}  // namespace rootclosure
