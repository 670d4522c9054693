#include "rootclosure/poly_parse.hpp"

#include <cctype>

#include "rootclosure/errors.hpp"

namespace rootclosure {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Lexer::Lexer(std::string_view text) {
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    std::size_t len = 1;
    if (ident_start(c)) {
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      tok.kind = Token::Kind::Identifier;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
      tok.kind = Token::Kind::Number;
    } else if (std::string_view("+-*/^()[],;=:").find(c) != std::string_view::npos) {
      tok.kind = Token::Kind::Symbol;
    } else {
      throw SyntaxError("unexpected character", line, column, std::string(1, c));
    }
    tok.text = std::string(text.substr(i, len));
    tokens_.push_back(std::move(tok));
    advance(len);
  }
  Token end;
  end.line = line;
  end.column = column;
  tokens_.push_back(end);
}

const Token& Lexer::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token Lexer::next() {
  Token t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool Lexer::is_symbol(std::string_view sym) const {
  return peek().kind == Token::Kind::Symbol && peek().text == sym;
}

bool Lexer::is_keyword(std::string_view word) const {
  return peek().kind == Token::Kind::Identifier && peek().text == word;
}

bool Lexer::accept(std::string_view sym) {
  if (!is_symbol(sym)) return false;
  next();
  return true;
}

Token Lexer::expect(std::string_view sym) {
  if (!is_symbol(sym)) fail("expected '" + std::string(sym) + "'");
  return next();
}

Token Lexer::expect_identifier(std::string_view what) {
  if (peek().kind != Token::Kind::Identifier) fail("expected " + std::string(what));
  return next();
}

Token Lexer::expect_number(std::string_view what) {
  if (peek().kind != Token::Kind::Number) fail("expected " + std::string(what));
  return next();
}

void Lexer::fail(const std::string& message) const {
  const Token& t = peek();
  throw SyntaxError(message, t.line, t.column, t.kind == Token::Kind::End ? "end of input" : t.text);
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(Lexer& lexer, const RingPtr& ring, const NameResolver& resolve)
      : lex_(lexer), ring_(ring), resolve_(resolve) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (lex_.accept("-")) {
      negate = true;
    } else {
      lex_.accept("+");
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (lex_.accept("+")) {
        acc += term();
      } else if (lex_.accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

 private:
  bool starts_factor() const {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Identifier) return t.text != "in";
    return t.kind == Token::Kind::Number || lex_.is_symbol("(");
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (lex_.accept("*")) {
        acc = acc * factor();
      } else if (lex_.is_symbol("/")) {
        const Token slash = lex_.next();
        Polynomial d = factor();
        if (d.is_zero() || !d.is_constant()) {
          throw SyntaxError("division only by nonzero constants", slash.line, slash.column, slash.text);
        }
        acc = acc.scaled(ring_->field().inv(d.leading_coefficient()));
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (lex_.accept("-")) return -factor();
    Polynomial base = primary();
    if (lex_.accept("^")) {
      const Token e = lex_.expect_number("an exponent");
      if (e.text.size() > 6) throw SyntaxError("exponent too large", e.line, e.column, e.text);
      base = pow(base, static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Polynomial primary() {
    if (lex_.accept("(")) {
      Polynomial inner = expression();
      lex_.expect(")");
      return inner;
    }
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      const Token num = lex_.next();
      return Polynomial::constant(ring_, ring_->field().from_integer_string(num.text));
    }
    if (t.kind == Token::Kind::Identifier) {
      const Token id = lex_.next();
      if (auto p = resolve_name(id.text)) return *p;
      if (auto p = split_product(id.text)) return *p;
      throw UndeclaredNameError("undeclared name", id.line, id.column, id.text);
    }
    lex_.fail("expected a polynomial term");
  }

  std::optional<Polynomial> resolve_name(const std::string& name) const {
    if (auto idx = ring_->variable_index(name)) return Polynomial::variable(ring_, *idx);
    const Field& k = ring_->field();
    if (k.kind() == Field::Kind::Extension && name == k.generator_name()) {
      return Polynomial::constant(ring_, k.generator());
    }
    if (resolve_) return resolve_(name);
    return std::nullopt;
  }

  // "XY" as X*Y when every piece is a variable, longest match first.
  std::optional<Polynomial> split_product(const std::string& name) const {
    Polynomial acc = Polynomial::from_int(ring_, 1);
    std::size_t i = 0;
    while (i < name.size()) {
      std::size_t best = 0;
      std::size_t best_index = 0;
      for (std::size_t v = 0; v < ring_->num_variables(); ++v) {
        const auto& var = ring_->variables()[v];
        if (var.size() > best && name.compare(i, var.size(), var) == 0) {
          best = var.size();
          best_index = v;
        }
      }
      if (best == 0) return std::nullopt;
      acc = acc * Polynomial::variable(ring_, best_index);
      i += best;
    }
    return acc;
  }

  Lexer& lex_;
  const RingPtr& ring_;
  const NameResolver& resolve_;
};

}  // namespace

Polynomial parse_expression(Lexer& lexer, const RingPtr& ring, const NameResolver& resolve) {
  return ExpressionParser(lexer, ring, resolve).expression();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const NameResolver& resolve) {
  Lexer lexer(text);
  Polynomial p = parse_expression(lexer, ring, resolve);
  if (!lexer.at_end()) lexer.fail("unexpected token after expression");
  return p;
}

}  // namespace rootclosure
