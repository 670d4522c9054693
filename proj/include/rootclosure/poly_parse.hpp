#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootclosure/polynomial.hpp"

namespace rootclosure {

struct Token {
  enum class Kind { Identifier, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Tokenizer shared by the expression and script parsers. Skips whitespace,
// '#' comments and '//' comments.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek(std::size_t ahead) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_symbol(std::string_view sym) const;
  bool is_keyword(std::string_view word) const;
  // Consumes the symbol if present.
  bool accept(std::string_view sym);
  // Consumes the symbol or throws SyntaxError.
  Token expect(std::string_view sym);
  Token expect_identifier(std::string_view what);
  Token expect_number(std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Resolves identifiers that are neither ring variables nor the field
// generator (for example script let-bindings).
using NameResolver = std::function<std::optional<Polynomial>(const std::string&)>;

// Parses one polynomial expression from the lexer, stopping before the first
// token that cannot continue it (',', ')', ';', ...). The script keyword
// "in" never starts an implicit product.
Polynomial parse_expression(Lexer& lexer, const RingPtr& ring, const NameResolver& resolve = {});

// Parses a whole string as one polynomial.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const NameResolver& resolve = {});

}  // namespace rootclosure
