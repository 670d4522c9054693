#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rootclosure/ideal.hpp"
#include "rootclosure/poly_parse.hpp"

namespace rootclosure {

struct IdealDecl {
  std::string ring;
  Ideal ideal;
};

struct ElementDecl {
  std::string ring;
  Polynomial element;
};

// NAME(arg, ...); arguments are names or integer literals.
struct ScriptCommand {
  std::string name;
  std::vector<std::string> args;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SessionScript {
  std::map<std::string, QuotientPtr> rings;
  std::map<std::string, IdealDecl> ideals;
  std::map<std::string, ElementDecl> elements;
  std::vector<ScriptCommand> commands;

  // Throw UndeclaredNameError (position 0:0) for unknown names.
  const QuotientPtr& ring(const std::string& name) const;
  const IdealDecl& ideal(const std::string& name) const;
  // Parses text in the named ring; let-bindings of that ring resolve by name.
  Polynomial parse_element(std::string_view text, const std::string& ring_name) const;
  NameResolver resolver(const std::string& ring_name) const;
};

// script  := stmt*
// stmt    := ring NAME = field [ var (:|; weight)?, ... ] (/ (poly, ...))? ;
//          | ideal NAME = (poly, ...) in NAME ;
//          | let NAME = poly (in NAME)? ;
//          | NAME ( arg, ... ) ;
// field   := GF(p) | GF(p^k) | GF(p^k, poly) | QQ
// A let without "in" uses the most recently declared ring. GF(p^k) without a
// polynomial uses the first monic irreducible one in coefficient order, with
// generator w.
SessionScript parse_script(std::string_view text);

// One ring in declaration syntax without the "ring NAME =" prefix, as
// printed by PresentedRing::description().
QuotientPtr parse_ring(std::string_view text);

Field parse_field(Lexer& lexer);

// Monic irreducible of degree k over F_p, first in counting order of the
// coefficient vector (degree 0 first).
std::vector<std::uint32_t> default_minimal_polynomial(std::uint32_t p, unsigned k);

}  // namespace rootclosure
