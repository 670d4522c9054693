#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootclosure/field.hpp"

namespace rootclosure {

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector plus its cached weighted degree. Slots past the ring's
// variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exps{};
  std::uint32_t degree = 0;

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps[i] > other.exps[i]) return false;
    }
    return true;
  }
  bool is_one() const { return degree == 0 && exps == decltype(exps){}; }
  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialOrder {
  enum class Kind : std::uint8_t { DegRevLex, DegLex, Lex };
  Kind kind = Kind::DegRevLex;
  // Variables in this mask are compared first by their weighted degree; used
  // to eliminate auxiliary variables.
  std::uint32_t elimination_mask = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Variables, weights, coefficient field and monomial order of a polynomial
// ring. Immutable and shared by every polynomial that lives in it.
class PolyRing {
 public:
  // Empty weights means standard grading. Throws BadWeight-style
  // std::invalid_argument for zero weights or too many variables.
  static RingPtr create(Field field, std::vector<std::string> variables,
                        std::vector<std::uint32_t> weights = {}, MonomialOrder order = {});

  const Field& field() const { return field_; }
  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  Monomial monomial(std::span<const std::uint32_t> exponents) const;
  Monomial variable(std::size_t index, std::uint32_t power = 1) const;
  std::uint32_t degree_of(const Monomial& m) const;

  // <0, 0, >0 as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  Monomial multiply(const Monomial& a, const Monomial& b) const;
  // Requires b | a.
  Monomial divide(const Monomial& a, const Monomial& b) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial power(const Monomial& a, unsigned n) const;

  // Same ring up to identity of the object.
  bool same_as(const PolyRing& other) const;

  // Ring with one more variable (appended, or prepended when `first`).
  RingPtr with_variable(const std::string& name, std::uint32_t weight, bool first,
                        MonomialOrder order) const;
  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(Field field) const;

  std::string monomial_to_string(const Monomial& m) const;
  std::string description() const;

 private:
  PolyRing() = default;

  Field field_ = Field::rationals();
  std::vector<std::string> variables_;
  std::vector<std::uint32_t> weights_;
  std::array<std::uint32_t, kMaxVariables> weight_slots_{};
  MonomialOrder order_;
};

}  // namespace rootclosure
