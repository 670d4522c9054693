#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace rootclosure {

// Residue coordinates of a finite-field element: coefficients of 1, z, z^2, z^3
// in F_p[z]/(minimal polynomial). Prime-field elements use slot 0 only.
using Residues = std::array<std::uint32_t, 4>;

// A coefficient. Its meaning depends on the Field that owns it; Scalars are
// only ever combined through Field member functions.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const Residues& residues) : value_(residues) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const Residues& residues() const { return std::get<Residues>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<Residues, mpq_class> value_;
};

// Coefficient field: F_p, F_p[z]/(m(z)) with deg m in [2, 4], or Q.
class Field {
 public:
  enum class Kind { Prime, Extension, Rationals };

  // Throws InvalidFieldError if p is not a prime below 2^31.
  static Field prime(std::uint32_t p);
  // minimal_polynomial holds coefficients from degree 0 upward and is made
  // monic. Throws InvalidFieldError if it is reducible over F_p.
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> minimal_polynomial,
                         std::string generator_name = "w");
  static Field rationals();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::Rationals; }
  std::uint32_t characteristic() const { return p_; }
  unsigned extension_degree() const { return degree_; }
  const std::vector<std::uint32_t>& minimal_polynomial() const { return minpoly_; }
  const std::string& generator_name() const { return generator_; }
  // Number of elements; nullopt for Q or when it exceeds 2^64.
  std::optional<std::uint64_t> size() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  // Decimal integer literal of any length.
  Scalar from_integer_string(const std::string& digits) const;
  // The class of z in an extension field.
  Scalar generator() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  // Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, unsigned long long n) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  // True for negative rationals; finite fields have no sign.
  bool is_negative(const Scalar& a) const;

  // Canonical text: "3", "-1/2", "w^2 + 1".
  std::string to_string(const Scalar& a) const;
  // Field description in script syntax: "GF(2)", "GF(2^2, w^2 + w + 1)", "QQ".
  std::string description() const;

  // Every element in canonical counting order (finite fields only).
  std::vector<Scalar> elements() const;
  // Index of an element in elements() order (finite fields only).
  std::uint64_t ordinal(const Scalar& a) const;

  bool embeds_into(const Field& target) const;
  // Throws NoEmbeddingError when !embeds_into(target).
  Scalar embed(const Scalar& a, const Field& target) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  Field() = default;

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
  unsigned degree_ = 1;
  std::vector<std::uint32_t> minpoly_;
  std::string generator_;
};

bool is_prime(std::uint64_t n);

// Irreducibility over F_p for monic polynomials of degree <= 4 (coefficients
// from degree 0 upward).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace rootclosure
