#include "rootclosure/field.hpp"

#include <stdexcept>

#include "rootclosure/errors.hpp"

namespace rootclosure {
namespace {

using Coeffs = std::vector<std::uint64_t>;  // F_p polynomial, degree 0 upward

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Remainder of a modulo f (f nonzero).
Coeffs poly_mod(Coeffs a, const Coeffs& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod f, by repeated p-th powering.
Coeffs frobenius_power(const Coeffs& f, std::uint64_t p, unsigned i) {
  Coeffs x = poly_mod(Coeffs{0, 1}, f, p);
  for (unsigned step = 0; step < i; ++step) {
    Coeffs result{1};
    Coeffs base = x;
    std::uint64_t e = p;
    while (e > 0) {
      if (e & 1U) result = poly_mul_mod(result, base, f, p);
      base = poly_mul_mod(base, base, f, p);
      e >>= 1U;
    }
    x = std::move(result);
  }
  return x;
}

Residues to_residues(const Coeffs& c) {
  Residues r{};
  for (std::size_t i = 0; i < c.size() && i < r.size(); ++i) r[i] = static_cast<std::uint32_t>(c[i]);
  return r;
}

Coeffs from_residues(const Residues& r, unsigned degree) {
  Coeffs c(r.begin(), r.begin() + degree);
  trim(c);
  return c;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  Coeffs f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  if (degree == 1) return true;
  // A reducible f has a factor of degree d <= deg/2, and such factors divide
  // x^(p^d) - x.
  for (unsigned d = 1; d <= degree / 2; ++d) {
    Coeffs h = frobenius_power(f, p, d);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (poly_gcd(f, h, p).size() > 1) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw InvalidFieldError(InvalidFieldError::Reason::NotPrime,
                            "GF modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  f.degree_ = 1;
  return f;
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> minimal_polynomial,
                       std::string generator_name) {
  Field base = prime(p);
  for (auto& c : minimal_polynomial) c %= p;
  while (!minimal_polynomial.empty() && minimal_polynomial.back() == 0) minimal_polynomial.pop_back();
  if (minimal_polynomial.size() < 3 || minimal_polynomial.size() > 5) {
    throw InvalidFieldError(InvalidFieldError::Reason::BadDegree,
                            "extension degree must be between 2 and 4");
  }
  const std::uint64_t lead_inv = inv_mod(minimal_polynomial.back(), p);
  for (auto& c : minimal_polynomial) c = static_cast<std::uint32_t>(c * lead_inv % p);
  if (!is_irreducible_mod_p(minimal_polynomial, p)) {
    throw InvalidFieldError(InvalidFieldError::Reason::Reducible,
                            "minimal polynomial is reducible over GF(" + std::to_string(p) + ")");
  }
  Field f = base;
  f.kind_ = Kind::Extension;
  f.degree_ = static_cast<unsigned>(minimal_polynomial.size() - 1);
  f.minpoly_ = std::move(minimal_polynomial);
  f.generator_ = std::move(generator_name);
  return f;
}

Field Field::rationals() { return Field(); }

std::optional<std::uint64_t> Field::size() const {
  if (!is_finite()) return std::nullopt;
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    q *= p_;
    if (q > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

Scalar Field::zero() const { return is_finite() ? Scalar(Residues{}) : Scalar(mpq_class(0)); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (!is_finite()) return Scalar(mpq_class(static_cast<long>(value)));
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Residues{static_cast<std::uint32_t>(r), 0, 0, 0});
}

Scalar Field::from_integer_string(const std::string& digits) const {
  mpz_class z(digits, 10);
  if (!is_finite()) return Scalar(mpq_class(z));
  mpz_class r = z % p_;
  if (r < 0) r += p_;
  return Scalar(Residues{static_cast<std::uint32_t>(r.get_ui()), 0, 0, 0});
}

Scalar Field::generator() const {
  if (kind_ != Kind::Extension) throw std::logic_error("field has no generator");
  return Scalar(Residues{0, 1, 0, 0});
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (!is_finite()) return Scalar(mpq_class(a.rational() + b.rational()));
  Residues r{};
  for (unsigned i = 0; i < degree_; ++i) {
    r[i] = static_cast<std::uint32_t>((std::uint64_t{a.residues()[i]} + b.residues()[i]) % p_);
  }
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (!is_finite()) return Scalar(mpq_class(-a.rational()));
  Residues r{};
  for (unsigned i = 0; i < degree_; ++i) r[i] = a.residues()[i] == 0 ? 0 : p_ - a.residues()[i];
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(a.rational() * b.rational()));
    case Kind::Prime:
      return Scalar(Residues{
          static_cast<std::uint32_t>(std::uint64_t{a.residues()[0]} * b.residues()[0] % p_), 0, 0, 0});
    case Kind::Extension:
      break;
  }
  const Coeffs f(minpoly_.begin(), minpoly_.end());
  return Scalar(to_residues(
      poly_mul_mod(from_residues(a.residues(), degree_), from_residues(b.residues(), degree_), f, p_)));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(mpq_class(1 / a.rational()));
    case Kind::Prime:
      return Scalar(Residues{static_cast<std::uint32_t>(inv_mod(a.residues()[0], p_)), 0, 0, 0});
    case Kind::Extension:
      break;
  }
  // Extended Euclid in F_p[z]: s*a + t*m = 1.
  const std::uint64_t p = p_;
  Coeffs r0(minpoly_.begin(), minpoly_.end());
  Coeffs r1 = from_residues(a.residues(), degree_);
  Coeffs s0{}, s1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    Coeffs rem = r0;
    Coeffs q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
    const std::uint64_t lead_inv = inv_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const std::uint64_t c = rem.back() * lead_inv % p;
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + p - c * r1[i] % p) % p;
      trim(rem);
    }
    // s2 = s0 - q*s1
    Coeffs qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
    }
    Coeffs s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const std::uint64_t x = i < s0.size() ? s0[i] : 0;
      const std::uint64_t y = i < qs.size() ? qs[i] : 0;
      s2[i] = (x + p - y) % p;
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t c = inv_mod(r0[0], p);
  for (auto& v : s0) v = v * c % p;
  return Scalar(to_residues(poly_mod(s0, Coeffs(minpoly_.begin(), minpoly_.end()), p)));
}

Scalar Field::pow(const Scalar& a, unsigned long long n) const {
  Scalar result = one();
  Scalar base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

bool Field::is_zero(const Scalar& a) const {
  if (!is_finite()) return a.rational() == 0;
  return a.residues() == Residues{};
}

bool Field::is_one(const Scalar& a) const {
  if (!is_finite()) return a.rational() == 1;
  return a.residues() == Residues{1, 0, 0, 0};
}

bool Field::is_negative(const Scalar& a) const { return !is_finite() && sgn(a.rational()) < 0; }

std::string Field::to_string(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a.rational().get_str();
    case Kind::Prime:
      return std::to_string(a.residues()[0]);
    case Kind::Extension:
      break;
  }
  std::string out;
  for (int i = static_cast<int>(degree_) - 1; i >= 0; --i) {
    const std::uint32_t c = a.residues()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(c);
    } else {
      term = c == 1 ? std::string() : std::to_string(c) + "*";
      term += generator_;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string Field::description() const {
  switch (kind_) {
    case Kind::Rationals:
      return "QQ";
    case Kind::Prime:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::Extension:
      break;
  }
  std::string poly;
  for (int i = static_cast<int>(degree_); i >= 0; --i) {
    const std::uint32_t c = minpoly_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(c);
    } else {
      term = c == 1 ? std::string() : std::to_string(c) + "*";
      term += generator_;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!poly.empty()) poly += " + ";
    poly += term;
  }
  return "GF(" + std::to_string(p_) + "^" + std::to_string(degree_) + ", " + poly + ")";
}

std::vector<Scalar> Field::elements() const {
  const auto q = size();
  if (!q) throw NotEnumerableError("field is not finite or too large to enumerate");
  std::vector<Scalar> out;
  out.reserve(*q);
  for (std::uint64_t n = 0; n < *q; ++n) {
    Residues r{};
    std::uint64_t rest = n;
    for (unsigned i = 0; i < degree_; ++i) {
      r[i] = static_cast<std::uint32_t>(rest % p_);
      rest /= p_;
    }
    out.emplace_back(r);
  }
  return out;
}

std::uint64_t Field::ordinal(const Scalar& a) const {
  std::uint64_t n = 0;
  for (int i = static_cast<int>(degree_) - 1; i >= 0; --i) n = n * p_ + a.residues()[static_cast<std::size_t>(i)];
  return n;
}

bool Field::embeds_into(const Field& target) const {
  if (*this == target) return true;
  return kind_ == Kind::Prime && target.kind_ == Kind::Extension && p_ == target.p_;
}

Scalar Field::embed(const Scalar& a, const Field& target) const {
  if (!embeds_into(target)) {
    throw NoEmbeddingError("no embedding of " + description() + " into " + target.description());
  }
  return a;  // prime-field residues sit in slot 0 of the extension
}

bool operator==(const Field& a, const Field& b) {
  return a.kind_ == b.kind_ && a.p_ == b.p_ && a.degree_ == b.degree_ && a.minpoly_ == b.minpoly_ &&
         a.generator_ == b.generator_;
}

}  // namespace rootclosure
