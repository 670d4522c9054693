#include <algorithm>
#include <stdexcept>

#include "rootclosure/closure.hpp"
#include "rootclosure/errors.hpp"

namespace rootclosure {

namespace {

using Products = std::map<std::vector<std::uint32_t>, Polynomial>;

void require_valid(const RootCertificate& c) {
  if (auto p = certificate_problem(c); !p.empty()) throw InvalidCertificateError("input certificate: " + p);
}

void accumulate(Products& out, std::vector<std::uint32_t> factors, const Polynomial& m, const PresentedRing& ring) {
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = out.try_emplace(std::move(factors), m);
  if (!inserted) it->second = ring.reduce(it->second + m);
}

Products multiply(const Products& a, const Products& b, const PresentedRing& ring) {
  Products out;
  for (const auto& [fa, ma] : a) {
    for (const auto& [fb, mb] : b) {
      std::vector<std::uint32_t> f = fa;
      f.insert(f.end(), fb.begin(), fb.end());
      accumulate(out, std::move(f), ring.reduce(ma * mb), ring);
    }
  }
  return out;
}

Products power(const Products& p, unsigned k, const PresentedRing& ring) {
  Products out{{{}, ring.one()}};
  for (unsigned step = 0; step < k; ++step) out = multiply(out, p, ring);
  return out;
}

// Index of reduce(f) among the ideal's generators; nullopt when it is zero.
std::optional<std::uint32_t> atom_index(const Polynomial& f, const Ideal& ideal) {
  const Polynomial r = ideal.ring()->reduce(f);
  if (r.is_zero()) return std::nullopt;
  const auto& gens = ideal.generators();
  auto it = std::find(gens.begin(), gens.end(), r);
  if (it == gens.end()) throw std::logic_error("image is not a generator of the target ideal");
  return static_cast<std::uint32_t>(it - gens.begin());
}

}  // namespace

RootCertificate cert_scale(const RootCertificate& c, const Polynomial& r) {
  require_valid(c);
  if (!r.ring()->same_as(*c.ideal.base())) throw MixedRingError();
  const PresentedRing& ring = *c.ideal.ring();
  const Polynomial rn = pow(r, c.exponent);
  Products products;
  for (const auto& [f, m] : c.witness.products) accumulate(products, f, ring.reduce(m * rn), ring);
  return finalize_certificate(r * c.element, c.exponent, c.ideal, std::move(products));
}

RootCertificate cert_raise(const RootCertificate& c, unsigned k) {
  if (k == 0) throw std::invalid_argument("raise needs k >= 1");
  require_valid(c);
  if (k == 1) return c;
  Products products = power(c.witness.products, k, *c.ideal.ring());
  return finalize_certificate(c.element, c.exponent * k, c.ideal, std::move(products));
}

RootCertificate cert_product(const RootCertificate& cx, const RootCertificate& cy) {
  require_same_ring(*cx.ideal.ring(), *cy.ideal.ring());
  require_valid(cx);
  require_valid(cy);
  const PresentedRing& ring = *cx.ideal.ring();
  const Ideal ij = ideal_product(cx.ideal, cy.ideal);
  const auto& gi = cx.ideal.generators();
  const auto& gj = cy.ideal.generators();
  std::vector<std::vector<std::optional<std::uint32_t>>> atoms(gi.size());
  for (std::size_t a = 0; a < gi.size(); ++a) {
    for (const auto& b : gj) atoms[a].push_back(atom_index(gi[a] * b, ij));
  }
  const unsigned n = cx.exponent * cy.exponent;
  const Products px = power(cx.witness.products, cy.exponent, ring);
  const Products py = power(cy.witness.products, cx.exponent, ring);
  Products products;
  for (const auto& [fa, ma] : px) {
    for (const auto& [fb, mb] : py) {
      std::vector<std::uint32_t> f;
      bool zero = false;
      for (std::size_t k = 0; k < n && !zero; ++k) {
        const auto atom = atoms[fa[k]][fb[k]];
        if (!atom) {
          zero = true;
        } else {
          f.push_back(*atom);
        }
      }
      if (!zero) accumulate(products, std::move(f), ring.reduce(ma * mb), ring);
    }
  }
  return finalize_certificate(cx.element * cy.element, n, ij, std::move(products));
}

RootCertificate cert_colon_transfer(const RootCertificate& c, const Ideal& i, const Ideal& j_ideal,
                                    const Polynomial& j) {
  require_same_ring(*c.ideal.ring(), *i.ring());
  require_same_ring(*i.ring(), *j_ideal.ring());
  if (!j.ring()->same_as(*i.base())) throw MixedRingError();
  require_valid(c);
  if (!j_ideal.contains(j)) throw InvalidCertificateError("j is not in J");
  const PresentedRing& ring = *i.ring();
  std::vector<std::vector<std::pair<std::uint32_t, Polynomial>>> forms;
  for (const auto& q : c.ideal.generators()) {
    auto form = i.express(q * j);
    if (!form) throw InvalidCertificateError("certificate ideal is not inside (I : J)");
    std::vector<std::pair<std::uint32_t, Polynomial>> terms;
    for (std::size_t l = 0; l < form->generator_coeffs.size(); ++l) {
      Polynomial coeff = ring.reduce(form->generator_coeffs[l]);
      if (!coeff.is_zero()) terms.emplace_back(static_cast<std::uint32_t>(l), std::move(coeff));
    }
    forms.push_back(std::move(terms));
  }
  Products products;
  for (const auto& [factors, multiplier] : c.witness.products) {
    Products partial{{{}, multiplier}};
    for (auto a : factors) {
      Products next;
      for (const auto& [f, m] : partial) {
        for (const auto& [l, coeff] : forms[a]) {
          std::vector<std::uint32_t> g = f;
          g.push_back(l);
          accumulate(next, std::move(g), ring.reduce(m * coeff), ring);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [f, m] : partial) accumulate(products, f, m, ring);
  }
  return finalize_certificate(c.element * j, c.exponent, i, std::move(products));
}

RootCertificate cert_extend_ring(const RootCertificate& c, const QuotientPtr& target,
                                 const std::vector<Polynomial>& images) {
  require_valid(c);
  const RingPtr& to = target->base();
  if (images.size() != c.ideal.base()->num_variables()) {
    throw std::invalid_argument("ring map needs one image per variable");
  }
  for (const auto& im : images) {
    if (!im.ring()->same_as(*to)) throw MixedRingError("variable image is not in the target ring");
  }
  auto phi = [&](const Polynomial& f) { return substitute(f, images, to); };
  for (const auto& d : c.ideal.ring()->relations()) {
    if (!target->is_zero(phi(d))) throw InvalidCertificateError("ring map does not respect the relations");
  }
  std::vector<Polynomial> mapped;
  for (const auto& g : c.ideal.generators()) mapped.push_back(phi(g));
  const Ideal ib(target, mapped);
  std::vector<std::optional<std::uint32_t>> atoms;
  for (const auto& g : mapped) atoms.push_back(atom_index(g, ib));
  Products products;
  for (const auto& [factors, multiplier] : c.witness.products) {
    std::vector<std::uint32_t> f;
    bool zero = false;
    for (auto a : factors) {
      if (!atoms[a]) {
        zero = true;
        break;
      }
      f.push_back(*atoms[a]);
    }
    if (!zero) accumulate(products, std::move(f), target->reduce(phi(multiplier)), *target);
  }
  return finalize_certificate(phi(c.element), c.exponent, ib, std::move(products));
}

}  // namespace rootclosure
