#include <algorithm>
#include <functional>

#include "rootclosure/errors.hpp"
#include "rootclosure/ideal.hpp"

namespace rootclosure {

Ideal::Ideal(QuotientPtr ring, const std::vector<Polynomial>& generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators) {
    Polynomial r = ring_->reduce(g);
    if (r.is_zero()) continue;
    if (std::find(generators_.begin(), generators_.end(), r) != generators_.end()) continue;
    generators_.push_back(std::move(r));
  }
}

bool Ideal::is_monomial() const {
  if (!ring_->is_polynomial_ring()) return false;
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

const GroebnerBasis& Ideal::basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) {
    std::vector<Polynomial> gens = generators_;
    for (const auto& d : ring_->relation_basis().generators()) gens.push_back(d);
    cache_->basis = buchberger(base(), gens);
  }
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!f.ring()->same_as(*base())) throw MixedRingError();
  const GroebnerBasis& gb = basis();
  if (gb.size() == 0) return f;
  return remainder(f, gb.generators());
}

std::optional<LinearForm> Ideal::express(const Polynomial& f) const {
  if (!f.ring()->same_as(*base())) throw MixedRingError();
  const GroebnerBasis* gb;
  {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->lifted) {
      std::vector<Polynomial> src = generators_;
      for (const auto& d : ring_->relations()) src.push_back(d);
      cache_->lifted = buchberger(base(), src, {.track_lift = true});
    }
    gb = &*cache_->lifted;
  }
  ReductionTrace trace = rootclosure::normal_form(f, *gb, true);
  if (!trace.remainder.is_zero()) return std::nullopt;
  auto cof = source_cofactors(trace, *gb);
  LinearForm out;
  out.generator_coeffs.assign(cof.begin(), cof.begin() + static_cast<std::ptrdiff_t>(generators_.size()));
  out.relation_coeffs.assign(cof.begin() + static_cast<std::ptrdiff_t>(generators_.size()), cof.end());
  return out;
}

Ideal::PowerData& Ideal::power_data(unsigned n) const {
  auto& powers = cache_->powers;
  if (powers.size() <= n) powers.resize(n + 1);
  if (!powers[n]) {
    auto data = std::make_unique<PowerData>();
    const auto g = static_cast<std::uint32_t>(generators_.size());
    std::vector<std::uint32_t> current;
    std::function<void(std::uint32_t, unsigned)> rec = [&](std::uint32_t start, unsigned left) {
      if (left == 0) {
        data->multisets.push_back(current);
        return;
      }
      for (std::uint32_t i = start; i < g; ++i) {
        current.push_back(i);
        rec(i, left - 1);
        current.pop_back();
      }
    };
    rec(0, n);
    for (const auto& ms : data->multisets) {
      Polynomial p = ring_->one();
      for (auto idx : ms) p = p * generators_[idx];
      data->products.push_back(std::move(p));
    }
    powers[n] = std::move(data);
  }
  return *powers[n];
}

const std::vector<std::vector<std::uint32_t>>& Ideal::power_multisets(unsigned n) const {
  std::lock_guard lock(cache_->mutex);
  return power_data(n).multisets;
}

const std::vector<Polynomial>& Ideal::power_products(unsigned n) const {
  std::lock_guard lock(cache_->mutex);
  return power_data(n).products;
}

const GroebnerBasis& Ideal::power_basis(unsigned n) const {
  std::lock_guard lock(cache_->mutex);
  PowerData& data = power_data(n);
  if (!data.basis) {
    std::vector<Polynomial> gens = data.products;
    for (const auto& d : ring_->relation_basis().generators()) gens.push_back(d);
    data.basis = buchberger(base(), gens);
  }
  return *data.basis;
}

Polynomial Ideal::power_normal_form(const Polynomial& f, unsigned n) const {
  if (!f.ring()->same_as(*base())) throw MixedRingError();
  if (n == 1) return normal_form(f);
  const GroebnerBasis& gb = power_basis(n);
  if (gb.size() == 0) return f;
  return remainder(f, gb.generators());
}

bool Ideal::power_contains(const Polynomial& f, unsigned n) const { return power_normal_form(f, n).is_zero(); }

std::optional<PowerExpression> Ideal::express_in_power(const Polynomial& f, unsigned n) const {
  if (!f.ring()->same_as(*base())) throw MixedRingError();
  const GroebnerBasis* gb;
  const std::vector<std::vector<std::uint32_t>>* multisets;
  {
    std::lock_guard lock(cache_->mutex);
    PowerData& data = power_data(n);
    if (!data.lifted) {
      std::vector<Polynomial> src = data.products;
      for (const auto& d : ring_->relations()) src.push_back(d);
      data.lifted = buchberger(base(), src, {.track_lift = true});
    }
    gb = &*data.lifted;
    multisets = &data.multisets;
  }
  ReductionTrace trace = rootclosure::normal_form(f, *gb, true);
  if (!trace.remainder.is_zero()) return std::nullopt;
  auto cof = source_cofactors(trace, *gb);
  PowerExpression out;
  const std::size_t p = multisets->size();
  for (std::size_t k = 0; k < p; ++k) {
    if (!cof[k].is_zero()) out.products.push_back({(*multisets)[k], cof[k]});
  }
  out.relation_coeffs.assign(cof.begin() + static_cast<std::ptrdiff_t>(p), cof.end());
  return out;
}

std::string Ideal::to_string() const {
  return rootclosure::to_string(generators_);
}

}  // namespace rootclosure
