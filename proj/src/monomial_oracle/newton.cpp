#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "rootclosure/errors.hpp"
#include "rootclosure/monomial_oracle.hpp"

namespace rootclosure {

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

mpz_class determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const mpz_class term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

// Vector orthogonal to the d-1 rows of a (d-1) x d matrix.
std::vector<mpz_class> orthogonal(const Matrix& rows, std::size_t d) {
  std::vector<mpz_class> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix minor;
    for (const auto& row : rows) {
      std::vector<mpz_class> r;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != k) r.push_back(row[c]);
      }
      minor.push_back(std::move(r));
    }
    out[k] = determinant(minor);
    if (k % 2 == 1) out[k] = -out[k];
  }
  return out;
}

mpz_class dot(const std::vector<mpz_class>& a, const ExponentVector& v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
  return s;
}

}  // namespace

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> exponents) {
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < exponents.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = true;
      for (std::size_t k = 0; k < exponents[i].size(); ++k) le = le && exponents[j][k] <= exponents[i][k];
      dominated = le;
    }
    if (!dominated) out.push_back(exponents[i]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

NewtonPolyhedron::NewtonPolyhedron(std::vector<ExponentVector> points, std::size_t dimension)
    : dimension_(dimension) {
  if (dimension > kMaxDimension) {
    throw std::invalid_argument("Newton polyhedron supports at most " + std::to_string(kMaxDimension) + " variables");
  }
  if (points.empty()) throw std::invalid_argument("Newton polyhedron needs at least one point");
  for (const auto& p : points) {
    if (p.size() != dimension) throw std::invalid_argument("point dimension mismatch");
  }
  points_ = minimalize(std::move(points));
  const std::size_t d = dimension_;
  if (d == 0) return;
  const std::size_t np = points_.size();
  // Objects 0..np-1 are points, np..np+d-1 are the unit rays.
  std::set<std::pair<std::vector<mpz_class>, mpz_class>> seen;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (chosen.size() == d) {
      if (chosen[0] >= np) return;
      const ExponentVector& base = points_[chosen[0]];
      Matrix rows;
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<mpz_class> row(d);
        if (chosen[k] < np) {
          for (std::size_t c = 0; c < d; ++c) row[c] = mpz_class(points_[chosen[k]][c]) - mpz_class(base[c]);
        } else {
          row[chosen[k] - np] = 1;
        }
        rows.push_back(std::move(row));
      }
      std::vector<mpz_class> a = orthogonal(rows, d);
      bool any_pos = false, any_neg = false;
      for (const auto& x : a) {
        any_pos = any_pos || x > 0;
        any_neg = any_neg || x < 0;
      }
      if (!any_pos && !any_neg) return;
      if (any_pos && any_neg) return;
      if (any_neg) {
        for (auto& x : a) x = -x;
      }
      mpz_class g = 0;
      for (const auto& x : a) g = gcd(g, x);
      for (auto& x : a) x /= g;
      const mpz_class b = dot(a, base);
      for (const auto& p : points_) {
        if (dot(a, p) < b) return;
      }
      if (seen.emplace(a, b).second) halfspaces_.push_back({a, b});
      return;
    }
    for (std::size_t o = start; o < np + d; ++o) {
      chosen.push_back(o);
      choose(o + 1);
      chosen.pop_back();
    }
  };
  choose(0);
}

bool NewtonPolyhedron::contains(const ExponentVector& v) const {
  if (v.size() != dimension_) throw std::invalid_argument("point dimension mismatch");
  if (dimension_ == 0) return true;
  for (const auto& h : halfspaces_) {
    if (dot(h.normal, v) < h.rhs) return false;
  }
  return true;
}

ExponentVector exponent_vector(const Monomial& m, std::size_t num_variables) {
  return ExponentVector(m.exps.begin(), m.exps.begin() + static_cast<std::ptrdiff_t>(num_variables));
}

Polynomial monomial_from_exponents(const RingPtr& ring, const ExponentVector& e) {
  return Polynomial::term(ring, ring->field().one(), ring->monomial(e));
}

namespace {

std::vector<ExponentVector> generator_exponents(const Ideal& i) {
  if (!i.is_monomial()) throw NotMonomialError();
  std::vector<ExponentVector> out;
  for (const auto& g : i.generators()) out.push_back(exponent_vector(g.leading_monomial(), i.base()->num_variables()));
  return out;
}

template <typename Keep>
Ideal harvest_box(const Ideal& i, const std::vector<ExponentVector>& gens, Keep keep) {
  const std::size_t d = i.base()->num_variables();
  ExponentVector hi(d, 0);
  for (const auto& g : gens) {
    for (std::size_t k = 0; k < d; ++k) hi[k] = std::max(hi[k], g[k]);
  }
  std::vector<ExponentVector> found;
  ExponentVector cur(d, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == d) {
      if (keep(cur)) found.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= hi[k]; ++e) {
      cur[k] = e;
      walk(k + 1);
    }
    cur[k] = 0;
  };
  walk(0);
  std::vector<Polynomial> monos;
  for (const auto& e : minimalize(found)) monos.push_back(monomial_from_exponents(i.base(), e));
  return Ideal(i.ring(), monos);
}

}  // namespace

Ideal monomial_integral_closure(const Ideal& i) {
  const auto gens = generator_exponents(i);
  if (gens.empty()) return i;
  const NewtonPolyhedron poly(gens, i.base()->num_variables());
  return harvest_box(i, gens, [&](const ExponentVector& v) { return poly.contains(v); });
}

std::optional<unsigned> monomial_root_exponent(const ExponentVector& m, const Ideal& i, unsigned max_n) {
  const auto gens = minimalize(generator_exponents(i));
  const std::size_t d = m.size();
  // Antichain of minimal sums of k generator exponents that stay below n*m.
  for (unsigned n = 1; n <= max_n; ++n) {
    ExponentVector bound(d);
    for (std::size_t k = 0; k < d; ++k) bound[k] = m[k] * n;
    std::vector<ExponentVector> sums{ExponentVector(d, 0)};
    for (unsigned step = 0; step < n && !sums.empty(); ++step) {
      std::vector<ExponentVector> next;
      for (const auto& s : sums) {
        for (const auto& g : gens) {
          ExponentVector t(d);
          bool fits = true;
          for (std::size_t k = 0; k < d && fits; ++k) {
            t[k] = s[k] + g[k];
            fits = t[k] <= bound[k];
          }
          if (fits) next.push_back(std::move(t));
        }
      }
      sums = minimalize(std::move(next));
    }
    if (!sums.empty()) return n;
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> monomial_root_witness(const ExponentVector& m, const Ideal& i,
                                                                 unsigned n) {
  const auto gens = generator_exponents(i);
  const std::size_t d = m.size();
  ExponentVector bound(d);
  for (std::size_t k = 0; k < d; ++k) bound[k] = m[k] * n;
  // Minimal sums of `step` generators below the bound, each with one multiset.
  std::map<ExponentVector, std::vector<std::uint32_t>> states{{ExponentVector(d, 0), {}}};
  for (unsigned step = 0; step < n && !states.empty(); ++step) {
    std::map<ExponentVector, std::vector<std::uint32_t>> next;
    for (const auto& [sum, picks] : states) {
      for (std::uint32_t g = 0; g < gens.size(); ++g) {
        ExponentVector t(d);
        bool fits = true;
        for (std::size_t k = 0; k < d && fits; ++k) {
          t[k] = sum[k] + gens[g][k];
          fits = t[k] <= bound[k];
        }
        if (!fits) continue;
        std::vector<std::uint32_t> p = picks;
        p.push_back(g);
        next.try_emplace(std::move(t), std::move(p));
      }
    }
    std::map<ExponentVector, std::vector<std::uint32_t>> kept;
    for (const auto& e : minimalize([&] {
           std::vector<ExponentVector> keys;
           for (const auto& kv : next) keys.push_back(kv.first);
           return keys;
         }())) {
      kept.emplace(e, next.at(e));
    }
    states = std::move(kept);
  }
  if (states.empty()) return std::nullopt;
  auto picks = states.begin()->second;
  std::sort(picks.begin(), picks.end());
  return picks;
}

Ideal monomial_closure_bruteforce(const Ideal& i, unsigned max_n, unsigned max_degree) {
  const auto gens = generator_exponents(i);
  if (gens.empty()) return i;
  return harvest_box(i, gens, [&](const ExponentVector& v) {
    if (max_degree != 0) {
      unsigned total = 0;
      for (auto e : v) total += e;
      if (total > max_degree) return false;
    }
    return monomial_root_exponent(v, i, max_n).has_value();
  });
}

}  // namespace rootclosure
