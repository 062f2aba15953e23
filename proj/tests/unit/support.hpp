#pragma once

// Independent reference models used as test oracles. Nothing here calls the
// library's arithmetic: polynomials are dense maps keyed by exponent vectors,
// and derivatives come from dual-number evaluation.

#include "liouville/polynomial.hpp"
#include "liouville/random.hpp"
#include "liouville/structure.hpp"
#include "liouville/symplectic.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using liouville::Rational;
using Exponents = std::vector<unsigned>;
using Dense = std::map<Exponents, mpq_class>;

inline mpq_class q(const Rational& r) { return r.value(); }

inline Dense to_dense(const liouville::Polynomial& p) {
  Dense out;
  for (const auto& t : p.terms()) {
    Exponents e(p.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.monomial.exponent(i);
    out[e] = q(t.coefficient);
  }
  return out;
}

inline void prune(Dense& d) {
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
}

inline Dense add(const Dense& x, const Dense& y) {
  Dense out = x;
  for (const auto& [e, c] : y) out[e] += c;
  prune(out);
  return out;
}

inline Dense mul(const Dense& x, const Dense& y) {
  Dense out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      Exponents e(ex.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      out[e] += cx * cy;
    }
  }
  prune(out);
  return out;
}

inline mpq_class eval(const Dense& d, const std::vector<mpq_class>& z) {
  mpq_class sum = 0;
  for (const auto& [e, c] : d) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= z[i];
    }
    sum += term;
  }
  return sum;
}

/// Value and one directional derivative, carried through term-by-term evaluation.
struct Dual {
  mpq_class v;
  mpq_class d;
};

inline Dual operator*(const Dual& x, const Dual& y) { return {x.v * y.v, x.v * y.d + x.d * y.v}; }
inline Dual operator+(const Dual& x, const Dual& y) { return {x.v + y.v, x.d + y.d}; }

inline Dual eval_dual(const liouville::Polynomial& p, const std::vector<Dual>& z) {
  Dual sum{0, 0};
  for (const auto& t : p.terms()) {
    Dual term{q(t.coefficient), 0};
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (unsigned k = 0; k < t.monomial.exponent(i); ++k) term = term * z[i];
    }
    sum = sum + term;
  }
  return sum;
}

inline mpq_class omega(std::size_t m, const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < m; ++i) s += x[i] * y[m + i] - x[m + i] * y[i];
  return s;
}

/// θ^L_z(v) straight from ½Ω(z + ε·Ω(a, z)^{d−1}·a, v).
inline mpq_class theta_value(const liouville::LiouvilleStructure& l, const std::vector<mpq_class>& z,
                             const std::vector<mpq_class>& v) {
  const std::size_t m = l.space().m();
  std::vector<mpq_class> a(z.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = q(l.a()[i]);
  std::vector<mpq_class> point = z;
  if (!l.is_canonical()) {
    mpq_class w = omega(m, a, z);
    mpq_class wk = 1;
    for (unsigned k = 0; k + 1 < l.degree(); ++k) wk *= w;
    for (std::size_t i = 0; i < z.size(); ++i) point[i] += q(l.epsilon()) * wk * a[i];
  }
  return omega(m, point, v) / 2;
}

/// (g*θ^target)_z(v) = θ^target_{g(z)}(g'_z v), with g'_z v from dual numbers.
inline mpq_class pulled_back_theta_value(const liouville::PolyMap& g, const liouville::LiouvilleStructure& target,
                                         const std::vector<mpq_class>& z, const std::vector<mpq_class>& v) {
  std::vector<Dual> zd(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) zd[i] = {z[i], v[i]};
  std::vector<mpq_class> gz(g.size()), dg(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Dual r = eval_dual(g[j], zd);
    gz[j] = r.v;
    dg[j] = r.d;
  }
  return theta_value(target, gz, dg);
}

inline std::vector<mpq_class> random_point(liouville::SampleRng& rng, std::size_t n) {
  std::vector<mpq_class> z(n);
  for (auto& x : z) x = rng.small_rational().value();
  return z;
}

inline std::vector<Rational> to_rationals(const std::vector<mpq_class>& z) {
  std::vector<Rational> out;
  for (const auto& x : z) out.emplace_back(x);
  return out;
}

/// Random polynomial with up to `terms` terms of total degree ≤ max_degree.
inline liouville::Polynomial random_polynomial(liouville::SampleRng& rng, std::size_t num_vars, unsigned max_degree,
                                               std::size_t terms) {
  std::vector<liouville::Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<unsigned> e(num_vars);
    unsigned budget = static_cast<unsigned>(rng.index(max_degree + 1));
    for (std::size_t i = 0; i < num_vars && budget > 0; ++i) {
      const auto take = static_cast<unsigned>(rng.index(budget + 1));
      e[i] = take;
      budget -= take;
    }
    ts.push_back({liouville::Monomial::from_exponents(e), rng.small_rational()});
  }
  return liouville::Polynomial::from_terms(num_vars, std::move(ts));
}

inline liouville::PolyMap random_map(liouville::SampleRng& rng, std::size_t n, unsigned max_degree, std::size_t terms) {
  std::vector<liouville::Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(random_polynomial(rng, n, max_degree, terms));
  return liouville::PolyMap(n, std::move(comps));
}

}  // namespace oracle
