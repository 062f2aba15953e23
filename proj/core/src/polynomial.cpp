#include "liouville/polynomial.hpp"

#include "liouville/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace liouville {

namespace {

void check_num_vars(std::size_t num_vars) {
  if (num_vars == 0 || num_vars > kMaxVariables) {
    throw ArgumentError("Polynomial: number of variables must be in [1, " + std::to_string(kMaxVariables) +
                        "], got " + std::to_string(num_vars));
  }
}

void check_same_vars(const Polynomial& a, const Polynomial& b, const char* what) {
  if (a.num_vars() != b.num_vars()) {
    throw ArgumentError(std::string(what) + ": variable count mismatch (" + std::to_string(a.num_vars()) + " vs " +
                        std::to_string(b.num_vars()) + ")");
  }
}

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw ArgumentError("Monomial: too many variables");
  std::uint64_t bits = 0;
  unsigned total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    total += exponents[i];
    if (total > kMaxTotalDegree) throw std::overflow_error("Monomial: total degree exceeds 255");
    bits |= static_cast<std::uint64_t>(exponents[i]) << shift(i);
  }
  return Monomial(bits);
}

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVariables) throw ArgumentError("Monomial: variable index out of range");
  if (exponent > kMaxTotalDegree) throw std::overflow_error("Monomial: total degree exceeds 255");
  return Monomial(static_cast<std::uint64_t>(exponent) << shift(index));
}

Monomial Monomial::lowered(std::size_t index) const {
  if (exponent(index) == 0) throw ArgumentError("Monomial::lowered: exponent already zero");
  return Monomial(bits_ - (std::uint64_t{1} << shift(index)));
}

Monomial operator*(Monomial lhs, Monomial rhs) {
  if (lhs.degree() + rhs.degree() > kMaxTotalDegree) {
    throw std::overflow_error("Monomial: total degree exceeds 255");
  }
  return Monomial(lhs.bits_ + rhs.bits_);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t num_vars) : num_vars_(num_vars) { check_num_vars(num_vars); }

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& value) {
  Polynomial p(num_vars);
  if (!value.is_zero()) p.terms_.push_back(Term{Monomial(), value});
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Polynomial p(num_vars);
  if (index >= num_vars) throw ArgumentError("Polynomial::variable: index out of range");
  p.terms_.push_back(Term{Monomial::variable(index), Rational(1)});
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> coefficients, const Rational& constant_term) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) terms.push_back(Term{Monomial::variable(i), coefficients[i]});
  }
  if (!constant_term.is_zero()) terms.push_back(Term{Monomial(), constant_term});
  check_num_vars(coefficients.size());
  std::sort(terms.begin(), terms.end(), descending);
  return Polynomial(coefficients.size(), std::move(terms));
}

Polynomial Polynomial::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  check_num_vars(num_vars);
  for (const auto& t : terms) {
    for (std::size_t i = num_vars; i < kMaxVariables; ++i) {
      if (t.monomial.exponent(i) != 0) throw ArgumentError("Polynomial: monomial uses a variable out of range");
    }
  }
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
  return Polynomial(num_vars, std::move(merged));
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().monomial.degree());
}

Rational Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational();
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) kept.push_back(t);
  }
  return Polynomial(num_vars_, std::move(kept));
}

namespace {

template <typename Scalar>
std::vector<std::vector<Scalar>> power_table(const std::vector<Term>& terms, std::span<const Scalar> point) {
  std::vector<unsigned> max_exp(point.size(), 0);
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < point.size(); ++i) max_exp[i] = std::max(max_exp[i], t.monomial.exponent(i));
  }
  std::vector<std::vector<Scalar>> table(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    table[i].reserve(max_exp[i] + 1);
    table[i].push_back(Scalar(1));
    for (unsigned k = 1; k <= max_exp[i]; ++k) table[i].push_back(table[i].back() * point[i]);
  }
  return table;
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw ArgumentError("Polynomial::evaluate: dimension mismatch");
  const auto table = power_table(terms_, point);
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class value = t.coefficient.value();
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (const unsigned e = t.monomial.exponent(i); e != 0) value *= table[i][e].value();
    }
    sum += value;
  }
  return Rational(std::move(sum));
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_) throw ArgumentError("Polynomial::evaluate: dimension mismatch");
  const auto table = power_table(terms_, point);
  double sum = 0.0;
  for (const auto& t : terms_) {
    double value = t.coefficient.to_double();
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (const unsigned e = t.monomial.exponent(i); e != 0) value *= table[i][e];
    }
    sum += value;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_vars(*this, rhs, "Polynomial::operator+");
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->monomial > b->monomial) {
      out.push_back(std::move(*a++));
    } else if (b->monomial > a->monomial) {
      out.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (!c.is_zero()) out.push_back(Term{a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != rhs.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  check_same_vars(lhs, rhs, "Polynomial::operator*");
  Polynomial result(lhs.num_vars_);
  if (lhs.is_zero() || rhs.is_zero()) return result;
  if (lhs.degree() + rhs.degree() > static_cast<int>(kMaxTotalDegree)) {
    throw std::overflow_error("Polynomial::operator*: product degree exceeds 255");
  }
  if (lhs.size() == 1 && lhs.terms_[0].monomial.is_one()) return rhs * lhs.terms_[0].coefficient;
  if (rhs.size() == 1 && rhs.terms_[0].monomial.is_one()) return lhs * rhs.terms_[0].coefficient;

  // Clear denominators so the inner loop is integer multiply-add only.
  auto integer_form = [](const std::vector<Term>& terms, mpz_class& common) {
    common = 1;
    for (const auto& t : terms) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), t.coefficient.value().get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(terms.size());
    for (const auto& t : terms) {
      mpz_class scale = common / t.coefficient.value().get_den();
      ints.emplace_back(t.coefficient.value().get_num() * scale);
    }
    return ints;
  };
  mpz_class den_l, den_r;
  const auto ints_l = integer_form(lhs.terms_, den_l);
  const auto ints_r = integer_form(rhs.terms_, den_r);

  std::unordered_map<std::uint64_t, mpz_class> acc;
  acc.reserve(std::min<std::size_t>(lhs.size() * rhs.size(), 1u << 20));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const std::uint64_t mi = lhs.terms_[i].monomial.packed();
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      // Degree bound checked above, so packed addition cannot carry.
      mpz_addmul(acc[mi + rhs.terms_[j].monomial.packed()].get_mpz_t(), ints_l[i].get_mpz_t(),
                 ints_r[j].get_mpz_t());
    }
  }
  const mpz_class den = den_l * den_r;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [bits, c] : acc) {
    if (sgn(c) != 0) terms.push_back(Term{Monomial(bits), Rational(c, den)});
  }
  std::sort(terms.begin(), terms.end(), descending);
  return Polynomial(lhs.num_vars_, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      os << t.coefficient.to_string();
    } else if (t.coefficient.sign() < 0) {
      os << " - " << (-t.coefficient).to_string();
    } else {
      os << " + " << t.coefficient.to_string();
    }
    first = false;
    if (t.monomial.is_one()) continue;
    os << " *";
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (const unsigned e = t.monomial.exponent(i); e != 0) os << " x" << (i + 1) << '^' << e;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.num_vars(), Rational(1));
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.num_vars()) {
    throw ArgumentError("partial_derivative: index " + std::to_string(index) + " out of range for " +
                        std::to_string(p.num_vars()) + " variables");
  }
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (const unsigned e = t.monomial.exponent(index); e != 0) {
      terms.push_back(Term{t.monomial.lowered(index), t.coefficient * Rational(e)});
    }
  }
  return Polynomial::from_terms(p.num_vars(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Horner evaluation in the polynomial ring, one variable at a time:
// p = Σ_k x_v^k p_k(x_{v+1}, ...) = (((p_K) g_v + p_{K-1}) g_v + ...) + p_0.
Polynomial horner(std::span<const Term> terms, std::size_t var, const PolyMap& g) {
  const std::size_t out_vars = g.num_vars();
  if (var == g.size()) {
    Rational c;
    for (const auto& t : terms) c += t.coefficient;
    return Polynomial::constant(out_vars, c);
  }
  std::map<unsigned, std::vector<Term>, std::greater<>> groups;
  for (const auto& t : terms) groups[t.monomial.exponent(var)].push_back(t);

  Polynomial acc(out_vars);
  unsigned current = groups.begin()->first;
  for (const auto& [e, group] : groups) {
    while (current > e) {
      acc = acc * g[var];
      --current;
    }
    acc += horner(group, var + 1, g);
  }
  while (current > 0) {
    acc = acc * g[var];
    --current;
  }
  return acc;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const PolyMap& g) {
  if (p.num_vars() != g.size()) {
    throw ArgumentError("substitute: polynomial has " + std::to_string(p.num_vars()) + " variables but map has " +
                        std::to_string(g.size()) + " components");
  }
  if (p.is_zero()) return Polynomial(g.num_vars());
  return horner(p.terms(), 0, g);
}

// ---------------------------------------------------------------------------
// PolyMap

PolyMap::PolyMap(std::size_t num_vars, std::vector<Polynomial> components)
    : num_vars_(num_vars), components_(std::move(components)) {
  check_num_vars(num_vars);
  for (const auto& c : components_) {
    if (c.num_vars() != num_vars_) throw ArgumentError("PolyMap: component variable count mismatch");
  }
}

PolyMap PolyMap::identity(std::size_t num_vars) {
  std::vector<Polynomial> comps;
  comps.reserve(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) comps.push_back(Polynomial::variable(num_vars, i));
  return PolyMap(num_vars, std::move(comps));
}

PolyMap PolyMap::affine(const std::vector<std::vector<Rational>>& matrix, std::span<const Rational> translation) {
  if (matrix.size() != translation.size() || matrix.empty()) throw ArgumentError("PolyMap::affine: shape mismatch");
  const std::size_t cols = matrix.front().size();
  std::vector<Polynomial> comps;
  comps.reserve(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != cols) throw ArgumentError("PolyMap::affine: ragged matrix");
    comps.push_back(Polynomial::linear(matrix[i], translation[i]));
  }
  return PolyMap(cols, std::move(comps));
}

PolyMap PolyMap::translation(std::span<const Rational> offset) {
  std::vector<Polynomial> comps;
  comps.reserve(offset.size());
  for (std::size_t i = 0; i < offset.size(); ++i) {
    comps.push_back(Polynomial::variable(offset.size(), i) + Polynomial::constant(offset.size(), offset[i]));
  }
  return PolyMap(offset.size(), std::move(comps));
}

std::vector<Rational> PolyMap::operator()(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

std::vector<double> PolyMap::evaluate(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

int PolyMap::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool PolyMap::is_linear() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& c) { return c.degree() <= 1 && c.constant_term().is_zero(); });
}

std::vector<std::vector<Rational>> PolyMap::linear_coefficients() const {
  std::vector<std::vector<Rational>> m(components_.size(), std::vector<Rational>(num_vars_));
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = 0; j < num_vars_; ++j) m[i][j] = components_[i].coefficient(Monomial::variable(j));
  }
  return m;
}

std::vector<Rational> PolyMap::constant_terms() const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.constant_term());
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.num_vars() != inner.size()) {
    throw ArgumentError("compose: outer map expects " + std::to_string(outer.num_vars()) + " inputs, inner map has " +
                        std::to_string(inner.size()) + " outputs");
  }
  std::vector<Polynomial> comps;
  comps.reserve(outer.size());
  for (const auto& c : outer.components()) comps.push_back(substitute(c, inner));
  return PolyMap(inner.num_vars(), std::move(comps));
}

PolyMatrix jacobian(const PolyMap& g) {
  PolyMatrix j;
  j.reserve(g.size());
  for (const auto& c : g.components()) {
    std::vector<Polynomial> row;
    row.reserve(g.num_vars());
    for (std::size_t k = 0; k < g.num_vars(); ++k) row.push_back(partial_derivative(c, k));
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace liouville
