#pragma once

#include "liouville/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace liouville {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr unsigned kMaxTotalDegree = 255;

/// Exponent tuple packed one byte per variable, variable 0 in the most
/// significant byte. Comparison is graded lexicographic: total degree first,
/// then lexicographic with x1 most significant.
class Polynomial;

class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned exponent(std::size_t index) const {
    return static_cast<unsigned>((bits_ >> shift(index)) & 0xFFu);
  }
  // Byte sum; valid because total degree never exceeds 255.
  unsigned degree() const { return static_cast<unsigned>((bits_ * 0x0101010101010101ull) >> 56); }
  bool is_one() const { return bits_ == 0; }
  /// Divides by x_index; requires exponent(index) ≥ 1.
  Monomial lowered(std::size_t index) const;
  std::uint64_t packed() const { return bits_; }

  /// Product of monomials; throws std::overflow_error past kMaxTotalDegree.
  friend Monomial operator*(Monomial lhs, Monomial rhs);

  friend bool operator==(Monomial lhs, Monomial rhs) { return lhs.bits_ == rhs.bits_; }
  friend std::strong_ordering operator<=>(Monomial lhs, Monomial rhs) {
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
    return lhs.bits_ <=> rhs.bits_;
  }

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr unsigned shift(std::size_t index) { return 56u - 8u * static_cast<unsigned>(index); }
  friend class Polynomial;
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept in descending graded-lex order with no zero coefficients,
/// so two polynomials are equal exactly when their term lists are equal.
class Polynomial {
 public:
  /// The zero polynomial in `num_vars` variables.
  explicit Polynomial(std::size_t num_vars);

  static Polynomial constant(std::size_t num_vars, const Rational& value);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  /// Σ coefficients[i]·x_i + constant_term.
  static Polynomial linear(std::span<const Rational> coefficients, const Rational& constant_term = Rational());
  /// Merges duplicate monomials and drops zeros.
  static Polynomial from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; −1 for the zero polynomial.
  int degree() const;
  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient(Monomial()); }
  /// Keeps only the terms of the given total degree.
  Polynomial homogeneous_part(unsigned degree) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Graded-lex text form: `c * x1^e1 x3^e3 + ...`, variables with zero
  /// exponent omitted, later negative terms joined with " - ", "0" for the
  /// zero polynomial.
  std::string to_string() const;

 private:
  Polynomial(std::size_t num_vars, std::vector<Term> sorted_terms)
      : num_vars_(num_vars), terms_(std::move(sorted_terms)) {}

  std::size_t num_vars_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

class PolyMap;

/// z ↦ p(g(z)). Requires p.num_vars() == g.size().
Polynomial substitute(const Polynomial& p, const PolyMap& g);

/// A polynomial self-map (or, more generally, map Q^num_vars → Q^size).
class PolyMap {
 public:
  PolyMap(std::size_t num_vars, std::vector<Polynomial> components);

  static PolyMap identity(std::size_t num_vars);
  /// z ↦ M z + t; `matrix` is row-major with `translation.size()` rows.
  static PolyMap affine(const std::vector<std::vector<Rational>>& matrix, std::span<const Rational> translation);
  static PolyMap translation(std::span<const Rational> offset);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }

  std::vector<Rational> operator()(std::span<const Rational> point) const;
  std::vector<double> evaluate(std::span<const double> point) const;

  int degree() const;
  /// Every component has degree ≤ 1 and zero constant term.
  bool is_linear() const;
  /// Degree-one part as a row-major matrix (entry (i, j) = coefficient of x_j in component i).
  std::vector<std::vector<Rational>> linear_coefficients() const;
  std::vector<Rational> constant_terms() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::size_t num_vars_;
  std::vector<Polynomial> components_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// (outer ∘ inner)(z) = outer(inner(z)).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Entry (i, j) = ∂g_i/∂x_j.
PolyMatrix jacobian(const PolyMap& g);

}  // namespace liouville
