#pragma once

#include "liouville/polynomial.hpp"
#include "liouville/symplectic.hpp"

#include <vector>

namespace liouville {

/// Polynomial one-form Σ_i f_i(z) dz_i on a symplectic space.
class OneForm {
 public:
  OneForm(SymplecticSpace space, std::vector<Polynomial> coefficients);

  static OneForm zero(const SymplecticSpace& space);
  /// dψ: coefficients are the partial derivatives of ψ.
  static OneForm differential(const SymplecticSpace& space, const Polynomial& psi);

  const SymplecticSpace& space() const { return space_; }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }
  const Polynomial& operator[](std::size_t i) const { return coefficients_[i]; }

  /// f_z(v) for a point z and tangent vector v.
  Rational evaluate(const Vector& z, const Vector& v) const;
  int degree() const;

  friend OneForm operator+(const OneForm& lhs, const OneForm& rhs);
  friend OneForm operator-(const OneForm& lhs, const OneForm& rhs);
  friend bool operator==(const OneForm&, const OneForm&) = default;

 private:
  SymplecticSpace space_;
  std::vector<Polynomial> coefficients_;
};

/// Polynomial two-form with antisymmetric coefficient matrix; entry (i, j) is
/// the value on (∂_i, ∂_j).
class TwoForm {
 public:
  TwoForm(SymplecticSpace space, PolyMatrix coefficients);

  /// The symplectic form ω, constant coefficients Ω(e_i, e_j).
  static TwoForm omega(const SymplecticSpace& space);

  const SymplecticSpace& space() const { return space_; }
  const PolyMatrix& coefficients() const { return coefficients_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return coefficients_[i][j]; }
  bool is_zero() const;

  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  SymplecticSpace space_;
  PolyMatrix coefficients_;
};

/// Polynomial vector field z ↦ X(z).
class VectorField {
 public:
  VectorField(SymplecticSpace space, PolyMap components);

  const SymplecticSpace& space() const { return space_; }
  const PolyMap& components() const { return components_; }

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  SymplecticSpace space_;
  PolyMap components_;
};

/// (df)(∂_i, ∂_j) = ∂f_j/∂z_i − ∂f_i/∂z_j.
TwoForm exterior_derivative(const OneForm& f);

/// (g*f)_i = Σ_j f_j(g(z)) · ∂g_j/∂z_i.
OneForm pullback(const PolyMap& g, const OneForm& f);

/// (X ⌟ β)_j = Σ_i X_i β(∂_i, ∂_j).
OneForm interior_product(const VectorField& x, const TwoForm& beta);

}  // namespace liouville
