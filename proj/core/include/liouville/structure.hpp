#pragma once

#include "liouville/forms.hpp"
#include "liouville/polynomial.hpp"
#include "liouville/symplectic.hpp"

#include <string>

namespace liouville {

enum class StructureFamily { canonical, linear, quadratic, higher };

const char* to_string(StructureFamily family);

/// The Liouville form θ^a = θ⁰ + ε·dψ^a with ψ^a(z) = (1/2d)·Ω(a, z)^d.
///
/// Degree zero or a = 0 both give the canonical structure θ⁰. The sign ε only
/// matters for even degree: for odd d, (a, −) describes the same form as (−a, +).
class LiouvilleStructure {
 public:
  LiouvilleStructure(SymplecticSpace space, Vector a, unsigned degree, Sign sign = Sign::plus);

  static LiouvilleStructure canonical(const SymplecticSpace& space);

  const SymplecticSpace& space() const { return space_; }
  const Vector& a() const { return a_; }
  unsigned degree() const { return degree_; }
  Sign sign() const { return sign_; }
  Rational epsilon() const { return Rational(to_int(sign_)); }

  bool is_canonical() const { return degree_ == 0 || a_.is_zero(); }
  StructureFamily family() const;

  std::string describe() const;

  friend bool operator==(const LiouvilleStructure&, const LiouvilleStructure&) = default;

 private:
  SymplecticSpace space_;
  Vector a_;
  unsigned degree_;
  Sign sign_;
};

/// z ↦ Ω(a, z) as a linear polynomial.
Polynomial omega_pairing(const SymplecticSpace& space, const Vector& a);

/// ψ^a(z) = ε·(1/2d)·Ω(a, z)^d; zero for the canonical structure.
Polynomial psi(const LiouvilleStructure& l);

/// θ^a_z(v) = ½Ω(z + ε·Ω(a, z)^{d−1}·a, v).
OneForm theta_form(const LiouvilleStructure& l);

/// ζ^a(z) = ½(z + ε·Ω(a, z)^{d−1}·a); satisfies ζ^a ⌟ ω = θ^a.
VectorField liouville_field(const LiouvilleStructure& l);

/// g*θ^l computed from the closed form of θ^l:
/// (g*θ^l)_i = ½Ω(g, ∂_i g) + (ε/2)·s^{d−1}·∂_i s with s = Ω(a, g).
/// Agrees with pullback(g, theta_form(l)) but never expands θ^l at g(z)
/// monomial by monomial, which keeps high-degree maps tractable.
OneForm pullback_theta(const PolyMap& g, const LiouvilleStructure& l);

}  // namespace liouville
