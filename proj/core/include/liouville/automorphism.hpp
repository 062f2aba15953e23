#pragma once

#include "liouville/polynomial.hpp"
#include "liouville/structure.hpp"
#include "liouville/symplectic.hpp"

#include <optional>
#include <string>

namespace liouville {

/// The linear symplectic witness behind an automorphism.
struct DecompositionResult {
  LinearMap gamma;
  StructureFamily case_tag;
  /// Quadratic structures only: γa = λa with λ = ±1.
  std::optional<Rational> lambda;
};

/// {"case_tag": ..., "gamma": [[...]], "lambda": "..."}; lambda omitted when absent.
std::string to_json(const DecompositionResult& result);

/// τ_a: z ↦ z + a.
PolyMap translation_map(const SymplecticSpace& space, const Vector& a);

/// f_a: z ↦ z + (ε/n)·Ω(a, z)^{n+1}·a with n = d − 2. Pulls θ^a back to θ⁰.
/// Throws ArgumentError for d < 3.
PolyMap f_map(const SymplecticSpace& space, const Vector& a, unsigned degree, Sign sign = Sign::plus);

/// z ↦ z − (ε/n)·Ω(a, z)^{n+1}·a, the two-sided inverse of f_map (Ω(a, f_a(z)) = Ω(a, z)).
PolyMap f_map_inverse(const SymplecticSpace& space, const Vector& a, unsigned degree, Sign sign = Sign::plus);

/// The automorphism of θ^l attached to γ ∈ Sp:
///   canonical  γ
///   d = 1      z ↦ γ(z + εa) − εa
///   d = 2      γ, which must satisfy γa = ±a
///   d ≥ 3      f_a ∘ γ ∘ f_a⁻¹
/// Throws ArgumentError when γ is not symplectic and PreconditionViolation
/// when a quadratic γ moves a off {a, −a}.
PolyMap make_automorphism(const LiouvilleStructure& l, const LinearMap& gamma);

/// An isomorphism g from θ^source to θ^target (g*θ^target = θ^source):
///   d = 1      τ_b⁻¹ ∘ γ ∘ τ_a
///   d = 2      γ, with γa = ±b and equal signs
///   d ≥ 3      f_b ∘ γ ∘ f_a⁻¹
/// A canonical endpoint pairs with any linear or higher structure (its
/// normalizing map is the identity). Other degree mismatches throw
/// UnsupportedPairError; quadratic structures of opposite sign throw
/// ObstructionError.
PolyMap make_isomorphism(const LiouvilleStructure& source, const LiouvilleStructure& target, const LinearMap& gamma);

/// g*θ^target == θ^source as exact polynomials.
bool is_exact_pullback_equal(const PolyMap& g, const LiouvilleStructure& source, const LiouvilleStructure& target);

/// Recovers γ from an automorphism g of θ^l. Throws NotAnAutomorphismError if
/// g*θ^l ≠ θ^l and InternalConsistencyError if the extracted γ is not linear
/// and symplectic (or, for d = 2, if γa ≠ ±a).
DecompositionResult decompose(const LiouvilleStructure& l, const PolyMap& g);

}  // namespace liouville
