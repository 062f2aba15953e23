#include "liouville/automorphism.hpp"

#include "liouville/errors.hpp"

#include <json.hpp>

namespace liouville {

namespace {

using StructureRef = const LiouvilleStructure&;

// y ↦ y + c·Ω(a, y)^k·a applied to the components of an arbitrary map y.
// Computing Ω(a, y) once keeps this far cheaper than substituting y into the
// expanded components of the outer map.
PolyMap shear_after(const SymplecticSpace& space, const Vector& a, unsigned k, const Rational& c, const PolyMap& y) {
  if (a.is_zero() || c.is_zero()) return y;
  const Polynomial s = substitute(omega_pairing(space, a), y);
  const Polynomial shift = pow(s, k) * c;
  std::vector<Polynomial> comps = y.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!a[i].is_zero()) comps[i] += shift * a[i];
  }
  return PolyMap(y.num_vars(), std::move(comps));
}

Rational f_coefficient(unsigned degree, Sign sign) {
  return Rational(to_int(sign), static_cast<long>(degree) - 2);
}

void check_f_degree(unsigned degree, const char* what) {
  if (degree < 3) throw ArgumentError(std::string(what) + ": defined only for degree d >= 3");
}

PolyMap translate_after(const PolyMap& y, const Vector& offset) {
  std::vector<Polynomial> comps = y.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    comps[i] += Polynomial::constant(y.num_vars(), offset[i]);
  }
  return PolyMap(y.num_vars(), std::move(comps));
}

PolyMap linear_after(const LinearMap& gamma, const PolyMap& y) { return compose(gamma.to_polymap(), y); }

// N_l ∘ y, where N_l: (V, θ⁰) → (V, θ^l) is the normalizing isomorphism:
// identity (canonical), translation by −εa (d = 1), f_a (d ≥ 3).
PolyMap normalizer_after(StructureRef l, const PolyMap& y) {
  switch (l.family()) {
    case StructureFamily::canonical:
      return y;
    case StructureFamily::linear:
      return translate_after(y, -(l.epsilon() * l.a()));
    case StructureFamily::higher:
      return shear_after(l.space(), l.a(), l.degree() - 1, f_coefficient(l.degree(), l.sign()), y);
    case StructureFamily::quadratic:
      break;
  }
  throw UnsupportedPairError("quadratic structures have no normalizing map to the canonical structure");
}

// N_l⁻¹ as a map.
PolyMap normalizer_inverse(StructureRef l) {
  const std::size_t n = l.space().dimension();
  const PolyMap id = PolyMap::identity(n);
  switch (l.family()) {
    case StructureFamily::canonical:
      return id;
    case StructureFamily::linear:
      return translate_after(id, l.epsilon() * l.a());
    case StructureFamily::higher:
      return shear_after(l.space(), l.a(), l.degree() - 1, -f_coefficient(l.degree(), l.sign()), id);
    case StructureFamily::quadratic:
      break;
  }
  throw UnsupportedPairError("quadratic structures have no normalizing map to the canonical structure");
}

void check_gamma(StructureRef l, const LinearMap& gamma, const char* what) {
  if (!is_symplectic(l.space(), gamma)) throw ArgumentError(std::string(what) + ": gamma is not symplectic");
}

bool maps_to_plus_minus(const LinearMap& gamma, const Vector& a, const Vector& b) {
  const Vector image = gamma.apply(a);
  return image == b || image == -b;
}

// Unchecked N_l ∘ γ ∘ N_l⁻¹ for non-quadratic l.
PolyMap conjugate(StructureRef l, const LinearMap& gamma) {
  return normalizer_after(l, linear_after(gamma, normalizer_inverse(l)));
}

[[noreturn]] void inconsistent(StructureRef l, const std::string& detail) {
  throw InternalConsistencyError("decompose(" + l.describe() + "): " + detail +
                                 "; this contradicts the classification of automorphisms");
}

}  // namespace

std::string to_json(const DecompositionResult& result) {
  nlohmann::ordered_json j;
  j["case_tag"] = to_string(result.case_tag);
  j["gamma"] = result.gamma.to_strings();
  if (result.lambda) j["lambda"] = result.lambda->to_string();
  return j.dump();
}

PolyMap translation_map(const SymplecticSpace& space, const Vector& a) {
  if (a.size() != space.dimension()) throw ArgumentError("translation_map: dimension mismatch");
  return PolyMap::translation(a.entries());
}

PolyMap f_map(const SymplecticSpace& space, const Vector& a, unsigned degree, Sign sign) {
  check_f_degree(degree, "f_map");
  if (a.size() != space.dimension()) throw ArgumentError("f_map: dimension mismatch");
  return shear_after(space, a, degree - 1, f_coefficient(degree, sign), PolyMap::identity(space.dimension()));
}

PolyMap f_map_inverse(const SymplecticSpace& space, const Vector& a, unsigned degree, Sign sign) {
  check_f_degree(degree, "f_map_inverse");
  if (a.size() != space.dimension()) throw ArgumentError("f_map_inverse: dimension mismatch");
  return shear_after(space, a, degree - 1, -f_coefficient(degree, sign), PolyMap::identity(space.dimension()));
}

PolyMap make_automorphism(const LiouvilleStructure& l, const LinearMap& gamma) {
  check_gamma(l, gamma, "make_automorphism");
  if (l.family() == StructureFamily::quadratic) {
    if (!maps_to_plus_minus(gamma, l.a(), l.a())) {
      throw PreconditionViolation("make_automorphism: a quadratic automorphism must send a to a or -a");
    }
    return gamma.to_polymap();
  }
  return conjugate(l, gamma);
}

PolyMap make_isomorphism(const LiouvilleStructure& source, const LiouvilleStructure& target, const LinearMap& gamma) {
  if (!(source.space() == target.space())) throw ArgumentError("make_isomorphism: structures live in different spaces");
  check_gamma(source, gamma, "make_isomorphism");

  const bool quadratic_involved = source.family() == StructureFamily::quadratic ||
                                  target.family() == StructureFamily::quadratic;
  if (quadratic_involved) {
    if (source.degree() != target.degree()) {
      throw UnsupportedPairError("make_isomorphism: quadratic structures pair only with degree-2 structures");
    }
    if (!source.a().is_zero() && !target.a().is_zero() && source.sign() != target.sign()) {
      throw ObstructionError(
          "make_isomorphism: quadratic structures of opposite sign are not isomorphic "
          "(an isomorphism would need gamma(a) = lambda*a with lambda^2 = -1)");
    }
    if (!maps_to_plus_minus(gamma, source.a(), target.a())) {
      throw PreconditionViolation("make_isomorphism: a quadratic isomorphism must send a to b or -b");
    }
    return gamma.to_polymap();
  }

  if (!source.is_canonical() && !target.is_canonical() && source.degree() != target.degree()) {
    throw UnsupportedPairError("make_isomorphism: structures of degree " + std::to_string(source.degree()) + " and " +
                               std::to_string(target.degree()) + " are not related by this library");
  }
  return normalizer_after(target, linear_after(gamma, normalizer_inverse(source)));
}

bool is_exact_pullback_equal(const PolyMap& g, const LiouvilleStructure& source, const LiouvilleStructure& target) {
  if (!(source.space() == target.space())) throw ArgumentError("is_exact_pullback_equal: space mismatch");
  const std::size_t n = source.space().dimension();
  if (g.size() != n || g.num_vars() != n) throw ArgumentError("is_exact_pullback_equal: map dimension mismatch");
  return pullback_theta(g, target) == theta_form(source);
}

DecompositionResult decompose(const LiouvilleStructure& l, const PolyMap& g) {
  if (!is_exact_pullback_equal(g, l, l)) {
    throw NotAnAutomorphismError("decompose: map does not preserve the Liouville form of " + l.describe());
  }
  const std::size_t n = l.space().dimension();
  const StructureFamily family = l.family();

  PolyMap candidate = g;
  switch (family) {
    case StructureFamily::canonical:
    case StructureFamily::quadratic:
      break;
    case StructureFamily::linear: {
      // γ(w) = g(w − εa) + εa
      const Vector shift = l.epsilon() * l.a();
      candidate = translate_after(compose(g, PolyMap::translation((-shift).entries())), shift);
      break;
    }
    case StructureFamily::higher: {
      // f⁻¹ ∘ g ∘ f is linear iff g(0) = 0 and g = f ∘ L ∘ f⁻¹ with L the
      // linear part of g (f(0) = 0 and f'(0) = I), so test that instead of
      // expanding the composite, whose intermediate degree is (d−1)³.
      for (const auto& c : g.constant_terms()) {
        if (!c.is_zero()) inconsistent(l, "f^-1 o g o f has a nonzero constant term");
      }
      const LinearMap linear_part(g.linear_coefficients());
      if (!(conjugate(l, linear_part) == g)) inconsistent(l, "f^-1 o g o f is not linear");
      candidate = linear_part.to_polymap();
      break;
    }
  }

  if (!candidate.is_linear()) inconsistent(l, "extracted gamma is not linear");
  DecompositionResult result{LinearMap::from_polymap(candidate), family, std::nullopt};
  if (result.gamma.dimension() != n || !is_symplectic(l.space(), result.gamma)) {
    inconsistent(l, "extracted gamma is not symplectic");
  }

  if (family == StructureFamily::quadratic) {
    const Vector image = result.gamma.apply(l.a());
    std::size_t pivot = 0;
    while (l.a()[pivot].is_zero()) ++pivot;
    const Rational lambda = image[pivot] / l.a()[pivot];
    if (!(image == lambda * l.a())) inconsistent(l, "gamma(a) is not a multiple of a");
    if (lambda != Rational(1) && lambda != Rational(-1)) inconsistent(l, "gamma(a) = lambda*a with lambda != +-1");
    result.lambda = lambda;
  }
  return result;
}

}  // namespace liouville
