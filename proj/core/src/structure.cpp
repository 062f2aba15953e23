#include "liouville/structure.hpp"

#include "liouville/errors.hpp"

#include <optional>
#include <sstream>

namespace liouville {

const char* to_string(StructureFamily family) {
  switch (family) {
    case StructureFamily::canonical:
      return "canonical";
    case StructureFamily::linear:
      return "linear";
    case StructureFamily::quadratic:
      return "quadratic";
    case StructureFamily::higher:
      return "higher";
  }
  return "unknown";
}

LiouvilleStructure::LiouvilleStructure(SymplecticSpace space, Vector a, unsigned degree, Sign sign)
    : space_(space), a_(std::move(a)), degree_(degree), sign_(sign) {
  if (a_.size() != space_.dimension()) throw ArgumentError("LiouvilleStructure: a has the wrong dimension");
}

LiouvilleStructure LiouvilleStructure::canonical(const SymplecticSpace& space) {
  return LiouvilleStructure(space, Vector::zero(space.dimension()), 0);
}

StructureFamily LiouvilleStructure::family() const {
  if (is_canonical()) return StructureFamily::canonical;
  if (degree_ == 1) return StructureFamily::linear;
  if (degree_ == 2) return StructureFamily::quadratic;
  return StructureFamily::higher;
}

std::string LiouvilleStructure::describe() const {
  std::ostringstream os;
  os << "m=" << space_.m() << " d=" << degree_ << " sign=" << (sign_ == Sign::plus ? '+' : '-') << " a=(";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ")";
  return os.str();
}

Polynomial omega_pairing(const SymplecticSpace& space, const Vector& a) {
  if (a.size() != space.dimension()) throw ArgumentError("omega_pairing: dimension mismatch");
  std::vector<Rational> coeffs(space.dimension());
  for (std::size_t i = 0; i < space.m(); ++i) {
    coeffs[space.q_index(i)] = a[space.p_index(i)];
    coeffs[space.p_index(i)] = -a[space.q_index(i)];
  }
  return Polynomial::linear(coeffs);
}

Polynomial psi(const LiouvilleStructure& l) {
  const std::size_t n = l.space().dimension();
  if (l.is_canonical()) return Polynomial(n);
  const Rational scale = l.epsilon() / Rational(2 * static_cast<long>(l.degree()));
  return pow(omega_pairing(l.space(), l.a()), l.degree()) * scale;
}

namespace {

// ½z + (ε/2)·Ω(a, z)^{d−1}·a as polynomials, shared by θ^a and ζ^a.
std::vector<Polynomial> half_shifted_point(const LiouvilleStructure& l) {
  const std::size_t n = l.space().dimension();
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i) * Rational(1, 2));
  if (l.is_canonical()) return comps;
  const Polynomial shift = pow(omega_pairing(l.space(), l.a()), l.degree() - 1) * (l.epsilon() / Rational(2));
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.a()[i].is_zero()) comps[i] += shift * l.a()[i];
  }
  return comps;
}

}  // namespace

OneForm theta_form(const LiouvilleStructure& l) {
  // θ_z(e_j) = Ω(y, e_j) with y = half_shifted_point; Ω(y, e_{q_i}) = y_{p_i}, Ω(y, e_{p_i}) = −y_{q_i}.
  const auto& space = l.space();
  auto y = half_shifted_point(l);
  std::vector<Polynomial> coeffs(space.dimension(), Polynomial(space.dimension()));
  for (std::size_t i = 0; i < space.m(); ++i) {
    coeffs[space.q_index(i)] = y[space.p_index(i)];
    coeffs[space.p_index(i)] = -y[space.q_index(i)];
  }
  return OneForm(space, std::move(coeffs));
}

VectorField liouville_field(const LiouvilleStructure& l) {
  const std::size_t n = l.space().dimension();
  return VectorField(l.space(), PolyMap(n, half_shifted_point(l)));
}

OneForm pullback_theta(const PolyMap& g, const LiouvilleStructure& l) {
  const auto& space = l.space();
  const std::size_t n = space.dimension();
  if (g.size() != n || g.num_vars() != n) throw ArgumentError("pullback_theta: map is not a self-map of the space");
  const PolyMatrix jac = jacobian(g);

  std::optional<Polynomial> s, s_power;
  if (!l.is_canonical()) {
    s = substitute(omega_pairing(space, l.a()), g);  // linear in g, so cheap
    s_power = pow(*s, l.degree() - 1) * (l.epsilon() / Rational(2));
  }

  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial c(n);
    for (std::size_t k = 0; k < space.m(); ++k) {
      const std::size_t p = space.p_index(k);
      const std::size_t q = space.q_index(k);
      c += g[p] * jac[q][i];
      c -= g[q] * jac[p][i];
    }
    c *= Rational(1, 2);
    if (s) c += *s_power * partial_derivative(*s, i);
    out.push_back(std::move(c));
  }
  return OneForm(space, std::move(out));
}

}  // namespace liouville
