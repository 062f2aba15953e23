#include "liouville/forms.hpp"

#include "liouville/errors.hpp"

#include <algorithm>

namespace liouville {

namespace {

void check_space(const SymplecticSpace& space, std::size_t num_vars, std::size_t count, const char* what) {
  if (num_vars != space.dimension() || count != space.dimension()) {
    throw ArgumentError(std::string(what) + ": coefficients do not match the space dimension");
  }
}

}  // namespace

OneForm::OneForm(SymplecticSpace space, std::vector<Polynomial> coefficients)
    : space_(space), coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) check_space(space_, c.num_vars(), coefficients_.size(), "OneForm");
  if (coefficients_.size() != space_.dimension()) throw ArgumentError("OneForm: wrong number of coefficients");
}

OneForm OneForm::zero(const SymplecticSpace& space) {
  return OneForm(space, std::vector<Polynomial>(space.dimension(), Polynomial(space.dimension())));
}

OneForm OneForm::differential(const SymplecticSpace& space, const Polynomial& psi) {
  if (psi.num_vars() != space.dimension()) throw ArgumentError("OneForm::differential: dimension mismatch");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(space.dimension());
  for (std::size_t i = 0; i < space.dimension(); ++i) coeffs.push_back(partial_derivative(psi, i));
  return OneForm(space, std::move(coeffs));
}

Rational OneForm::evaluate(const Vector& z, const Vector& v) const {
  if (z.size() != space_.dimension() || v.size() != space_.dimension()) {
    throw ArgumentError("OneForm::evaluate: dimension mismatch");
  }
  Rational sum;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (!v[i].is_zero()) sum += coefficients_[i].evaluate(z.entries()) * v[i];
  }
  return sum;
}

int OneForm::degree() const {
  int d = -1;
  for (const auto& c : coefficients_) d = std::max(d, c.degree());
  return d;
}

OneForm operator+(const OneForm& lhs, const OneForm& rhs) {
  if (!(lhs.space_ == rhs.space_)) throw ArgumentError("OneForm: space mismatch");
  std::vector<Polynomial> c = lhs.coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coefficients_[i];
  return OneForm(lhs.space_, std::move(c));
}

OneForm operator-(const OneForm& lhs, const OneForm& rhs) {
  if (!(lhs.space_ == rhs.space_)) throw ArgumentError("OneForm: space mismatch");
  std::vector<Polynomial> c = lhs.coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coefficients_[i];
  return OneForm(lhs.space_, std::move(c));
}

TwoForm::TwoForm(SymplecticSpace space, PolyMatrix coefficients)
    : space_(space), coefficients_(std::move(coefficients)) {
  const std::size_t n = space_.dimension();
  if (coefficients_.size() != n) throw ArgumentError("TwoForm: wrong number of rows");
  for (const auto& row : coefficients_) {
    if (row.size() != n) throw ArgumentError("TwoForm: wrong number of columns");
    for (const auto& c : row) check_space(space_, c.num_vars(), row.size(), "TwoForm");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(coefficients_[i][j] == -coefficients_[j][i])) throw ArgumentError("TwoForm: coefficients not antisymmetric");
    }
  }
}

TwoForm TwoForm::omega(const SymplecticSpace& space) {
  const std::size_t n = space.dimension();
  const LinearMap j = omega_matrix(space);
  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) c[r][s] = Polynomial::constant(n, j(r, s));
  }
  return TwoForm(space, std::move(c));
}

bool TwoForm::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); });
  });
}

VectorField::VectorField(SymplecticSpace space, PolyMap components)
    : space_(space), components_(std::move(components)) {
  check_space(space_, components_.num_vars(), components_.size(), "VectorField");
}

TwoForm exterior_derivative(const OneForm& f) {
  const std::size_t n = f.space().dimension();
  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c[i][j] = partial_derivative(f[j], i) - partial_derivative(f[i], j);
      c[j][i] = -c[i][j];
    }
  }
  return TwoForm(f.space(), std::move(c));
}

OneForm pullback(const PolyMap& g, const OneForm& f) {
  const std::size_t n = f.space().dimension();
  if (g.size() != n || g.num_vars() != n) {
    throw ArgumentError("pullback: map is not a self-map of the form's space");
  }
  std::vector<Polynomial> at_g;
  at_g.reserve(n);
  for (const auto& c : f.coefficients()) at_g.push_back(substitute(c, g));
  const PolyMatrix jac = jacobian(g);
  std::vector<Polynomial> out(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (at_g[j].is_zero() || jac[j][i].is_zero()) continue;
      out[i] += at_g[j] * jac[j][i];
    }
  }
  return OneForm(f.space(), std::move(out));
}

OneForm interior_product(const VectorField& x, const TwoForm& beta) {
  if (!(x.space() == beta.space())) throw ArgumentError("interior_product: space mismatch");
  const std::size_t n = x.space().dimension();
  std::vector<Polynomial> out(n, Polynomial(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (beta(i, j).is_zero()) continue;
      out[j] += x.components()[i] * beta(i, j);
    }
  }
  return OneForm(x.space(), std::move(out));
}

}  // namespace liouville
