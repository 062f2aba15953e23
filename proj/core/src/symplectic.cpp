#include "liouville/symplectic.hpp"

#include "liouville/errors.hpp"

#include <optional>

namespace liouville {

namespace {

void check_vector(const SymplecticSpace& space, const Vector& v, const char* what) {
  if (v.size() != space.dimension()) {
    throw ArgumentError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                        " in a space of dimension " + std::to_string(space.dimension()));
  }
}

// Ω(u, e_j) for every j, i.e. the row uᵀJ.
std::vector<Rational> omega_row(const SymplecticSpace& space, const Vector& u) {
  const std::size_t m = space.m();
  std::vector<Rational> row(space.dimension());
  for (std::size_t i = 0; i < m; ++i) {
    row[space.q_index(i)] = u[space.p_index(i)];
    row[space.p_index(i)] = -u[space.q_index(i)];
  }
  return row;
}

std::optional<std::size_t> first_basis_with(const SymplecticSpace& space, auto&& predicate) {
  for (std::size_t j = 0; j < space.dimension(); ++j) {
    if (predicate(Vector::basis(space.dimension(), j))) return j;
  }
  return std::nullopt;
}

// Single transvection sending x to y; requires Ω(x, y) ≠ 0.
LinearMap one_step(const SymplecticSpace& space, const Vector& x, const Vector& y) {
  const Vector u = y - x;
  return transvection(space, u, Rational(1) / omega(space, u, x));
}

}  // namespace

SymplecticSpace::SymplecticSpace(std::size_t m) : m_(m) {
  if (m == 0 || 2 * m > kMaxVariables) {
    throw ArgumentError("SymplecticSpace: half-dimension must be in [1, " + std::to_string(kMaxVariables / 2) + "]");
  }
}

// ---------------------------------------------------------------------------
// Vector

Vector Vector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw ArgumentError("Vector::basis: index out of range");
  Vector v = zero(dimension);
  v.entries_[index] = Rational(1);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Vector operator+(const Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) throw ArgumentError("Vector: length mismatch");
  Vector r = lhs;
  for (std::size_t i = 0; i < r.size(); ++i) r.entries_[i] += rhs.entries_[i];
  return r;
}

Vector operator-(const Vector& lhs, const Vector& rhs) { return lhs + (-rhs); }

Vector operator*(const Rational& scalar, const Vector& v) {
  Vector r = v;
  for (auto& e : r.entries_) e *= scalar;
  return r;
}

std::vector<std::string> Vector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw ArgumentError("LinearMap: matrix must be square");
  }
}

LinearMap LinearMap::identity(std::size_t dimension) { return scalar(dimension, Rational(1)); }

LinearMap LinearMap::scalar(std::size_t dimension, const Rational& value) {
  std::vector<std::vector<Rational>> rows(dimension, std::vector<Rational>(dimension));
  for (std::size_t i = 0; i < dimension; ++i) rows[i][i] = value;
  return LinearMap(std::move(rows));
}

LinearMap LinearMap::from_polymap(const PolyMap& g) {
  if (!g.is_linear()) throw ArgumentError("LinearMap::from_polymap: map is not linear");
  if (g.size() != g.num_vars()) throw ArgumentError("LinearMap::from_polymap: map is not square");
  return LinearMap(g.linear_coefficients());
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.size() != dimension()) throw ArgumentError("LinearMap::apply: dimension mismatch");
  std::vector<Rational> out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (!rows_[i][j].is_zero()) out[i] += rows_[i][j] * v[j];
    }
  }
  return Vector(std::move(out));
}

LinearMap LinearMap::transpose() const {
  std::vector<std::vector<Rational>> t(dimension(), std::vector<Rational>(dimension()));
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < dimension(); ++j) t[j][i] = rows_[i][j];
  }
  return LinearMap(std::move(t));
}

PolyMap LinearMap::to_polymap() const {
  return PolyMap::affine(rows_, std::vector<Rational>(dimension()));
}

LinearMap operator*(const LinearMap& lhs, const LinearMap& rhs) {
  const std::size_t n = lhs.dimension();
  if (rhs.dimension() != n) throw ArgumentError("LinearMap: dimension mismatch in product");
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs.rows_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += lhs.rows_[i][k] * rhs.rows_[k][j];
    }
  }
  return LinearMap(std::move(out));
}

std::vector<std::vector<std::string>> LinearMap::to_strings() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    std::vector<std::string> row;
    row.reserve(r.size());
    for (const auto& e : r) row.push_back(e.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ω and Sp

Rational omega(const SymplecticSpace& space, const Vector& x, const Vector& y) {
  check_vector(space, x, "omega");
  check_vector(space, y, "omega");
  Rational sum;
  for (std::size_t i = 0; i < space.m(); ++i) {
    sum += x[space.p_index(i)] * y[space.q_index(i)];
    sum -= x[space.q_index(i)] * y[space.p_index(i)];
  }
  return sum;
}

LinearMap omega_matrix(const SymplecticSpace& space) {
  std::vector<std::vector<Rational>> j(space.dimension(), std::vector<Rational>(space.dimension()));
  for (std::size_t i = 0; i < space.m(); ++i) {
    j[space.p_index(i)][space.q_index(i)] = Rational(1);
    j[space.q_index(i)][space.p_index(i)] = Rational(-1);
  }
  return LinearMap(std::move(j));
}

bool is_symplectic(const SymplecticSpace& space, const LinearMap& m) {
  if (m.dimension() != space.dimension()) return false;
  const LinearMap j = omega_matrix(space);
  return m.transpose() * j * m == j;
}

LinearMap transvection(const SymplecticSpace& space, const Vector& u, const Rational& c) {
  check_vector(space, u, "transvection");
  const std::size_t n = space.dimension();
  const auto row = omega_row(space, u);
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t[i][i] = Rational(1);
    if (u[i].is_zero() || c.is_zero()) continue;
    const Rational cu = c * u[i];
    for (std::size_t j = 0; j < n; ++j) t[i][j] += cu * row[j];
  }
  return LinearMap(std::move(t));
}

LinearMap random_symplectic(const SymplecticSpace& space, std::uint64_t seed, std::size_t count) {
  SampleRng rng(seed);
  LinearMap g = LinearMap::identity(space.dimension());
  for (std::size_t k = 0; k < count; ++k) {
    const Vector u = random_nonzero_vector(space, rng);
    const Rational c = rng.small_nonzero_rational();
    g = transvection(space, u, c) * g;
  }
  return g;
}

LinearMap map_vector_to_vector(const SymplecticSpace& space, const Vector& a, const Vector& b) {
  check_vector(space, a, "map_vector_to_vector");
  check_vector(space, b, "map_vector_to_vector");
  if (a.is_zero() || b.is_zero()) {
    throw ArgumentError("map_vector_to_vector: Sp acts transitively only on nonzero vectors");
  }
  if (a == b) return LinearMap::identity(space.dimension());
  if (!omega(space, a, b).is_zero()) return one_step(space, a, b);

  // Ω(a, b) = 0: route a → w → b through some w with Ω(a, w) ≠ 0 ≠ Ω(w, b).
  const std::size_t n = space.dimension();
  auto good = [&](const Vector& w) { return !omega(space, a, w).is_zero() && !omega(space, w, b).is_zero(); };
  Vector w;
  if (auto j = first_basis_with(space, good)) {
    w = Vector::basis(n, *j);
  } else {
    // No single basis vector works. With x, y basis vectors satisfying
    // Ω(a, x) ≠ 0 and Ω(y, b) ≠ 0, both Ω(a, x + s y) and Ω(x + s y, b)
    // are affine in s and vanish for at most one s each.
    const auto x = first_basis_with(space, [&](const Vector& e) { return !omega(space, a, e).is_zero(); });
    const auto y = first_basis_with(space, [&](const Vector& e) { return !omega(space, e, b).is_zero(); });
    const Vector ex = Vector::basis(n, *x);
    const Vector ey = Vector::basis(n, *y);
    for (long s = 1;; ++s) {
      w = ex + Rational(s) * ey;
      if (good(w)) break;
    }
  }
  return one_step(space, w, b) * one_step(space, a, w);
}

LinearMap stabilizer_sample(const SymplecticSpace& space, const Vector& a, std::uint64_t seed, Sign sign,
                            std::size_t count) {
  check_vector(space, a, "stabilizer_sample");
  if (a.is_zero()) throw ArgumentError("stabilizer_sample: a must be nonzero");
  const std::size_t n = space.dimension();
  const auto j = first_basis_with(space, [&](const Vector& e) { return !omega(space, e, a).is_zero(); });
  const Vector e = Vector::basis(n, *j);
  const Rational omega_ea = omega(space, e, a);

  SampleRng rng(seed);
  LinearMap g = LinearMap::identity(n);
  for (std::size_t k = 0; k < count; ++k) {
    Vector u = random_nonzero_vector(space, rng);
    u = u - (omega(space, u, a) / omega_ea) * e;  // now Ω(u, a) = 0
    const Rational c = rng.small_nonzero_rational();
    g = transvection(space, u, c) * g;
  }
  if (sign == Sign::minus) g = LinearMap::scalar(n, Rational(-1)) * g;
  return g;
}

Vector random_vector(const SymplecticSpace& space, SampleRng& rng) {
  std::vector<Rational> entries;
  entries.reserve(space.dimension());
  for (std::size_t i = 0; i < space.dimension(); ++i) entries.push_back(rng.small_rational());
  return Vector(std::move(entries));
}

Vector random_nonzero_vector(const SymplecticSpace& space, SampleRng& rng) {
  Vector v;
  do v = random_vector(space, rng);
  while (v.is_zero());
  return v;
}

}  // namespace liouville
