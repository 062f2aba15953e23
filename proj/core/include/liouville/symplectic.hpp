#pragma once

#include "liouville/polynomial.hpp"
#include "liouville/random.hpp"
#include "liouville/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace liouville {

enum class Sign : int { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// R^{2m} with coordinates z = (p_1, ..., p_m, q_1, ..., q_m) and the
/// standard form Ω(x, y) = Σ_i (x_{p_i} y_{q_i} − x_{q_i} y_{p_i}).
class SymplecticSpace {
 public:
  explicit SymplecticSpace(std::size_t m);

  std::size_t m() const { return m_; }
  std::size_t dimension() const { return 2 * m_; }
  std::size_t p_index(std::size_t i) const { return i; }
  std::size_t q_index(std::size_t i) const { return m_ + i; }

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  std::size_t m_;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static Vector zero(std::size_t dimension) { return Vector(std::vector<Rational>(dimension)); }
  static Vector basis(std::size_t dimension, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  bool is_zero() const;

  Vector operator-() const;
  friend Vector operator+(const Vector& lhs, const Vector& rhs);
  friend Vector operator-(const Vector& lhs, const Vector& rhs);
  friend Vector operator*(const Rational& scalar, const Vector& v);
  friend bool operator==(const Vector&, const Vector&) = default;

  std::vector<std::string> to_strings() const;

 private:
  std::vector<Rational> entries_;
};

/// Square matrix acting on column vectors.
class LinearMap {
 public:
  explicit LinearMap(std::vector<std::vector<Rational>> rows);

  static LinearMap identity(std::size_t dimension);
  static LinearMap scalar(std::size_t dimension, const Rational& value);
  /// Reads the coefficient matrix of a linear PolyMap; throws ArgumentError if the map is not linear.
  static LinearMap from_polymap(const PolyMap& g);

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  Vector apply(const Vector& v) const;
  LinearMap transpose() const;
  PolyMap to_polymap() const;

  friend LinearMap operator*(const LinearMap& lhs, const LinearMap& rhs);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

  /// Row-major rational strings.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

Rational omega(const SymplecticSpace& space, const Vector& x, const Vector& y);

/// Matrix J of Ω: J(i, j) = Ω(e_i, e_j), so Ω(x, y) = xᵀ J y.
LinearMap omega_matrix(const SymplecticSpace& space);

/// MᵀJM = J, exactly.
bool is_symplectic(const SymplecticSpace& space, const LinearMap& m);

/// z ↦ z + c·Ω(u, z)·u.
LinearMap transvection(const SymplecticSpace& space, const Vector& u, const Rational& c);

/// Product of `count` transvections with small random rational u and c.
LinearMap random_symplectic(const SymplecticSpace& space, std::uint64_t seed, std::size_t count);

/// A symplectic γ with γa = b, for nonzero a and b.
LinearMap map_vector_to_vector(const SymplecticSpace& space, const Vector& a, const Vector& b);

/// A symplectic γ with γa = sign·a, built from `count` transvections along
/// directions Ω-orthogonal to a (each fixes a), then −I when sign is minus.
LinearMap stabilizer_sample(const SymplecticSpace& space, const Vector& a, std::uint64_t seed, Sign sign,
                            std::size_t count);

Vector random_vector(const SymplecticSpace& space, SampleRng& rng);
Vector random_nonzero_vector(const SymplecticSpace& space, SampleRng& rng);

}  // namespace liouville
