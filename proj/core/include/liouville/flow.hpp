#pragma once

#include "liouville/structure.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace liouville {

using RealVector = std::vector<double>;

/// Closed-form Liouville flow φ_t(z), evaluated in double precision.
///
/// With s = e^{t/2}, w = Ω(a, z) and the sign ε folded into a:
///   canonical     s·z
///   d = 1         s(z + εa) − εa
///   d = 2         s(z + ε(t/2)·w·a)
///   d ≥ 3, n=d−2  s(z − (ε/n)w^{n+1}a) + (ε/n)·e^{(n+1)t/2}·w^{n+1}a
RealVector flow_closed_form(const LiouvilleStructure& l, double t, std::span<const double> z);

/// Classical fixed-step RK4 integration of z' = ζ^a(z) from 0 to t, with the
/// polynomial field evaluated in doubles. Independent of flow_closed_form.
RealVector flow_numeric(const LiouvilleStructure& l, double t, std::span<const double> z, std::size_t steps);

/// Liouville field ζ^a evaluated in doubles.
RealVector field_value(const LiouvilleStructure& l, std::span<const double> z);

/// Matrix of ω for the given space, in doubles.
std::vector<RealVector> omega_matrix_real(const SymplecticSpace& space);

/// Central-difference Jacobian of z ↦ φ_t(z) (closed form), step h.
std::vector<RealVector> flow_jacobian_fd(const LiouvilleStructure& l, double t, std::span<const double> z, double h);

double max_abs_difference(std::span<const double> x, std::span<const double> y);

RealVector to_real(const Vector& v);

}  // namespace liouville
