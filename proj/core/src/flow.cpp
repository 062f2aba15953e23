#include "liouville/flow.hpp"

#include "liouville/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace liouville {

namespace {

void check_point(const LiouvilleStructure& l, std::span<const double> z, const char* what) {
  if (z.size() != l.space().dimension()) throw ArgumentError(std::string(what) + ": dimension mismatch");
}

double omega_real(const SymplecticSpace& space, std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < space.m(); ++i) {
    sum += x[space.p_index(i)] * y[space.q_index(i)] - x[space.q_index(i)] * y[space.p_index(i)];
  }
  return sum;
}

// The field's polynomial components flattened for fast double evaluation.
class CompiledField {
 public:
  explicit CompiledField(const PolyMap& map) : dim_(map.num_vars()) {
    for (const auto& comp : map.components()) {
      std::vector<Entry> entries;
      for (const auto& t : comp.terms()) {
        Entry e{t.coefficient.to_double(), {}};
        for (std::size_t i = 0; i < dim_; ++i) e.exponents[i] = t.monomial.exponent(i);
        entries.push_back(e);
      }
      components_.push_back(std::move(entries));
    }
  }

  void operator()(std::span<const double> z, std::span<double> out) const {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      double sum = 0.0;
      for (const auto& e : components_[c]) {
        double v = e.coefficient;
        for (std::size_t i = 0; i < dim_; ++i) {
          for (unsigned k = 0; k < e.exponents[i]; ++k) v *= z[i];
        }
        sum += v;
      }
      out[c] = sum;
    }
  }

 private:
  struct Entry {
    double coefficient;
    std::array<unsigned char, kMaxVariables> exponents;
  };
  std::size_t dim_;
  std::vector<std::vector<Entry>> components_;
};

}  // namespace

RealVector to_real(const Vector& v) {
  RealVector out;
  out.reserve(v.size());
  for (const auto& e : v.entries()) out.push_back(e.to_double());
  return out;
}

RealVector flow_closed_form(const LiouvilleStructure& l, double t, std::span<const double> z) {
  check_point(l, z, "flow_closed_form");
  const std::size_t n = z.size();
  const double s = std::exp(0.5 * t);
  RealVector out(z.begin(), z.end());
  if (t == 0.0) return out;  // φ_0 = id exactly, not up to rounding
  if (l.is_canonical()) {
    for (auto& x : out) x *= s;
    return out;
  }
  const double eps = to_int(l.sign());
  const RealVector a = to_real(l.a());
  const double w = omega_real(l.space(), a, z);
  switch (l.family()) {
    case StructureFamily::linear:
      for (std::size_t i = 0; i < n; ++i) out[i] = s * (z[i] + eps * a[i]) - eps * a[i];
      break;
    case StructureFamily::quadratic:
      for (std::size_t i = 0; i < n; ++i) out[i] = s * (z[i] + eps * 0.5 * t * w * a[i]);
      break;
    case StructureFamily::higher: {
      const unsigned k = l.degree() - 1;  // n + 1 with n = d − 2
      const double inv_n = 1.0 / static_cast<double>(l.degree() - 2);
      const double wk = std::pow(w, static_cast<double>(k));
      const double fast = std::exp(0.5 * static_cast<double>(k) * t);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = s * (z[i] - eps * inv_n * wk * a[i]) + eps * inv_n * fast * wk * a[i];
      }
      break;
    }
    case StructureFamily::canonical:
      break;
  }
  return out;
}

RealVector flow_numeric(const LiouvilleStructure& l, double t, std::span<const double> z, std::size_t steps) {
  check_point(l, z, "flow_numeric");
  if (steps == 0) throw ArgumentError("flow_numeric: steps must be positive");
  const std::size_t n = z.size();
  RealVector y(z.begin(), z.end());
  if (t == 0.0) return y;

  const CompiledField field(liouville_field(l).components());
  const double h = t / static_cast<double>(steps);
  RealVector k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t step = 0; step < steps; ++step) {
    field(y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    field(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    field(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    field(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  }
  return y;
}

RealVector field_value(const LiouvilleStructure& l, std::span<const double> z) {
  check_point(l, z, "field_value");
  const CompiledField field(liouville_field(l).components());
  RealVector out(z.size());
  field(z, out);
  return out;
}

std::vector<RealVector> omega_matrix_real(const SymplecticSpace& space) {
  const LinearMap j = omega_matrix(space);
  std::vector<RealVector> out(space.dimension(), RealVector(space.dimension()));
  for (std::size_t r = 0; r < space.dimension(); ++r) {
    for (std::size_t c = 0; c < space.dimension(); ++c) out[r][c] = j(r, c).to_double();
  }
  return out;
}

std::vector<RealVector> flow_jacobian_fd(const LiouvilleStructure& l, double t, std::span<const double> z,
                                         double h) {
  check_point(l, z, "flow_jacobian_fd");
  const std::size_t n = z.size();
  std::vector<RealVector> jac(n, RealVector(n));
  RealVector plus(z.begin(), z.end()), minus(z.begin(), z.end());
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = z[j] + h;
    minus[j] = z[j] - h;
    const RealVector fp = flow_closed_form(l, t, plus);
    const RealVector fm = flow_closed_form(l, t, minus);
    for (std::size_t i = 0; i < n; ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
    plus[j] = z[j];
    minus[j] = z[j];
  }
  return jac;
}

double max_abs_difference(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("max_abs_difference: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace liouville
