#include "support.hpp"

#include "liouville/errors.hpp"
#include "liouville/flow.hpp"
#include "liouville/forms.hpp"
#include "liouville/structure.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace liouville;

Vector vec(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (const long v : values) out.emplace_back(v);
  return Vector(std::move(out));
}

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

LiouvilleStructure random_structure(SampleRng& rng, std::size_t m, unsigned d, Sign sign) {
  const SymplecticSpace s(m);
  return LiouvilleStructure(s, random_nonzero_vector(s, rng), d, sign);
}

// --- psi ---

TEST(Psi, Examples) {
  const SymplecticSpace s(1);
  EXPECT_TRUE(psi(LiouvilleStructure(s, vec({1, 2}), 0)).is_zero());
  const Polynomial p = psi(LiouvilleStructure(s, vec({1, 0}), 2, Sign::plus));
  EXPECT_EQ(p.evaluate(vec({0, 1}).entries()), Rational(1, 4));
  for (unsigned d = 0; d <= 6; ++d) EXPECT_TRUE(psi(LiouvilleStructure(s, vec({0, 0}), d)).is_zero());
}

TEST(Psi, MatchesDirectFormula) {
  SampleRng rng(1);
  for (unsigned d = 1; d <= 6; ++d) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto l = random_structure(rng, 2, d, sign);
      const auto z = oracle::random_point(rng, 4);
      std::vector<mpq_class> a(4);
      for (std::size_t i = 0; i < 4; ++i) a[i] = l.a()[i].value();
      mpq_class w = oracle::omega(2, a, z);
      mpq_class wd = 1;
      for (unsigned k = 0; k < d; ++k) wd *= w;
      const mpq_class expected = mpq_class(to_int(sign)) * wd / (2 * d);
      EXPECT_EQ(psi(l).evaluate(oracle::to_rationals(z)).value(), expected);
      EXPECT_EQ(psi(l).degree(), static_cast<int>(d));
    }
  }
}

TEST(Psi, ParityAndSignRedundancy) {
  SampleRng rng(2);
  for (unsigned d = 1; d <= 6; ++d) {
    const auto l = random_structure(rng, 2, d, Sign::plus);
    const LiouvilleStructure neg(l.space(), -l.a(), d, Sign::plus);
    if (d % 2 == 0) {
      EXPECT_EQ(psi(neg), psi(l));
    } else {
      EXPECT_EQ(psi(neg), -psi(l));
      const LiouvilleStructure flipped_sign(l.space(), l.a(), d, Sign::minus);
      EXPECT_EQ(theta_form(flipped_sign), theta_form(neg));
    }
  }
}

// --- theta ---

TEST(ThetaForm, CanonicalCoefficients) {
  const SymplecticSpace s(1);
  const OneForm t = theta_form(LiouvilleStructure::canonical(s));
  EXPECT_EQ(t[0], x(2, 1) * Rational(-1, 2));
  EXPECT_EQ(t[1], x(2, 0) * Rational(1, 2));
}

TEST(ThetaForm, LinearExample) {
  const SymplecticSpace s(1);
  const OneForm t = theta_form(LiouvilleStructure(s, vec({1, 0}), 1));
  SampleRng rng(3);
  for (int k = 0; k < 10; ++k) {
    const Vector z = random_vector(s, rng);
    EXPECT_EQ(t.evaluate(z, vec({0, 1})), (z[0] + Rational(1)) / Rational(2));
  }
}

TEST(ThetaForm, ZeroAMatchesCanonical) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const SymplecticSpace s(m);
    for (unsigned d = 0; d <= 6; ++d) {
      EXPECT_EQ(theta_form(LiouvilleStructure(s, Vector::zero(2 * m), d, Sign::minus)),
                theta_form(LiouvilleStructure::canonical(s)));
    }
  }
}

TEST(ThetaForm, MatchesDirectEvaluation) {
  SampleRng rng(4);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (unsigned d = 0; d <= 6; ++d) {
      const auto l = random_structure(rng, m, d, d % 2 ? Sign::plus : Sign::minus);
      const OneForm t = theta_form(l);
      const auto z = oracle::random_point(rng, 2 * m);
      const auto v = oracle::random_point(rng, 2 * m);
      EXPECT_EQ(t.evaluate(Vector(oracle::to_rationals(z)), Vector(oracle::to_rationals(v))).value(),
                oracle::theta_value(l, z, v));
    }
  }
}

TEST(ThetaForm, EqualsThetaZeroPlusDPsi) {
  SampleRng rng(5);
  for (unsigned d = 1; d <= 6; ++d) {
    const auto l = random_structure(rng, 2, d, Sign::minus);
    EXPECT_EQ(theta_form(l), theta_form(LiouvilleStructure::canonical(l.space())) +
                                 OneForm::differential(l.space(), psi(l)));
  }
}

// --- exterior derivative ---

TEST(ExteriorDerivative, CanonicalIsOmega) {
  const SymplecticSpace s(1);
  const TwoForm w = exterior_derivative(theta_form(LiouvilleStructure::canonical(s)));
  EXPECT_EQ(w(0, 1), Polynomial::constant(2, Rational(1)));
  EXPECT_EQ(w, TwoForm::omega(s));
}

TEST(ExteriorDerivative, ExactFormsAreClosed) {
  SampleRng rng(6);
  const SymplecticSpace s(2);
  for (int k = 0; k < 30; ++k) {
    const Polynomial p = oracle::random_polynomial(rng, 4, 6, 8);
    EXPECT_TRUE(exterior_derivative(OneForm::differential(s, p)).is_zero());
  }
}

TEST(ExteriorDerivative, HigherDegreeThetaIsOmega) {
  SampleRng rng(7);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (unsigned d = 0; d <= 6; ++d) {
      for (const Sign sign : {Sign::plus, Sign::minus}) {
        const auto l = random_structure(rng, m, d, sign);
        EXPECT_EQ(exterior_derivative(theta_form(l)), TwoForm::omega(l.space()));
      }
    }
  }
}

TEST(TwoForm, RejectsNonAntisymmetric) {
  const SymplecticSpace s(1);
  PolyMatrix c(2, std::vector<Polynomial>(2, Polynomial(2)));
  c[0][1] = Polynomial::constant(2, Rational(1));
  EXPECT_THROW(TwoForm(s, c), ArgumentError);
}

// --- Liouville field ---

std::vector<Rational> rats(std::initializer_list<Rational> values) { return values; }

TEST(LiouvilleField, Examples) {
  const SymplecticSpace s(1);
  const PolyMap canonical = liouville_field(LiouvilleStructure::canonical(s)).components();
  EXPECT_EQ(canonical(rats({2, 4})), rats({1, 2}));
  const PolyMap linear = liouville_field(LiouvilleStructure(s, vec({1, 0}), 1)).components();
  EXPECT_EQ(linear(rats({0, 0})), rats({Rational(1, 2), 0}));
  for (unsigned d = 0; d <= 6; ++d) {
    const PolyMap zero = liouville_field(LiouvilleStructure(s, vec({0, 0}), d)).components();
    EXPECT_EQ(zero, canonical);
  }
}

TEST(LiouvilleField, ContractionIdentity) {
  SampleRng rng(8);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (unsigned d = 0; d <= 6; ++d) {
      for (const Sign sign : {Sign::plus, Sign::minus}) {
        const auto l = random_structure(rng, m, d, sign);
        EXPECT_EQ(interior_product(liouville_field(l), TwoForm::omega(l.space())), theta_form(l));
      }
    }
  }
}

TEST(LiouvilleField, ContractionPointwise) {
  // ω(ζ(z), v) = θ_z(v), with ω evaluated by the oracle rather than interior_product.
  SampleRng rng(9);
  for (unsigned d = 0; d <= 6; ++d) {
    const auto l = random_structure(rng, 2, d, Sign::minus);
    const auto z = oracle::random_point(rng, 4);
    const auto v = oracle::random_point(rng, 4);
    const auto zeta = liouville_field(l).components()(oracle::to_rationals(z));
    std::vector<mpq_class> zq;
    for (const auto& r : zeta) zq.push_back(r.value());
    EXPECT_EQ(oracle::omega(2, zq, v), oracle::theta_value(l, z, v));
  }
}

// --- pullback ---

TEST(Pullback, Examples) {
  const SymplecticSpace s(1);
  const OneForm theta0 = theta_form(LiouvilleStructure::canonical(s));
  EXPECT_EQ(pullback(PolyMap::identity(2), theta0), theta0);
  EXPECT_EQ(pullback(LinearMap::scalar(2, Rational(-1)).to_polymap(), theta0), theta0);
}

TEST(Pullback, MatchesDualNumberOracle) {
  SampleRng rng(10);
  for (int k = 0; k < 40; ++k) {
    const std::size_t m = 1 + rng.index(2);
    const unsigned d = static_cast<unsigned>(rng.index(5));
    const auto l = random_structure(rng, m, d, Sign::plus);
    const PolyMap g = oracle::random_map(rng, 2 * m, 2, 3);
    const OneForm pulled = pullback(g, theta_form(l));
    const auto z = oracle::random_point(rng, 2 * m);
    const auto v = oracle::random_point(rng, 2 * m);
    EXPECT_EQ(pulled.evaluate(Vector(oracle::to_rationals(z)), Vector(oracle::to_rationals(v))).value(),
              oracle::pulled_back_theta_value(g, l, z, v));
  }
}

TEST(Pullback, StructureAwareAgreesWithGeneric) {
  SampleRng rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t m = 1 + rng.index(2);
    const unsigned d = static_cast<unsigned>(rng.index(5));
    const auto l = random_structure(rng, m, d, k % 2 ? Sign::plus : Sign::minus);
    const PolyMap g = oracle::random_map(rng, 2 * m, 2, 3);
    EXPECT_EQ(pullback_theta(g, l), pullback(g, theta_form(l)));
  }
}

TEST(Pullback, DimensionMismatchThrows) {
  const OneForm theta0 = theta_form(LiouvilleStructure::canonical(SymplecticSpace(1)));
  EXPECT_THROW(pullback(PolyMap::identity(4), theta0), ArgumentError);
}

TEST(Pullback, ThetaZeroIsSpInvariant) {
  SampleRng rng(12);
  for (std::size_t m = 1; m <= 3; ++m) {
    const SymplecticSpace s(m);
    const OneForm theta0 = theta_form(LiouvilleStructure::canonical(s));
    for (int k = 0; k < 20; ++k) {
      EXPECT_EQ(pullback(random_symplectic(s, rng.next(), 6).to_polymap(), theta0), theta0);
    }
  }
}

TEST(Pullback, NonSymplecticLinearMapChangesThetaZero) {
  const SymplecticSpace s(1);
  const OneForm theta0 = theta_form(LiouvilleStructure::canonical(s));
  const std::vector<std::vector<Rational>> m{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
  EXPECT_FALSE(pullback(PolyMap::affine(m, std::vector<Rational>(2)), theta0) == theta0);
}

// --- flows ---

TEST(Flow, TimeZeroIsIdentity) {
  SampleRng rng(13);
  for (unsigned d = 0; d <= 6; ++d) {
    const auto l = random_structure(rng, 2, d, Sign::minus);
    const RealVector z{0.3, -1.2, 0.7, 1.9};
    EXPECT_EQ(flow_closed_form(l, 0.0, z), z);
    EXPECT_EQ(flow_numeric(l, 0.0, z, 10), z);
  }
}

TEST(Flow, LinearExample) {
  const LiouvilleStructure l(SymplecticSpace(1), vec({1, 0}), 1);
  const RealVector got = flow_closed_form(l, 2.0 * std::log(2.0), RealVector{0.0, 0.0});
  EXPECT_NEAR(got[0], 1.0, 1e-14);
  EXPECT_NEAR(got[1], 0.0, 1e-14);
}

TEST(Flow, CanonicalIsScaledIdentity) {
  const auto l = LiouvilleStructure::canonical(SymplecticSpace(1));
  const RealVector got = flow_numeric(l, 1.0, RealVector{1.0, 0.0}, 1000);
  EXPECT_NEAR(got[0], std::exp(0.5), 1e-10);
  EXPECT_NEAR(got[1], 0.0, 1e-10);
  const RealVector closed = flow_closed_form(l, 1.0, RealVector{1.0, -2.0});
  EXPECT_NEAR(closed[0], std::exp(0.5), 1e-14);
  EXPECT_NEAR(closed[1], -2.0 * std::exp(0.5), 1e-14);
}

TEST(Flow, ClosedFormMatchesRk4Examples) {
  const SymplecticSpace s(1);
  const RealVector z{0.0, 1.0};
  for (const unsigned d : {2u, 3u}) {
    for (const double t : {0.1, 1.0, -1.0}) {
      const LiouvilleStructure l(s, vec({1, 0}), d);
      EXPECT_LT(max_abs_difference(flow_closed_form(l, t, z), flow_numeric(l, t, z, 2000)), 1e-8);
    }
  }
}

TEST(Flow, ClosedFormSolvesTheOde) {
  // Both signs, every degree: compare against RK4 and check the generator.
  SampleRng rng(14);
  for (unsigned d = 0; d <= 6; ++d) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const SymplecticSpace s(2);
      std::vector<Rational> a;
      for (int i = 0; i < 4; ++i) a.push_back(rng.small_rational() / Rational(72));
      const LiouvilleStructure l(s, Vector(a), d, sign);
      RealVector z(4);
      for (auto& c : z) c = rng.uniform(-2.0, 2.0);
      const double t = rng.uniform(-1.0, 1.0);
      EXPECT_LT(max_abs_difference(flow_closed_form(l, t, z), flow_numeric(l, t, z, 2000)), 1e-8)
          << l.describe();
      const double h = 1e-6;
      const RealVector step = flow_closed_form(l, h, z);
      const RealVector field = field_value(l, z);
      for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR((step[i] - z[i]) / h, field[i], 1e-5);
    }
  }
}

TEST(Flow, NumericStepsMustBePositive) {
  const auto l = LiouvilleStructure::canonical(SymplecticSpace(1));
  EXPECT_THROW(flow_numeric(l, 1.0, RealVector{1.0, 0.0}, 0), ArgumentError);
  EXPECT_THROW(flow_closed_form(l, 1.0, RealVector{1.0}), ArgumentError);
}

TEST(Flow, FieldValueMatchesExactField) {
  SampleRng rng(15);
  for (unsigned d = 0; d <= 6; ++d) {
    const auto l = random_structure(rng, 2, d, Sign::minus);
    const auto z = oracle::random_point(rng, 4);
    const auto exact = liouville_field(l).components()(oracle::to_rationals(z));
    RealVector zr;
    for (const auto& c : z) zr.push_back(c.get_d());
    const RealVector approx = field_value(l, zr);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(approx[i], exact[i].to_double(), 1e-9 * (1 + std::abs(approx[i])));
  }
}

TEST(Flow, ScalingLaw) {
  SampleRng rng(16);
  const SymplecticSpace s(1);
  const auto j = omega_matrix_real(s);
  for (unsigned d = 0; d <= 4; ++d) {
    const LiouvilleStructure l(s, Vector({Rational(1, 9), Rational(-1, 18)}), d, Sign::minus);
    const RealVector z{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    for (const double t : {-1.0, 0.5, 1.0}) {
      const auto jac = flow_jacobian_fd(l, t, z, 1e-6);
      // For 2x2, JᵀJ_ΩJ = det(J)·J_Ω.
      const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
      EXPECT_NEAR(det, std::exp(t), 1e-5);
      EXPECT_DOUBLE_EQ(j[0][1], 1.0);
    }
  }
}

}  // namespace
