#include "support.hpp"

#include "liouville/automorphism.hpp"
#include "liouville/errors.hpp"
#include "liouville/forms.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

namespace {

using namespace liouville;

Vector vec(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (const long v : values) out.emplace_back(v);
  return Vector(std::move(out));
}

std::vector<Rational> rats(std::initializer_list<Rational> values) { return values; }

LiouvilleStructure random_structure(SampleRng& rng, std::size_t m, unsigned d, Sign sign) {
  const SymplecticSpace s(m);
  return LiouvilleStructure(s, random_nonzero_vector(s, rng), d, sign);
}

LinearMap automorphism_gamma(SampleRng& rng, const LiouvilleStructure& l, Sign stabilizer_sign = Sign::plus) {
  if (l.family() == StructureFamily::quadratic) {
    return stabilizer_sample(l.space(), l.a(), rng.next(), stabilizer_sign, 4);
  }
  return random_symplectic(l.space(), rng.next(), 4);
}

// Independent pointwise check of g*θ^target = θ^source at random rational (z, v).
void expect_pointwise_pullback(const PolyMap& g, const LiouvilleStructure& source, const LiouvilleStructure& target,
                               SampleRng& rng) {
  const std::size_t n = source.space().dimension();
  for (int k = 0; k < 3; ++k) {
    const auto z = oracle::random_point(rng, n);
    const auto v = oracle::random_point(rng, n);
    EXPECT_EQ(oracle::pulled_back_theta_value(g, target, z, v), oracle::theta_value(source, z, v));
  }
}

// --- translation and f ---

TEST(TranslationMap, Examples) {
  const SymplecticSpace s(1);
  EXPECT_EQ(translation_map(s, vec({0, 0})), PolyMap::identity(2));
  EXPECT_EQ(translation_map(s, vec({1, 0}))(rats({0, 1})), rats({1, 1}));
}

TEST(TranslationMap, PullsCanonicalBackToLinear) {
  SampleRng rng(1);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto l = random_structure(rng, m, 1, sign);
      const PolyMap tau = translation_map(l.space(), l.epsilon() * l.a());
      EXPECT_EQ(pullback(tau, theta_form(LiouvilleStructure::canonical(l.space()))), theta_form(l));
    }
  }
}

TEST(FMap, Examples) {
  const SymplecticSpace s(1);
  EXPECT_EQ(f_map(s, vec({0, 0}), 4), PolyMap::identity(2));
  EXPECT_EQ(f_map_inverse(s, vec({0, 0}), 4), PolyMap::identity(2));
  EXPECT_EQ(f_map(s, vec({1, 0}), 3)(rats({0, 1})), rats({1, 1}));
  EXPECT_EQ(f_map_inverse(s, vec({1, 0}), 3)(rats({1, 1})), rats({0, 1}));
}

TEST(FMap, LowDegreeThrows) {
  const SymplecticSpace s(1);
  for (unsigned d = 0; d < 3; ++d) {
    EXPECT_THROW(f_map(s, vec({1, 0}), d), ArgumentError);
    EXPECT_THROW(f_map_inverse(s, vec({1, 0}), d), ArgumentError);
  }
}

TEST(FMap, MatchesFormula) {
  SampleRng rng(2);
  for (unsigned d = 3; d <= 6; ++d) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto l = random_structure(rng, 2, d, sign);
      const auto z = oracle::random_point(rng, 4);
      std::vector<mpq_class> a(4);
      for (std::size_t i = 0; i < 4; ++i) a[i] = l.a()[i].value();
      mpq_class wk = 1;
      for (unsigned k = 0; k + 1 < d; ++k) wk *= oracle::omega(2, a, z);
      const mpq_class c = mpq_class(to_int(sign), d - 2) * wk;
      const auto got = f_map(l.space(), l.a(), d, sign)(oracle::to_rationals(z));
      for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(got[i].value(), z[i] + c * a[i]);
    }
  }
}

TEST(FMap, ConjugatesThetaToCanonical) {
  SampleRng rng(3);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (unsigned d = 3; d <= 6; ++d) {
      for (const Sign sign : {Sign::plus, Sign::minus}) {
        const auto l = random_structure(rng, m, d, sign);
        const PolyMap f = f_map(l.space(), l.a(), d, sign);
        const auto canonical = LiouvilleStructure::canonical(l.space());
        EXPECT_TRUE(is_exact_pullback_equal(f, canonical, l));
        expect_pointwise_pullback(f, canonical, l, rng);
      }
    }
  }
}

TEST(FMap, GenericPullbackAgreesAtLowDegree) {
  const SymplecticSpace s(1);
  const LiouvilleStructure l(s, vec({1, 0}), 3);
  EXPECT_EQ(pullback(f_map(s, l.a(), 3), theta_form(l)), theta_form(LiouvilleStructure::canonical(s)));
}

TEST(FMap, InverseBothWays) {
  SampleRng rng(4);
  for (unsigned d = 3; d <= 6; ++d) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const std::size_t m = d <= 4 ? 2 : 1;
      const auto l = random_structure(rng, m, d, sign);
      const PolyMap f = f_map(l.space(), l.a(), d, sign);
      const PolyMap g = f_map_inverse(l.space(), l.a(), d, sign);
      EXPECT_EQ(compose(f, g), PolyMap::identity(2 * m));
      EXPECT_EQ(compose(g, f), PolyMap::identity(2 * m));
    }
  }
}

// --- make_automorphism ---

TEST(MakeAutomorphism, IdentityGammaGivesIdentity) {
  SampleRng rng(5);
  for (unsigned d = 0; d <= 6; ++d) {
    const auto l = random_structure(rng, 1, d, Sign::minus);
    EXPECT_EQ(make_automorphism(l, LinearMap::identity(2)), PolyMap::identity(2));
  }
}

TEST(MakeAutomorphism, QuadraticMinusIdentity) {
  SampleRng rng(6);
  const auto l = random_structure(rng, 2, 2, Sign::plus);
  const LinearMap minus = LinearMap::scalar(4, Rational(-1));
  EXPECT_EQ(make_automorphism(l, minus), minus.to_polymap());
}

TEST(MakeAutomorphism, LinearTransvectionExample) {
  const SymplecticSpace s(1);
  const LiouvilleStructure l(s, vec({1, 0}), 1);
  const LinearMap gamma = transvection(s, vec({1, 0}), Rational(1));
  const PolyMap g = make_automorphism(l, gamma);
  SampleRng rng(7);
  for (int k = 0; k < 5; ++k) {
    const Vector z = random_vector(s, rng);
    EXPECT_EQ(Vector(g(z.entries())), gamma.apply(z + l.a()) - l.a());
  }
  EXPECT_TRUE(is_exact_pullback_equal(g, l, l));
  expect_pointwise_pullback(g, l, l, rng);
}

TEST(MakeAutomorphism, RejectsNonSymplectic) {
  const SymplecticSpace s(1);
  const std::vector<std::vector<Rational>> m{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
  for (unsigned d = 0; d <= 4; ++d) {
    EXPECT_THROW(make_automorphism(LiouvilleStructure(s, vec({1, 0}), d), LinearMap(m)), ArgumentError);
  }
}

TEST(MakeAutomorphism, QuadraticRequiresStabilizer) {
  const SymplecticSpace s(1);
  const LiouvilleStructure l(s, vec({1, 0}), 2);
  EXPECT_THROW(make_automorphism(l, map_vector_to_vector(s, vec({1, 0}), vec({0, 1}))), PreconditionViolation);
}

TEST(MakeAutomorphism, SoundnessAndRoundTrip) {
  SampleRng rng(8);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (unsigned d = 0; d <= 6; ++d) {
      if (m == 2 && d >= 5) continue;
      for (const Sign sign : {Sign::plus, Sign::minus}) {
        const auto l = random_structure(rng, m, d, sign);
        for (const Sign stab : {Sign::plus, Sign::minus}) {
          const LinearMap gamma = automorphism_gamma(rng, l, stab);
          const PolyMap g = make_automorphism(l, gamma);
          EXPECT_TRUE(is_exact_pullback_equal(g, l, l)) << l.describe();
          const DecompositionResult dec = decompose(l, g);
          EXPECT_EQ(dec.gamma, gamma);
          EXPECT_EQ(dec.case_tag, l.family());
          if (l.family() == StructureFamily::quadratic) {
            ASSERT_TRUE(dec.lambda.has_value());
            EXPECT_EQ(*dec.lambda, Rational(to_int(stab)));
          } else {
            EXPECT_FALSE(dec.lambda.has_value());
          }
          if (m == 1 && d <= 4) expect_pointwise_pullback(g, l, l, rng);
        }
      }
    }
  }
}

TEST(MakeAutomorphism, LinearFixesMinusA) {
  SampleRng rng(9);
  for (const Sign sign : {Sign::plus, Sign::minus}) {
    const auto l = random_structure(rng, 2, 1, sign);
    const PolyMap g = make_automorphism(l, random_symplectic(l.space(), rng.next(), 5));
    const Vector fixed = -(l.epsilon() * l.a());
    EXPECT_EQ(Vector(g(fixed.entries())), fixed);
  }
}

TEST(MakeAutomorphism, HigherDegreeMatchesExplicitConjugation) {
  SampleRng rng(10);
  for (unsigned d = 3; d <= 4; ++d) {
    const auto l = random_structure(rng, 1, d, Sign::minus);
    const LinearMap gamma = random_symplectic(l.space(), rng.next(), 3);
    const PolyMap expected = compose(f_map(l.space(), l.a(), d, l.sign()),
                                     compose(gamma.to_polymap(), f_map_inverse(l.space(), l.a(), d, l.sign())));
    EXPECT_EQ(make_automorphism(l, gamma), expected);
  }
}

TEST(MakeAutomorphism, GroupClosure) {
  SampleRng rng(11);
  for (unsigned d = 0; d <= 3; ++d) {
    const auto l = random_structure(rng, 1, d, Sign::plus);
    const LinearMap g1 = automorphism_gamma(rng, l);
    const LinearMap g2 = automorphism_gamma(rng, l, Sign::minus);
    const PolyMap composite = compose(make_automorphism(l, g1), make_automorphism(l, g2));
    EXPECT_TRUE(is_exact_pullback_equal(composite, l, l));
    EXPECT_EQ(decompose(l, composite).gamma, g1 * g2);
  }
}

// --- decompose ---

TEST(Decompose, Examples) {
  const SymplecticSpace s(1);
  const LiouvilleStructure quad(s, vec({1, 0}), 2);
  const DecompositionResult id = decompose(quad, PolyMap::identity(2));
  EXPECT_EQ(id.gamma, LinearMap::identity(2));
  ASSERT_TRUE(id.lambda.has_value());
  EXPECT_EQ(*id.lambda, Rational(1));

  const DecompositionResult neg = decompose(quad, LinearMap::scalar(2, Rational(-1)).to_polymap());
  EXPECT_EQ(neg.gamma, LinearMap::scalar(2, Rational(-1)));
  EXPECT_EQ(*neg.lambda, Rational(-1));
}

TEST(Decompose, HigherDegreeAgreesWithNaiveRoute) {
  // γ = f⁻¹ ∘ g ∘ f computed by full expansion, at a size where that is cheap.
  SampleRng rng(12);
  const SymplecticSpace s(1);
  for (const Sign sign : {Sign::plus, Sign::minus}) {
    const LiouvilleStructure l(s, random_nonzero_vector(s, rng), 3, sign);
    const LinearMap gamma = random_symplectic(s, rng.next(), 3);
    const PolyMap g = make_automorphism(l, gamma);
    const PolyMap naive = compose(f_map_inverse(s, l.a(), 3, sign), compose(g, f_map(s, l.a(), 3, sign)));
    EXPECT_EQ(naive, gamma.to_polymap());
    EXPECT_EQ(decompose(l, g).gamma, gamma);
  }
}

TEST(Decompose, RejectsNonAutomorphism) {
  const SymplecticSpace s(1);
  const auto canonical = LiouvilleStructure::canonical(s);
  EXPECT_THROW(decompose(canonical, translation_map(s, vec({1, 0}))), NotAnAutomorphismError);
  const LiouvilleStructure quad(s, vec({1, 0}), 2);
  EXPECT_THROW(decompose(quad, map_vector_to_vector(s, vec({1, 0}), vec({0, 1})).to_polymap()),
               NotAnAutomorphismError);
}

TEST(Decompose, JsonShape) {
  const SymplecticSpace s(1);
  const LiouvilleStructure quad(s, vec({1, 0}), 2);
  const auto j = nlohmann::json::parse(to_json(decompose(quad, LinearMap::scalar(2, Rational(-1)).to_polymap())));
  EXPECT_EQ(j["case_tag"], "quadratic");
  EXPECT_EQ(j["lambda"], "-1");
  EXPECT_EQ(j["gamma"][0][0], "-1");
  const auto lin = nlohmann::json::parse(to_json(decompose(LiouvilleStructure(s, vec({1, 0}), 1), PolyMap::identity(2))));
  EXPECT_FALSE(lin.contains("lambda"));
}

// --- is_exact_pullback_equal and falsification ---

TEST(ExactPullback, Examples) {
  SampleRng rng(13);
  for (unsigned d = 0; d <= 4; ++d) {
    const auto l = random_structure(rng, 1, d, Sign::plus);
    EXPECT_TRUE(is_exact_pullback_equal(PolyMap::identity(2), l, l));
  }
  const SymplecticSpace s(2);
  const auto canonical = LiouvilleStructure::canonical(s);
  for (int k = 0; k < 20; ++k) {
    EXPECT_FALSE(is_exact_pullback_equal(translation_map(s, random_nonzero_vector(s, rng)), canonical, canonical));
  }
}

TEST(ExactPullback, QuadraticSignObstruction) {
  SampleRng rng(14);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (int k = 0; k < 20; ++k) {
      const auto plus = random_structure(rng, m, 2, Sign::plus);
      const LiouvilleStructure minus(plus.space(), plus.a(), 2, Sign::minus);
      const LinearMap gamma =
          stabilizer_sample(plus.space(), plus.a(), rng.next(), k % 2 ? Sign::plus : Sign::minus, 4);
      EXPECT_FALSE(is_exact_pullback_equal(gamma.to_polymap(), plus, minus));
      EXPECT_FALSE(is_exact_pullback_equal(gamma.to_polymap(), minus, plus));
      EXPECT_THROW(make_isomorphism(plus, minus, gamma), ObstructionError);
    }
  }
}

TEST(ExactPullback, WrongConjugateUsuallyFails) {
  SampleRng rng(15);
  for (unsigned d = 3; d <= 4; ++d) {
    const auto la = random_structure(rng, 1, d, Sign::plus);
    const auto lb = random_structure(rng, 1, d, Sign::plus);
    if (theta_form(la) == theta_form(lb)) continue;
    int failures = 0;
    for (int k = 0; k < 3; ++k) {
      failures += !is_exact_pullback_equal(make_automorphism(lb, random_symplectic(la.space(), rng.next(), 4)), la, la);
    }
    EXPECT_GE(failures, 1);
  }
}

// --- make_isomorphism ---

TEST(MakeIsomorphism, SameStructureIdentity) {
  SampleRng rng(16);
  for (unsigned d = 0; d <= 6; ++d) {
    const auto l = random_structure(rng, 1, d, Sign::minus);
    EXPECT_EQ(make_isomorphism(l, l, LinearMap::identity(2)), PolyMap::identity(2));
  }
}

TEST(MakeIsomorphism, DistinguishedHigherDegree) {
  SampleRng rng(17);
  for (unsigned d = 3; d <= 6; ++d) {
    const std::size_t m = d <= 3 ? 2 : 1;
    const auto la = random_structure(rng, m, d, Sign::plus);
    const auto lb = random_structure(rng, m, d, Sign::plus);
    const PolyMap g = make_isomorphism(la, lb, LinearMap::identity(2 * m));
    EXPECT_EQ(g, compose(f_map(lb.space(), lb.a(), d), f_map_inverse(la.space(), la.a(), d)));
    EXPECT_TRUE(is_exact_pullback_equal(g, la, lb));
  }
}

TEST(MakeIsomorphism, LinearIsTranslation) {
  SampleRng rng(18);
  const auto la = random_structure(rng, 2, 1, Sign::plus);
  const auto lb = random_structure(rng, 2, 1, Sign::plus);
  const PolyMap g = make_isomorphism(la, lb, LinearMap::identity(4));
  EXPECT_EQ(g, translation_map(la.space(), la.a() - lb.a()));
  EXPECT_TRUE(is_exact_pullback_equal(g, la, lb));
  expect_pointwise_pullback(g, la, lb, rng);

  const auto canonical = LiouvilleStructure::canonical(la.space());
  const PolyMap tau = make_isomorphism(la, canonical, LinearMap::identity(4));
  EXPECT_EQ(tau, translation_map(la.space(), la.a()));
  EXPECT_TRUE(is_exact_pullback_equal(tau, la, canonical));
}

TEST(MakeIsomorphism, QuadraticWitness) {
  SampleRng rng(19);
  for (std::size_t m = 1; m <= 2; ++m) {
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const auto la = random_structure(rng, m, 2, sign);
      const auto lb = random_structure(rng, m, 2, sign);
      const LinearMap gamma = map_vector_to_vector(la.space(), la.a(), lb.a());
      const PolyMap g = make_isomorphism(la, lb, gamma);
      EXPECT_TRUE(is_exact_pullback_equal(g, la, lb));
      const LinearMap flipped = LinearMap::scalar(2 * m, Rational(-1)) * gamma;
      EXPECT_TRUE(is_exact_pullback_equal(make_isomorphism(la, lb, flipped), la, lb));
    }
  }
}

TEST(MakeIsomorphism, ErrorPaths) {
  const SymplecticSpace s(1);
  const LiouvilleStructure lin(s, vec({1, 0}), 1);
  const LiouvilleStructure quad(s, vec({1, 0}), 2);
  const LiouvilleStructure quad_b(s, vec({0, 1}), 2);
  const LiouvilleStructure cubic(s, vec({1, 1}), 3);
  const LinearMap id = LinearMap::identity(2);
  EXPECT_THROW(make_isomorphism(lin, cubic, id), UnsupportedPairError);
  EXPECT_THROW(make_isomorphism(quad, lin, id), UnsupportedPairError);
  EXPECT_THROW(make_isomorphism(quad, LiouvilleStructure::canonical(s), id), UnsupportedPairError);
  EXPECT_THROW(make_isomorphism(quad, quad_b, id), PreconditionViolation);
  EXPECT_THROW(make_isomorphism(LiouvilleStructure(s, vec({1, 0}), 1), LiouvilleStructure(SymplecticSpace(2), vec({1, 0, 0, 0}), 1),
                                id),
               ArgumentError);
}

TEST(MakeIsomorphism, CanonicalEndpoints) {
  SampleRng rng(20);
  for (unsigned d : {1u, 3u, 4u}) {
    const auto l = random_structure(rng, 1, d, Sign::minus);
    const auto canonical = LiouvilleStructure::canonical(l.space());
    const LinearMap gamma = random_symplectic(l.space(), rng.next(), 3);
    EXPECT_TRUE(is_exact_pullback_equal(make_isomorphism(canonical, l, gamma), canonical, l));
    EXPECT_TRUE(is_exact_pullback_equal(make_isomorphism(l, canonical, gamma), l, canonical));
  }
}

TEST(MakeIsomorphism, HigherDegreeMixedSigns) {
  SampleRng rng(21);
  const auto la = random_structure(rng, 1, 4, Sign::plus);
  const LiouvilleStructure lb(la.space(), random_nonzero_vector(la.space(), rng), 4, Sign::minus);
  EXPECT_TRUE(is_exact_pullback_equal(make_isomorphism(la, lb, LinearMap::identity(2)), la, lb));
}

}  // namespace
