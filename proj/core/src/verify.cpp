#include "liouville/verify.hpp"

#include "liouville/automorphism.hpp"
#include "liouville/errors.hpp"
#include "liouville/flow.hpp"
#include "liouville/forms.hpp"
#include "liouville/structure.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <optional>

namespace liouville {

namespace {

using json = nlohmann::ordered_json;

constexpr double kGroupLawTol = 1e-9;
constexpr double kGeneratorStep = 1e-6;
constexpr double kGeneratorTol = 1e-5;
constexpr double kJacobianStep = 1e-6;
constexpr double kScalingTimes[] = {-1.0, 0.5, 1.0};
constexpr std::size_t kWrongConjugateWitnesses = 3;

struct Cell {
  const VerifyConfig& config;
  SymplecticSpace space;
  unsigned degree;
  Sign sign;
};

/// nullopt on pass, otherwise a JSON witness.
using TrialResult = std::optional<json>;
using TrialFn = std::function<TrialResult(const Cell&, SampleRng&)>;

enum class Scope { per_m, per_cell };

struct CheckEntry {
  const char* name;
  Scope scope;
  std::function<bool(const VerifyConfig&, std::size_t m, unsigned d)> applies;
  TrialFn trial;
};

// ---------------------------------------------------------------------------
// helpers

json to_json_value(const Vector& v) { return v.to_strings(); }
json to_json_value(const LinearMap& g) { return g.to_strings(); }
json to_json_value(std::span<const double> v) { return std::vector<double>(v.begin(), v.end()); }

json structure_json(const LiouvilleStructure& l) {
  return json{{"m", l.space().m()},
              {"degree", l.degree()},
              {"sign", l.sign() == Sign::plus ? "+" : "-"},
              {"a", to_json_value(l.a())}};
}

json form_difference(const OneForm& got, const OneForm& want) {
  for (std::size_t i = 0; i < got.coefficients().size(); ++i) {
    const Polynomial diff = got[i] - want[i];
    if (!diff.is_zero()) return json{{"coefficient", i}, {"difference", diff.to_string()}};
  }
  return json::object();
}

LiouvilleStructure structure(const Cell& cell, const Vector& a) { return {cell.space, a, cell.degree, cell.sign}; }

Vector nonzero_a(const Cell& cell, SampleRng& rng) { return random_nonzero_vector(cell.space, rng); }

/// Small a for the float checks: |a_i| ≤ 1/(4m), so |Ω(a, z)| ≤ 1 when ‖z‖∞ ≤ 2.
Vector flow_a(const Cell& cell, SampleRng& rng) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < cell.space.dimension(); ++i) {
    e.push_back(rng.small_rational() / Rational(36 * static_cast<long>(cell.space.m())));
  }
  return Vector(std::move(e));
}

RealVector random_point(const Cell& cell, SampleRng& rng, double bound) {
  RealVector z(cell.space.dimension());
  for (auto& x : z) x = rng.uniform(-bound, bound);
  return z;
}

LinearMap sample_gamma(const Cell& cell, SampleRng& rng) {
  return random_symplectic(cell.space, rng.next(), cell.config.gamma_factors);
}

Sign random_sign(SampleRng& rng) { return rng.index(2) == 0 ? Sign::plus : Sign::minus; }

// γ for an automorphism of l: stabilizer samples (random sign) when quadratic.
std::pair<LinearMap, Sign> sample_automorphism_gamma(const Cell& cell, const LiouvilleStructure& l, SampleRng& rng) {
  if (l.family() == StructureFamily::quadratic) {
    const Sign s = random_sign(rng);
    return {stabilizer_sample(cell.space, l.a(), rng.next(), s, cell.config.gamma_factors), s};
  }
  return {sample_gamma(cell, rng), Sign::plus};
}

PolyMap suite_f_map(const Cell& cell, const Vector& a) {
  PolyMap f = f_map(cell.space, a, cell.degree, cell.sign);
  if (!cell.config.inject_fault) return f;
  // Fault: scale the nonlinear part of the first affected component by 1001/1000.
  std::vector<Polynomial> comps = f.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Polynomial nonlinear = comps[i] - Polynomial::variable(comps[i].num_vars(), i);
    comps[i] += nonlinear * Rational(1, 1000);
    break;
  }
  return PolyMap(f.num_vars(), std::move(comps));
}

bool map_checks_enabled(const VerifyConfig& c, std::size_t m, unsigned d) {
  return d <= 3 || m <= c.high_degree_map_max_m;
}

// Composites of two degree-(d−1)² maps reach degree (d−1)⁴ before cancelling.
bool closure_enabled(const VerifyConfig& c, std::size_t m, unsigned d) {
  return d <= 2 || (d == 3 && m <= c.high_degree_map_max_m);
}

auto any_degree = [](const VerifyConfig&, std::size_t, unsigned) { return true; };
auto degree_is(unsigned want) {
  return [want](const VerifyConfig&, std::size_t, unsigned d) { return d == want; };
}

// ---------------------------------------------------------------------------
// liouville module checks

TrialResult exact_potential(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  if (exterior_derivative(theta_form(l)) == TwoForm::omega(cell.space)) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"reason", "d(theta^a) != omega"}};
}

TrialResult contraction(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const OneForm got = interior_product(liouville_field(l), TwoForm::omega(cell.space));
  const OneForm want = theta_form(l);
  if (got == want) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"residual", form_difference(got, want)}};
}

TrialResult theta0_sp_invariance(const Cell& cell, SampleRng& rng) {
  const LinearMap gamma = sample_gamma(cell, rng);
  const OneForm theta0 = theta_form(LiouvilleStructure::canonical(cell.space));
  const OneForm got = pullback(gamma.to_polymap(), theta0);
  if (got == theta0) return std::nullopt;
  return json{{"gamma", to_json_value(gamma)}, {"residual", form_difference(got, theta0)}};
}

TrialResult degeneracy_zero_a(const Cell& cell, SampleRng& rng) {
  const auto zero = structure(cell, Vector::zero(cell.space.dimension()));
  const auto canon = LiouvilleStructure::canonical(cell.space);
  auto fail = [&](const char* what) -> TrialResult {
    return json{{"structure", structure_json(zero)}, {"disagreement", what}};
  };
  if (!psi(zero).is_zero()) return fail("psi");
  if (!(theta_form(zero) == theta_form(canon))) return fail("theta_form");
  if (!(liouville_field(zero) == liouville_field(canon))) return fail("liouville_field");

  const LinearMap gamma = sample_gamma(cell, rng);
  const PolyMap g = make_automorphism(zero, gamma);
  if (!(g == make_automorphism(canon, gamma)) || !(g == gamma.to_polymap())) return fail("make_automorphism");
  const auto dec = decompose(zero, g);
  if (dec.case_tag != StructureFamily::canonical || !(dec.gamma == gamma) || dec.lambda) return fail("decompose");
  if (cell.degree >= 3 && !(f_map(cell.space, zero.a(), cell.degree, cell.sign) == PolyMap::identity(cell.space.dimension()))) {
    return fail("f_map");
  }

  const RealVector z = random_point(cell, rng, 2.0);
  const double t = rng.uniform(-1.0, 1.0);
  if (flow_closed_form(zero, t, z) != flow_closed_form(canon, t, z)) return fail("flow_closed_form");
  if (flow_numeric(zero, t, z, 50) != flow_numeric(canon, t, z, 50)) return fail("flow_numeric");
  return std::nullopt;
}

TrialResult psi_parity(const Cell& cell, SampleRng& rng) {
  const Vector a = nonzero_a(cell, rng);
  const auto l = structure(cell, a);
  const auto l_neg = structure(cell, -a);
  const Rational parity = cell.degree % 2 == 0 ? Rational(1) : Rational(-1);
  if (!(psi(l_neg) == psi(l) * parity)) {
    return json{{"structure", structure_json(l)}, {"reason", "psi(-a) != (-1)^d psi(a)"}};
  }
  if (cell.degree % 2 == 1) {
    const LiouvilleStructure flipped_sign(cell.space, a, cell.degree, flipped(cell.sign));
    if (!(theta_form(flipped_sign) == theta_form(l_neg))) {
      return json{{"structure", structure_json(l)}, {"reason", "odd degree: (a, -eps) and (-a, eps) differ"}};
    }
  }
  return std::nullopt;
}

TrialResult flow_closed_vs_numeric(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, flow_a(cell, rng));
  const RealVector z = random_point(cell, rng, 2.0);
  const double t = rng.uniform(-1.0, 1.0);
  const double err = max_abs_difference(flow_closed_form(l, t, z), flow_numeric(l, t, z, cell.config.rk4_steps));
  if (err < cell.config.float_tol_flow) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"z", to_json_value(z)}, {"t", t}, {"err", err}};
}

TrialResult flow_group_law(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, flow_a(cell, rng));
  const RealVector z = random_point(cell, rng, 2.0);
  const double s = rng.uniform(-1.0, 1.0);
  const double t = rng.uniform(-1.0, 1.0);
  const double err = max_abs_difference(flow_closed_form(l, s + t, z), flow_closed_form(l, s, flow_closed_form(l, t, z)));
  if (err < kGroupLawTol) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"z", to_json_value(z)}, {"s", s}, {"t", t}, {"err", err}};
}

TrialResult flow_generator(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, flow_a(cell, rng));
  const RealVector z = random_point(cell, rng, 2.0);
  const RealVector moved = flow_closed_form(l, kGeneratorStep, z);
  RealVector quotient(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) quotient[i] = (moved[i] - z[i]) / kGeneratorStep;
  const double err = max_abs_difference(quotient, field_value(l, z));
  if (err < kGeneratorTol) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"z", to_json_value(z)}, {"err", err}};
}

TrialResult flow_scaling(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, flow_a(cell, rng));
  const RealVector z = random_point(cell, rng, 2.0);
  const auto j_omega = omega_matrix_real(cell.space);
  const std::size_t n = z.size();
  for (const double t : kScalingTimes) {
    const auto jac = flow_jacobian_fd(l, t, z, kJacobianStep);
    double err = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        double v = 0.0;  // (JᵀJ_Ω J)(r, c)
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t k = 0; k < n; ++k) v += jac[i][r] * j_omega[i][k] * jac[k][c];
        }
        err = std::max(err, std::abs(v - std::exp(t) * j_omega[r][c]));
      }
    }
    if (err >= cell.config.float_tol_scaling) {
      return json{{"structure", structure_json(l)}, {"z", to_json_value(z)}, {"t", t}, {"err", err}};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// autgroup module checks

TrialResult f_conjugation(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const PolyMap f = suite_f_map(cell, l.a());
  const auto canon = LiouvilleStructure::canonical(cell.space);
  if (is_exact_pullback_equal(f, canon, l)) return std::nullopt;
  return json{{"structure", structure_json(l)},
              {"reason", "f_a^* theta^a != theta^0"},
              {"residual", form_difference(pullback_theta(f, l), theta_form(canon))}};
}

TrialResult f_inverse(const Cell& cell, SampleRng& rng) {
  const Vector a = nonzero_a(cell, rng);
  const PolyMap f = f_map(cell.space, a, cell.degree, cell.sign);
  const PolyMap f_inv = f_map_inverse(cell.space, a, cell.degree, cell.sign);
  const PolyMap id = PolyMap::identity(cell.space.dimension());
  if (compose(f, f_inv) == id && compose(f_inv, f) == id) return std::nullopt;
  return json{{"structure", structure_json(structure(cell, a))}, {"reason", "f_a o f_a^-1 != id"}};
}

TrialResult translation_pullback(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const PolyMap tau = translation_map(cell.space, l.epsilon() * l.a());
  if (is_exact_pullback_equal(tau, l, LiouvilleStructure::canonical(cell.space))) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"reason", "tau_a^* theta^0 != theta^a"}};
}

TrialResult automorphism_soundness(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const auto [gamma, sign] = sample_automorphism_gamma(cell, l, rng);
  if (is_exact_pullback_equal(make_automorphism(l, gamma), l, l)) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}};
}

TrialResult round_trip(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const auto [gamma, sign] = sample_automorphism_gamma(cell, l, rng);
  const DecompositionResult dec = decompose(l, make_automorphism(l, gamma));
  bool ok = dec.gamma == gamma && dec.case_tag == l.family();
  if (l.family() == StructureFamily::quadratic) ok = ok && dec.lambda && *dec.lambda == Rational(to_int(sign));
  if (ok) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}, {"decomposition", json::parse(to_json(dec))}};
}

TrialResult group_closure(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const auto [g1, s1] = sample_automorphism_gamma(cell, l, rng);
  const auto [g2, s2] = sample_automorphism_gamma(cell, l, rng);
  const PolyMap composite = compose(make_automorphism(l, g1), make_automorphism(l, g2));
  if (!is_exact_pullback_equal(composite, l, l)) {
    return json{{"structure", structure_json(l)}, {"reason", "composite does not preserve theta^a"}};
  }
  if (decompose(l, composite).gamma == g1 * g2) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"reason", "composite decomposes to the wrong gamma"}};
}

TrialResult linear_fixed_point(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const LinearMap gamma = sample_gamma(cell, rng);
  const Vector fixed = -(l.epsilon() * l.a());
  const Vector image(make_automorphism(l, gamma)(fixed.entries()));
  if (image == fixed) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}, {"image", to_json_value(image)}};
}

TrialResult quadratic_set_preservation(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const auto [gamma, sign] = sample_automorphism_gamma(cell, l, rng);
  const Vector image(make_automorphism(l, gamma)(l.a().entries()));
  if (image == l.a() || image == -l.a()) return std::nullopt;
  return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}, {"image", to_json_value(image)}};
}

TrialResult falsify_translation(const Cell& cell, SampleRng& rng) {
  const Vector a = nonzero_a(cell, rng);
  const auto canon = LiouvilleStructure::canonical(cell.space);
  if (!is_exact_pullback_equal(translation_map(cell.space, a), canon, canon)) return std::nullopt;
  return json{{"a", to_json_value(a)}, {"reason", "translation preserved theta^0"}};
}

TrialResult falsify_quadratic_non_stabilizer(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  LinearMap gamma = sample_gamma(cell, rng);
  while (gamma.apply(l.a()) == l.a() || gamma.apply(l.a()) == -l.a()) gamma = sample_gamma(cell, rng);
  if (is_exact_pullback_equal(gamma.to_polymap(), l, l)) {
    return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}, {"reason", "non-stabilizer preserved theta^a"}};
  }
  try {
    (void)make_automorphism(l, gamma);
  } catch (const PreconditionViolation&) {
    return std::nullopt;
  }
  return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}, {"reason", "make_automorphism accepted a non-stabilizer"}};
}

TrialResult falsify_wrong_conjugate(const Cell& cell, SampleRng& rng) {
  const auto la = structure(cell, nonzero_a(cell, rng));
  Vector b = nonzero_a(cell, rng);
  while (theta_form(structure(cell, b)) == theta_form(la)) b = nonzero_a(cell, rng);
  const auto lb = structure(cell, b);
  for (std::size_t k = 0; k < kWrongConjugateWitnesses; ++k) {
    if (!is_exact_pullback_equal(make_automorphism(lb, sample_gamma(cell, rng)), la, la)) return std::nullopt;
  }
  return json{{"structure_a", structure_json(la)}, {"structure_b", structure_json(lb)},
              {"reason", "every sampled f_b o gamma o f_b^-1 preserved theta^a"}};
}

TrialResult quadratic_sign_obstruction(const Cell& cell, SampleRng& rng) {
  const auto l = structure(cell, nonzero_a(cell, rng));
  const LiouvilleStructure opposite(cell.space, l.a(), cell.degree, flipped(cell.sign));
  const LinearMap gamma = stabilizer_sample(cell.space, l.a(), rng.next(), random_sign(rng), cell.config.gamma_factors);
  if (is_exact_pullback_equal(gamma.to_polymap(), l, opposite)) {
    return json{{"structure", structure_json(l)}, {"gamma", to_json_value(gamma)}, {"reason", "cross-sign pullback matched"}};
  }
  try {
    (void)make_isomorphism(l, opposite, gamma);
  } catch (const ObstructionError&) {
    return std::nullopt;
  }
  return json{{"structure", structure_json(l)}, {"reason", "make_isomorphism did not report the obstruction"}};
}

TrialResult isomorphism_catalogue(const Cell& cell, SampleRng& rng) {
  const auto la = structure(cell, nonzero_a(cell, rng));
  const auto lb = structure(cell, nonzero_a(cell, rng));
  const std::size_t n = cell.space.dimension();
  const LinearMap gamma = cell.degree == 2 ? map_vector_to_vector(cell.space, la.a(), lb.a()) : LinearMap::identity(n);
  if (!is_exact_pullback_equal(make_isomorphism(la, lb, gamma), la, lb)) {
    return json{{"structure_a", structure_json(la)}, {"structure_b", structure_json(lb)}, {"reason", "distinguished isomorphism failed"}};
  }
  if (cell.degree == 1) {
    const auto canon = LiouvilleStructure::canonical(cell.space);
    const PolyMap to_canonical = make_isomorphism(la, canon, LinearMap::identity(n));
    if (!(to_canonical == translation_map(cell.space, la.epsilon() * la.a())) ||
        !is_exact_pullback_equal(to_canonical, la, canon)) {
      return json{{"structure_a", structure_json(la)}, {"reason", "tau_a is not an isomorphism to theta^0"}};
    }
  }
  return std::nullopt;
}

const std::vector<CheckEntry>& catalogue() {
  static const std::vector<CheckEntry> entries = {
      {"liouville.exact_potential", Scope::per_cell, any_degree, exact_potential},
      {"liouville.contraction", Scope::per_cell, any_degree, contraction},
      {"liouville.theta0_sp_invariance", Scope::per_m, any_degree, theta0_sp_invariance},
      {"liouville.degeneracy_zero_a", Scope::per_cell, any_degree, degeneracy_zero_a},
      {"liouville.psi_parity", Scope::per_cell, [](const VerifyConfig&, std::size_t, unsigned d) { return d >= 1; },
       psi_parity},
      {"liouville.flow_closed_vs_numeric", Scope::per_cell, any_degree, flow_closed_vs_numeric},
      {"liouville.flow_group_law", Scope::per_cell, any_degree, flow_group_law},
      {"liouville.flow_generator", Scope::per_cell, any_degree, flow_generator},
      {"liouville.flow_scaling", Scope::per_cell, any_degree, flow_scaling},
      {"autgroup.f_conjugation", Scope::per_cell, [](const VerifyConfig&, std::size_t, unsigned d) { return d >= 3; },
       f_conjugation},
      {"autgroup.f_inverse", Scope::per_cell,
       [](const VerifyConfig& c, std::size_t m, unsigned d) { return d >= 3 && map_checks_enabled(c, m, d); },
       f_inverse},
      {"autgroup.translation_pullback", Scope::per_cell, degree_is(1), translation_pullback},
      {"autgroup.automorphism_soundness", Scope::per_cell, map_checks_enabled, automorphism_soundness},
      {"autgroup.round_trip", Scope::per_cell, map_checks_enabled, round_trip},
      {"autgroup.group_closure", Scope::per_cell, closure_enabled, group_closure},
      {"autgroup.linear_fixed_point", Scope::per_cell, degree_is(1), linear_fixed_point},
      {"autgroup.quadratic_set_preservation", Scope::per_cell, degree_is(2), quadratic_set_preservation},
      {"autgroup.falsify_translation", Scope::per_m, any_degree, falsify_translation},
      {"autgroup.falsify_quadratic_non_stabilizer", Scope::per_cell, degree_is(2), falsify_quadratic_non_stabilizer},
      {"autgroup.falsify_wrong_conjugate", Scope::per_cell,
       [](const VerifyConfig& c, std::size_t m, unsigned d) { return d >= 3 && map_checks_enabled(c, m, d); },
       falsify_wrong_conjugate},
      {"autgroup.quadratic_sign_obstruction", Scope::per_cell, degree_is(2), quadratic_sign_obstruction},
      {"autgroup.isomorphism_catalogue", Scope::per_cell,
       [](const VerifyConfig& c, std::size_t m, unsigned d) { return d >= 1 && map_checks_enabled(c, m, d); },
       isomorphism_catalogue},
  };
  return entries;
}

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

CheckResult run_cell(const CheckEntry& entry, const Cell& cell, bool per_m) {
  CheckResult result;
  result.name = entry.name;
  result.parameters.emplace_back("m", std::to_string(cell.space.m()));
  if (!per_m) {
    result.parameters.emplace_back("degree", std::to_string(cell.degree));
    result.parameters.emplace_back("sign", cell.sign == Sign::plus ? "\"+\"" : "\"-\"");
  }
  result.parameters.emplace_back("trials", std::to_string(cell.config.trials));

  const std::uint64_t cell_seed =
      mix_seed(cell.config.seed ^ name_hash(entry.name),
               cell.space.m() * 1000 + cell.degree * 10 + (cell.sign == Sign::plus ? 0 : 1));
  for (std::size_t trial = 0; trial < cell.config.trials; ++trial) {
    SampleRng rng(mix_seed(cell_seed, trial));
    ++result.trials_run;
    try {
      if (auto witness = entry.trial(cell, rng)) {
        (*witness)["trial"] = trial;
        result.status = CheckStatus::fail;
        result.witness = witness->dump();
        break;
      }
    } catch (const std::exception& e) {
      result.status = CheckStatus::error;
      result.witness = json{{"trial", trial}, {"exception", e.what()}}.dump();
      break;
    }
  }
  return result;
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::error:
      return "error";
  }
  return "unknown";
}

void VerifyConfig::validate() const {
  if (m_list.empty()) throw UsageError("config: m list is empty");
  for (const auto m : m_list) {
    if (m == 0 || 2 * m > kMaxVariables) throw UsageError("config: m must be in [1, 4], got " + std::to_string(m));
  }
  if (degrees.empty()) throw UsageError("config: degree list is empty");
  for (const auto d : degrees) {
    if (d > 12) throw UsageError("config: degree " + std::to_string(d) + " exceeds the supported maximum of 12");
  }
  if (signs.empty()) throw UsageError("config: sign list is empty");
  if (trials == 0) throw UsageError("config: trials must be at least 1");
  if (!(float_tol_flow > 0.0) || !(float_tol_scaling > 0.0)) throw UsageError("config: tolerances must be positive");
  if (rk4_steps == 0) throw UsageError("config: rk4 steps must be at least 1");
}

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& entry : catalogue()) names.emplace_back(entry.name);
  return names;
}

Report run_verification_suite(const VerifyConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  for (const auto& entry : catalogue()) {
    for (const std::size_t m : config.m_list) {
      const SymplecticSpace space(m);
      if (entry.scope == Scope::per_m) {
        report.checks.push_back(run_cell(entry, Cell{config, space, 0, Sign::plus}, true));
        continue;
      }
      for (const unsigned d : config.degrees) {
        if (!entry.applies(config, m, d)) continue;
        for (const Sign s : config.signs) report.checks.push_back(run_cell(entry, Cell{config, space, d, s}, false));
      }
    }
  }
  for (const auto& c : report.checks) {
    switch (c.status) {
      case CheckStatus::pass:
        ++report.passed;
        break;
      case CheckStatus::fail:
        ++report.failed;
        break;
      case CheckStatus::error:
        ++report.errors;
        break;
    }
  }
  return report;
}

std::string to_json(const Report& report) {
  const auto& c = report.config;
  json signs = json::array();
  for (const Sign s : c.signs) signs.push_back(s == Sign::plus ? "+" : "-");
  json out;
  out["version"] = report.version;
  out["config"] = json{{"m_list", c.m_list},
                       {"degrees", c.degrees},
                       {"signs", signs},
                       {"trials", c.trials},
                       {"seed", c.seed},
                       {"float_tol_flow", c.float_tol_flow},
                       {"float_tol_scaling", c.float_tol_scaling},
                       {"rk4_steps", c.rk4_steps},
                       {"gamma_factors", c.gamma_factors},
                       {"high_degree_map_max_m", c.high_degree_map_max_m},
                       {"inject_fault", c.inject_fault}};
  json checks = json::array();
  for (const auto& check : report.checks) {
    json params = json::object();
    for (const auto& [k, v] : check.parameters) params[k] = json::parse(v);
    json entry{{"name", check.name}, {"parameters", params}, {"status", to_string(check.status)}};
    if (!check.witness.empty()) entry["witness"] = json::parse(check.witness);
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["summary"] = json{{"total", report.checks.size()},
                        {"pass", report.passed},
                        {"fail", report.failed},
                        {"error", report.errors}};
  return out.dump(2);
}

}  // namespace liouville
