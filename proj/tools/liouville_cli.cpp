// liouville: batch verifier, flow trace emitter and Sp sampler.

#include "liouville/commands.hpp"
#include "liouville/errors.hpp"
#include "liouville/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace liouville;

struct VerifyArgs {
  std::string m = "1,2";
  std::string degrees = "0,1,2,3,4,5,6";
  std::string signs = "+,-";
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  bool inject_fault = false;
  double float_tol_flow = 1e-8;
  double float_tol_scaling = 1e-5;
  std::size_t rk4_steps = 2000;
  std::size_t gamma_factors = 4;
  std::size_t high_degree_map_max_m = 1;
};

struct FlowArgs {
  std::string a;
  std::string z;
  unsigned degree = 0;
  std::string sign = "+";
  std::string t_range = "0:1:0.1";
  std::size_t rk4_steps = 2000;
  std::string out;
};

struct SampleArgs {
  std::size_t m = 1;
  std::uint64_t seed = 42;
  std::size_t count = 4;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

int run_verify(const VerifyArgs& args) {
  if (args.format != "json") throw UsageError("unsupported format '" + args.format + "'");
  VerifyConfig config;
  config.m_list.clear();
  for (const unsigned m : parse_unsigned_list(args.m)) config.m_list.push_back(m);
  config.degrees = parse_unsigned_list(args.degrees);
  config.signs = parse_sign_list(args.signs);
  config.trials = args.trials;
  config.seed = args.seed;
  config.float_tol_flow = args.float_tol_flow;
  config.float_tol_scaling = args.float_tol_scaling;
  config.rk4_steps = args.rk4_steps;
  config.gamma_factors = args.gamma_factors;
  config.high_degree_map_max_m = args.high_degree_map_max_m;
  config.inject_fault = args.inject_fault;

  const Report report = run_verification_suite(config);
  write_output(args.out, to_json(report) + "\n");
  std::cerr << "verify: " << report.checks.size() << " checks, " << report.passed << " pass, " << report.failed
            << " fail, " << report.errors << " error\n";
  return report.ok() ? 0 : 1;
}

int run_flow(const FlowArgs& args) {
  const RealVector z = parse_real_list(args.z);
  if (z.size() % 2 != 0 || z.empty()) throw UsageError("--z needs an even number of coordinates");
  const SymplecticSpace space(z.size() / 2);
  const Vector a = args.a.empty() ? Vector::zero(space.dimension()) : Vector(parse_rational_list(args.a));
  if (a.size() != space.dimension()) throw UsageError("--a and --z must have the same length");
  const LiouvilleStructure l(space, a, args.degree, parse_sign(args.sign));
  const TimeRange range = parse_time_range(args.t_range);

  if (args.out.empty() || args.out == "-") {
    emit_flow_trace(l, z, range, args.rk4_steps, std::cout);
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + args.out + "'");
    emit_flow_trace(l, z, range, args.rk4_steps, file);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouville structure verifier"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the identity and falsification suite");
  v->add_option("--m", verify.m, "Half-dimensions, comma separated");
  v->add_option("--degrees", verify.degrees, "Degrees d, comma separated");
  v->add_option("--signs", verify.signs, "Signs, e.g. +,-");
  v->add_option("--trials", verify.trials, "Trials per check cell")->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "Base seed");
  v->add_option("--out", verify.out, "Report path (stdout if omitted)");
  v->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"json"}));
  v->add_flag("--inject-fault", verify.inject_fault, "Perturb f_a to check that the suite can fail");
  v->add_option("--float-tol-flow", verify.float_tol_flow, "Closed form vs RK4 tolerance");
  v->add_option("--float-tol-scaling", verify.float_tol_scaling, "Scaling law tolerance");
  v->add_option("--rk4-steps", verify.rk4_steps, "RK4 steps");
  v->add_option("--gamma-factors", verify.gamma_factors, "Transvections per sampled symplectic matrix");
  v->add_option("--high-degree-map-max-m", verify.high_degree_map_max_m,
                "Largest m for map-level checks at d >= 4");

  FlowArgs flow;
  auto* f = app.add_subcommand("flow", "Emit a closed-form vs RK4 flow trace as CSV");
  f->add_option("--a", flow.a, "Vector a as p1,..,pm,q1,..,qm (rationals)");
  f->add_option("--z", flow.z, "Initial point p1,..,pm,q1,..,qm")->required();
  f->add_option("--degree", flow.degree, "Degree d");
  f->add_option("--sign", flow.sign, "+ or -");
  f->add_option("--t-range", flow.t_range, "min:max:step");
  f->add_option("--rk4-steps", flow.rk4_steps, "RK4 steps");
  f->add_option("--out", flow.out, "CSV path (stdout if omitted)");

  SampleArgs sample;
  auto* s = app.add_subcommand("sample-sp", "Print a seeded symplectic matrix");
  s->add_option("--m", sample.m, "Half-dimension");
  s->add_option("--seed", sample.seed, "Seed");
  s->add_option("--count", sample.count, "Number of transvection factors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*v) return run_verify(verify);
    if (*f) return run_flow(flow);
    if (*s) {
      std::cout << sample_sp_output(sample.m, sample.seed, sample.count) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
