#include "liouville/commands.hpp"

#include "liouville/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace liouville {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Base 10 explicitly: GMP's default base detection reads "025" as octal.
mpz_class decimal(std::string_view digits) { return mpz_class(std::string(digits), 10); }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto bad = [&] { return UsageError("not a rational number: '" + std::string(text) + "'"); };
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty())) {
      throw bad();
    }
    const std::string digits = std::string(whole) + std::string(frac);
    value = Rational(decimal(digits.empty() ? "0" : digits), decimal("1" + std::string(frac.size(), '0')));
  } else {
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    if (!all_digits(num)) throw bad();
    if (slash == std::string_view::npos) {
      value = Rational(decimal(num), mpz_class(1));
    } else {
      const std::string_view den = body.substr(slash + 1);
      if (!all_digits(den)) throw bad();
      const mpz_class d = decimal(den);
      if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
      value = Rational(decimal(num), d);
    }
  }
  return negative ? -value : value;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

RealVector parse_real_list(std::string_view text) {
  RealVector out;
  for (const auto raw : split(text, ',')) {
    const std::string part(trim(raw));
    if (part.empty()) throw UsageError("empty entry in real list '" + std::string(text) + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("not a real number: '" + part + "'");
    }
    if (used != part.size() || !std::isfinite(v)) throw UsageError("not a real number: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
  std::vector<unsigned> out;
  for (const auto raw : split(text, ',')) {
    const auto part = trim(raw);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError("not a non-negative integer: '" + std::string(part) + "'");
    }
    out.push_back(v);
  }
  return out;
}

Sign parse_sign(std::string_view text) {
  const auto s = trim(text);
  if (s == "+" || s == "+1") return Sign::plus;
  if (s == "-" || s == "-1") return Sign::minus;
  throw UsageError("sign must be '+' or '-', got '" + std::string(text) + "'");
}

std::vector<Sign> parse_sign_list(std::string_view text) {
  std::vector<Sign> out;
  for (const auto part : split(text, ',')) out.push_back(parse_sign(part));
  return out;
}

TimeRange parse_time_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("time range must be min:max:step, got '" + std::string(text) + "'");
  RealVector v;
  for (const auto p : parts) v.push_back(parse_real_list(p).at(0));
  TimeRange r{v[0], v[1], v[2]};
  if (!(r.step > 0.0)) throw UsageError("time range step must be positive");
  if (r.min > r.max) throw UsageError("time range min exceeds max");
  return r;
}

double emit_flow_trace(const LiouvilleStructure& l, std::span<const double> z0, const TimeRange& range,
                       std::size_t rk4_steps, std::ostream& out) {
  if (!(range.step > 0.0) || range.min > range.max) throw UsageError("invalid time range");
  if (rk4_steps == 0) throw UsageError("rk4 steps must be at least 1");
  const std::size_t n = l.space().dimension();
  if (z0.size() != n) {
    throw UsageError("z has " + std::to_string(z0.size()) + " entries, expected " + std::to_string(n));
  }

  out << 't';
  for (std::size_t i = 1; i <= n; ++i) out << ",z_" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",zn_" << i;
  out << ",err\n";

  // Index-based sampling avoids accumulating rounding in t.
  const auto count = static_cast<std::size_t>(std::floor((range.max - range.min) / range.step + 1e-9)) + 1;
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = range.min + static_cast<double>(k) * range.step;
    const RealVector exact = flow_closed_form(l, t, z0);
    const RealVector numeric = flow_numeric(l, t, z0, rk4_steps);
    const double err = max_abs_difference(exact, numeric);
    worst = std::max(worst, err);
    out << format_double(t);
    for (const double x : exact) out << ',' << format_double(x);
    for (const double x : numeric) out << ',' << format_double(x);
    out << ',' << format_double(err) << '\n';
  }
  return worst;
}

std::string sample_sp_output(std::size_t m, std::uint64_t seed, std::size_t count) {
  const SymplecticSpace space(m);
  const LinearMap g = random_symplectic(space, seed, count);
  return nlohmann::ordered_json{{"m", m},
                                {"seed", seed},
                                {"count", count},
                                {"matrix", g.to_strings()},
                                {"is_symplectic", is_symplectic(space, g)}}
      .dump(2);
}

}  // namespace liouville
