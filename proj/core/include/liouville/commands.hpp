#pragma once

#include "liouville/flow.hpp"
#include "liouville/structure.hpp"
#include "liouville/symplectic.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace liouville {

struct TimeRange {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
};

/// "3", "-1/2" or an exact decimal such as "0.25". Throws UsageError.
Rational parse_rational(std::string_view text);
/// Comma-separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);
/// Comma-separated list of doubles.
RealVector parse_real_list(std::string_view text);
std::vector<unsigned> parse_unsigned_list(std::string_view text);
/// "+" or "-".
Sign parse_sign(std::string_view text);
/// Comma-separated signs, e.g. "+,-".
std::vector<Sign> parse_sign_list(std::string_view text);
/// "min:max:step" with step > 0 and min ≤ max.
TimeRange parse_time_range(std::string_view text);

/// Writes the CSV trace `t,z_1..z_2m,zn_1..zn_2m,err` comparing the closed
/// form against RK4 at each sample time. Returns the largest err.
double emit_flow_trace(const LiouvilleStructure& l, std::span<const double> z0, const TimeRange& range,
                       std::size_t rk4_steps, std::ostream& out);

/// JSON object with a symplectic matrix built from `count` seeded
/// transvections and the exact result of is_symplectic on it.
std::string sample_sp_output(std::size_t m, std::uint64_t seed, std::size_t count);

}  // namespace liouville
