#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on malformed user input (CLI exit code 2).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a structural guarantee fails at run time (CLI exit code 3).
struct invariant_violation : std::logic_error {
  explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

/// Thrown when a brute-force oracle is invoked above its size cap.
struct oracle_cap_exceeded : std::runtime_error {
  explicit oracle_cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "a/b" or "a" with optional sign. Returns nullopt on malformed text.
inline std::optional<Rational> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r);
  } else {
    os << numerator(r) << '/' << denominator(r);
  }
  return os.str();
}

// Upper bound on log_{6/5}(n) as a rational with denominator 10^6.
// Rounding up only shrinks beta downstream, which tightens every budget.
inline Rational log_base65_upper(long long n) {
  if (n < 1) throw input_error("log_base65_upper: n must be >= 1");
  if (n == 1) return Rational(0);
  double v = std::log(static_cast<double>(n)) / std::log(1.2);
  // Guard against double rounding before snapping to the 1e-6 grid.
  long long scaled = static_cast<long long>(std::ceil(v * 1e6 + 1e-3));
  return Rational(BigInt(scaled), BigInt(1000000));
}

// floor(log_{6/5}(n)) for the mu-potential. Exact for the sizes we handle.
inline long long floor_log_base65(long long n) {
  if (n < 1) throw input_error("floor_log_base65: n must be >= 1");
  // Largest k with (6/5)^k <= n, tracked exactly as a fraction p/q.
  long long k = 0;
  BigInt p = 1, q = 1;
  while (p * 6 <= BigInt(n) * q * 5) {
    ++k;
    p *= 6;
    q *= 5;
  }
  return k;
}

}  // namespace sct
