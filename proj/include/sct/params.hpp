#pragma once

#include "sct/rational.hpp"

namespace sct {

// ceil of a nonnegative rational as a 64-bit integer
inline long long ceil_to_int(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) < numerator(r)) q += 1;
  return q.convert_to<long long>();
}

/// Level-independent parameters of one solver run, derived once from the
/// root vertex count and never recomputed per call.
///   beta  = eps / (s + t + log_{6/5} n_root)     (log rounded up)
///   gamma = beta^3 / (1000 t)
///   b     = 4 ceil(5/beta) + 1,  d = 2 b ceil(5/beta)
/// Tests may construct instances directly with synthetic values; derive()
/// always produces the faithful ones.
struct GlobalParams {
  int s = 1;
  int t = 4;
  Rational epsilon;
  int n_root = 0;
  Rational beta;
  Rational gamma;
  long long b = 0;
  long long d = 0;
  long long hprime_range = 0;  // ceil(5/beta)

  static GlobalParams derive(int s, int t, const Rational& eps, int n_root) {
    if (s < 1 || t < 4) throw input_error("GlobalParams: require s >= 1 and t >= 4");
    if (eps <= 0 || eps >= 1) throw input_error("GlobalParams: epsilon must be in (0,1)");
    if (n_root < 1) throw input_error("GlobalParams: empty root graph");
    GlobalParams p;
    p.s = s;
    p.t = t;
    p.epsilon = eps;
    p.n_root = n_root;
    p.beta = eps / (Rational(s) + Rational(t) + log_base65_upper(n_root));
    p.gamma = p.beta * p.beta * p.beta / (Rational(1000) * t);
    p.hprime_range = ceil_to_int(Rational(5) / p.beta);
    p.b = 4 * p.hprime_range + 1;
    p.d = 2 * p.b * p.hprime_range;
    return p;
  }
};

}  // namespace sct
