#pragma once

// Singular/smooth split of li_s at x = 0.
//
// Non-integer s:
//   li_s = -Gamma(1-s)/2 [e^{-i pi s} (x+i0)^{s-1} + e^{i pi s} (x-i0)^{s-1}] + smooth
// Integer orders:
//   li_{-n} = (-1)^{n-1} n! x^{-n-1}        + smooth   (n >= 0)
//   li_n    = -x^{n-1} log|x| / (n-1)!      + smooth   (n >= 1)
//
// Evaluation of a term at x > 0 follows the side of the EvalPoint: principal
// gives the distributional value, above/below continue the term from the
// negative axis through the upper/lower half plane. With that rule the
// remainder li_eval - singular is the same regular series on every side.

#include <cmath>
#include <complex>
#include <vector>

#include "tempered/error.hpp"
#include "tempered/kernels.hpp"
#include "tempered/polylog.hpp"

namespace tempered {

enum class TermKind { power_above, power_below, abs_power, power_log };

struct SingularTerm {
  cplx coeff;
  cplx exponent;
  TermKind kind;

  cplx evaluate(EvalPoint p) const {
    const double x = p.x;
    if (kind == TermKind::power_log) {
      const int m = static_cast<int>(exponent.real());
      if (x == 0.0) {
        if (m >= 1) return 0.0;
        throw error(errc::origin, "log term at x = 0");
      }
      cplx log_part = std::log(std::abs(x));
      if (x > 0.0 && p.side == Side::above) log_part -= cplx(0.0, pi);
      if (x > 0.0 && p.side == Side::below) log_part += cplx(0.0, pi);
      return coeff * std::pow(x, m) * log_part;
    }
    if (x == 0.0) {
      if (exponent.real() > 0.0) return 0.0;
      throw error(errc::origin, "power term at x = 0");
    }
    const cplx magnitude = std::exp(exponent * std::log(std::abs(x)));
    if (kind == TermKind::abs_power) return coeff * magnitude;
    // argument of x on the continuation: +pi / -pi on the negative axis for
    // the above / below boundary values
    double turns = 0.0;  // multiples of pi
    if (x < 0.0) {
      turns = kind == TermKind::power_above ? 1.0 : -1.0;
    } else if (p.side == Side::above) {
      turns = kind == TermKind::power_above ? 0.0 : -2.0;
    } else if (p.side == Side::below) {
      turns = kind == TermKind::power_above ? 2.0 : 0.0;
    }
    if (turns == 0.0) return coeff * magnitude;
    return coeff * magnitude * exp_i_pi(turns * exponent);
  }
};

struct SingularPart {
  std::vector<SingularTerm> terms;

  cplx evaluate(EvalPoint p) const {
    cplx acc{};
    for (const auto& t : terms) acc += t.evaluate(p);
    return acc;
  }
};

inline constexpr double integer_order_tolerance = 1e-8;

inline SingularPart singular_part(Order s) {
  if (s.integer_distance() <= integer_order_tolerance)
    throw error(errc::integer_order, "integer order; use singular_part_integer");
  const cplx sv = s.value();
  const cplx half_gamma = -0.5 * gamma_fn(Order(1.0 - sv));
  return {{{half_gamma * exp_i_pi(-sv), sv - 1.0, TermKind::power_above},
           {half_gamma * exp_i_pi(sv), sv - 1.0, TermKind::power_below}}};
}

inline SingularPart singular_part_integer(int n) {
  if (n >= 1) return {{{-1.0 / factorial(n - 1), double(n - 1), TermKind::power_log}}};
  const int m = -n;
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  // integer power: the boundary values coincide off the origin
  return {{{sign * factorial(m), double(-m - 1), TermKind::power_above}}};
}

/// The singular part appropriate to s: integer formula within 1e-8 of Z.
inline SingularPart singular_part_auto(Order s) {
  if (s.integer_distance() <= integer_order_tolerance)
    return singular_part_integer(static_cast<int>(s.nearest_integer()));
  return singular_part(s);
}

/// li_eval(s, p) minus the singular part; continuous across x = 0.
inline cplx smooth_remainder(Order s, EvalPoint p) {
  const auto li = li_eval(s, p);
  return li.value - singular_part_auto(s).evaluate(p);
}

/// Taylor coefficients zeta(s - k) / k!, k = 0..m-1, of the remainder at a
/// non-integer order.
inline std::vector<cplx> remainder_taylor(Order s, int m) {
  if (m < 0 || m > 40) throw error(errc::out_of_range, "remainder_taylor supports m <= 40");
  if (s.re() > 0.5 && std::abs(s.value() - double(s.nearest_integer())) <= integer_order_tolerance)
    throw error(errc::integer_order, "remainder_taylor needs a non-integer order");
  std::vector<cplx> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k)
    out.push_back(riemann_zeta(Order(s.value() - double(k))) / factorial(k));
  return out;
}

}  // namespace tempered
