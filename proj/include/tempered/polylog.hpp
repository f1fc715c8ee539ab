#pragma once

// Pointwise evaluation of li_s(x) = Li_s(e^x) for complex order s and real
// x != 0.
//
//   x <= -1            direct series  sum_n e^{nx} / n^s
//   0 < |x| < R        singular term + zeta series
//                        Gamma(1-s) (-x)^{s-1} + sum_k zeta(s-k) x^k / k!
//   s = n = 1, 2, ...  removable limit of the pair above:
//                        x^{n-1}/(n-1)! (H_{n-1} - log(-x)) + sum_{k != n-1} ...
//   s = 0, -1, -2 ...  closed-form derivatives of 1 / (e^{-x} - 1)
//
// with R = 0.875 * 2 pi. For x > 0 the side selects the boundary value:
// above means x + i0, where arg(-x) = -pi, below means x - i0 (arg(-x) = +pi)
// and principal is the mean of the two.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "tempered/error.hpp"
#include "tempered/kernels.hpp"

namespace tempered {

enum class Side { above, below, principal };

inline const char* to_string(Side side) {
  switch (side) {
    case Side::above: return "above";
    case Side::below: return "below";
    case Side::principal: return "principal";
  }
  return "principal";
}

inline Side side_from_string(const std::string& name) {
  if (name == "above" || name == "plus") return Side::above;
  if (name == "below" || name == "minus") return Side::below;
  if (name == "principal" || name.empty()) return Side::principal;
  throw error(errc::invalid_argument, "unknown side '" + name + "'");
}

struct EvalPoint {
  double x;
  Side side = Side::principal;
};

enum class Regime { direct_series, zagier, integer_limit, negative_integer, positive_side, origin_limit };

inline const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::direct_series: return "direct_series";
    case Regime::zagier: return "zagier";
    case Regime::integer_limit: return "integer_limit";
    case Regime::negative_integer: return "negative_integer";
    case Regime::positive_side: return "positive_side";
    case Regime::origin_limit: return "origin_limit";
  }
  return "unknown";
}

struct EvalResult {
  cplx value;
  Regime regime;
  double est_error;
};

inline constexpr double zagier_radius = 2.0 * pi * 0.875;
inline constexpr double integer_guard = 1e-4;
inline constexpr double negative_integer_snap = 1e-12;
inline constexpr double direct_switch = -1.0;

namespace detail {

inline constexpr double series_eps = 1e-14;
inline constexpr int series_cap = 400;

struct SeriesSum {
  cplx value{};
  double est_error = 0.0;
  int terms = 0;
};

// Stops after three consecutive terms below eps * |partial sum|.
class Truncation {
 public:
  bool small(cplx term, cplx partial) {
    if (std::abs(term) <= series_eps * std::abs(partial)) {
      ++run_;
    } else {
      run_ = 0;
    }
    return run_ >= 3;
  }

 private:
  int run_ = 0;
};

inline SeriesSum direct_series(cplx s, double x) {
  SeriesSum out;
  Truncation stop;
  double magnitude = 0.0;
  for (int n = 1; n <= series_cap; ++n) {
    const double ln_n = std::log(double(n));
    const cplx term = std::exp(cplx(n * x - s.real() * ln_n, -s.imag() * ln_n));
    out.value += term;
    magnitude += std::abs(term);
    out.terms = n;
    if (stop.small(term, out.value)) {
      const double ratio = std::exp(x);
      out.est_error = std::abs(term) * ratio / (1.0 - ratio) + 1e-16 * magnitude;
      return out;
    }
  }
  throw error(errc::slow_convergence,
              "direct series did not converge within " + std::to_string(series_cap) + " terms");
}

// Regular part sum_k zeta(s - k) x^k / k!, skipping index `skip` (the term
// that pairs with the singular part at integer order). Once Re(s - k) < 1/2
// the terms are rewritten through the zeta reflection formula
//   zeta(s-k) x^k/k! = 2 (2 pi)^{s-1} sin(pi (s-k)/2) zeta(1-s+k)
//                      * Gamma(1-s+k)/k! * (x / 2 pi)^k
// with the gamma ratio advanced by recurrence, so no factorial overflows.
template <class X>
SeriesSum zagier_regular(cplx s, X x, int skip = -1) {
  SeriesSum out;
  int k0 = 0;
  while (s.real() - k0 >= 0.5) ++k0;
  Truncation stop;
  double magnitude = 0.0;
  cplx power = 1.0;  // x^k / k!
  cplx ratio{};      // Gamma(1-s+k) / k!
  cplx scaled{};     // (x / 2 pi)^k
  const cplx prefactor = 2.0 * std::exp((s - 1.0) * std::log(2.0 * pi));
  const double ratio_bound = std::abs(x) / (2.0 * pi);
  for (int k = 0; k <= series_cap; ++k) {
    if (k == k0) {
      ratio = gamma_fn(Order(1.0 - s + double(k0))) / factorial(k0);
      scaled = std::pow(cplx(x) / (2.0 * pi), k0);
    }
    cplx term{};
    const cplx u = s - double(k);
    if (k != skip) {
      if (k < k0) {
        term = riemann_zeta(Order(u)) * power;
      } else if (u == cplx(0.0, 0.0)) {
        term = -0.5 * power;
      } else {
        term = prefactor * sin_pi(0.5 * u) * zeta_one_minus(u) * ratio * scaled;
      }
      out.value += term;
      magnitude += std::abs(term);
    }
    out.terms = k + 1;
    power *= cplx(x) / double(k + 1);
    if (k >= k0) {
      ratio *= (double(k + 1) - s) / double(k + 1);
      scaled *= cplx(x) / (2.0 * pi);
    }
    if (k != skip && k > skip && stop.small(term, out.value)) {
      out.est_error = std::abs(term) * ratio_bound / (1.0 - ratio_bound) + 1e-16 * magnitude;
      return out;
    }
  }
  throw error(errc::slow_convergence,
              "zeta series did not converge within " + std::to_string(series_cap) + " terms");
}

// Gamma(1-s) (-x)^{s-1} with the boundary value selected by the side for x > 0.
inline cplx zagier_singular(cplx s, EvalPoint p) {
  const cplx g = gamma_fn(Order(1.0 - s));
  const double ax = std::abs(p.x);
  const cplx power = std::exp((s - 1.0) * std::log(ax));
  if (p.x < 0.0) return g * power;
  switch (p.side) {
    case Side::above: return g * power * exp_i_pi(1.0 - s);
    case Side::below: return g * power * exp_i_pi(s - 1.0);
    case Side::principal: break;
  }
  return -g * power * cos_pi(s);
}

// log(-x) on the branch selected by the side.
inline cplx log_minus_x(EvalPoint p) {
  if (p.x < 0.0) return std::log(-p.x);
  switch (p.side) {
    case Side::above: return {std::log(p.x), -pi};
    case Side::below: return {std::log(p.x), pi};
    case Side::principal: break;
  }
  return std::log(p.x);
}

inline void check_zagier_domain(double x) {
  if (x == 0.0) throw error(errc::origin, "pointwise evaluation at x = 0");
  if (!(std::abs(x) < zagier_radius))
    throw error(errc::domain, "|x| = " + std::to_string(std::abs(x)) +
                                  " outside the expansion radius " + std::to_string(zagier_radius));
}

inline SeriesSum zagier_unguarded(cplx s, EvalPoint p) {
  auto regular = zagier_regular(s, p.x);
  regular.value += zagier_singular(s, p);
  regular.est_error += 1e-15 * std::abs(regular.value);
  return regular;
}

inline SeriesSum integer_limit(int n, EvalPoint p) {
  const int m = n - 1;
  auto regular = zagier_regular(cplx(double(n), 0.0), p.x, m);
  const cplx log_term = std::pow(p.x, m) / factorial(m) * (harmonic(m) - log_minus_x(p));
  regular.value += log_term;
  regular.est_error += 1e-16 * std::abs(log_term);
  return regular;
}

// Inside the integer guard band the singular term and the k = n-1 zeta term
// both carry a 1/(s-n) pole. s -> li_s(x) is analytic there, so the value is
// recovered from Cauchy's formula on a circle |s' - n| = 0.25 where the pair
// is well conditioned.
inline SeriesSum guard_band(int n, cplx s, EvalPoint p) {
  constexpr int nodes = 32;
  constexpr double radius = 0.25;
  const cplx eps = s - double(n);
  SeriesSum out;
  for (int j = 0; j < nodes; ++j) {
    const cplx w = std::polar(radius, 2.0 * pi * (j + 0.5) / nodes);
    const auto v = zagier_unguarded(double(n) + w, p);
    out.value += v.value * w / (w - eps);
    out.est_error += v.est_error;
    out.terms += v.terms;
  }
  out.value /= double(nodes);
  out.est_error /= double(nodes);
  return out;
}

inline std::vector<double> stirling2_row(int n) {
  // S(n, k) for k = 0..n
  std::vector<double> row{1.0};
  for (int i = 1; i <= n; ++i) {
    std::vector<double> next(i + 1, 0.0);
    for (int k = 1; k <= i; ++k) next[k] = k * (k < i ? row[k] : 0.0) + row[k - 1];
    row = std::move(next);
  }
  return row;
}

// Positive integer within the guard band of s, or 0.
inline int guarded_integer(Order s) {
  if (s.re() < 0.5) return 0;
  const long n = s.nearest_integer();
  if (n < 1) return 0;
  return std::abs(s.value() - double(n)) <= integer_guard ? static_cast<int>(n) : 0;
}

inline int snapped_nonpositive_integer(Order s) {
  const long n = s.nearest_integer();
  if (n > 0) return -1;
  return std::abs(s.value() - double(n)) <= negative_integer_snap ? static_cast<int>(-n) : -1;
}

}  // namespace detail

/// sum_{n>=1} e^{nx} / n^s for x < 0.
inline cplx li_direct_series(Order s, double x) {
  if (!(x < 0.0)) throw error(errc::domain, "direct series needs x < 0");
  return detail::direct_series(s, x).value;
}

/// Singular term plus zeta series, for 0 < |x| < R and s away from 1, 2, 3, ...
inline cplx li_zagier(Order s, EvalPoint p) {
  detail::check_zagier_domain(p.x);
  if (detail::guarded_integer(s) != 0)
    throw error(errc::near_integer, "order within the integer guard band; use li_integer_limit");
  return detail::zagier_unguarded(s, p).value;
}

/// Limit of the expansion at a positive integer order n.
inline cplx li_integer_limit(int n, EvalPoint p) {
  if (n < 1) throw error(errc::invalid_argument, "integer limit needs n >= 1");
  detail::check_zagier_domain(p.x);
  return detail::integer_limit(n, p).value;
}

/// li_{-n}(x) = d^n/dx^n 1/(e^{-x} - 1)
///            = sum_{k=0}^{n} k! S(n+1, k+1) w^{k+1},  w = 1/(e^{-x} - 1).
inline double li_negative_integer(int n, double x) {
  if (n < 0) throw error(errc::invalid_argument, "li_negative_integer needs n >= 0");
  if (x == 0.0) throw error(errc::origin, "li_{-n} is singular at x = 0");
  const double w = 1.0 / std::expm1(-x);
  const auto stirling = detail::stirling2_row(n + 1);
  // Horner in w: sum_k c_k w^{k+1}
  double acc = 0.0;
  for (int k = n; k >= 0; --k) acc = acc * w + factorial(k) * stirling[k + 1];
  return acc * w;
}

inline EvalResult li_eval(Order s, EvalPoint p) {
  if (!std::isfinite(p.x)) throw error(errc::invalid_argument, "x must be finite");
  if (const int n = detail::snapped_nonpositive_integer(s); n >= 0) {
    if (p.x == 0.0) throw error(errc::origin, "li_{-n} is singular at x = 0");
    return {li_negative_integer(n, p.x), Regime::negative_integer, 1e-15 * std::abs(li_negative_integer(n, p.x))};
  }
  if (p.x == 0.0) {
    if (s.re() > 1.5) {
      const cplx z = riemann_zeta(s);
      return {z, Regime::origin_limit, 1e-14 * std::abs(z)};
    }
    throw error(errc::origin, "pointwise value at x = 0 needs Re s > 1.5");
  }
  if (p.x > 0.0 && !(p.x < zagier_radius))
    throw error(errc::domain, "x = " + std::to_string(p.x) + " beyond the expansion radius");
  if (p.x <= direct_switch) {
    const auto r = detail::direct_series(s, p.x);
    return {r.value, Regime::direct_series, r.est_error};
  }
  const Regime tag_default = p.x > 0.0 ? Regime::positive_side : Regime::zagier;
  if (const int n = detail::guarded_integer(s); n != 0) {
    const Regime tag = p.x > 0.0 ? Regime::positive_side : Regime::integer_limit;
    const auto r = s.value() == cplx(double(n), 0.0) ? detail::integer_limit(n, p)
                                                     : detail::guard_band(n, s, p);
    return {r.value, tag, r.est_error};
  }
  const auto r = detail::zagier_unguarded(s, p);
  return {r.value, tag_default, r.est_error};
}

/// Li_s(t) on the positive axis, t = e^x.
inline cplx Li_eval(Order s, double t, Side side = Side::principal) {
  if (!(t > 0.0)) throw error(errc::domain, "Li_s(t) needs t > 0");
  const double x = std::log(t);
  return li_eval(s, {x, side}).value;
}

}  // namespace tempered
