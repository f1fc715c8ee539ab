#pragma once

// Pairings of the distributions li_s, gamma_+^s and (x +- i0)^a with
// Hermite-Gaussian test functions.
//
//   <gamma_+^s, f(. + t)> = F_s(t) = (-1)^k / Gamma(s+k) int_0^inf x^{s+k-1} f^(k)(x + t) dx
//   <li_s, f>             = <PV 1/(e^{-t} - 1), F_s>
//
// and the PV pairing is split by an even cutoff chi into three absolutely
// convergent integrals:
//
//   int (1 - chi) G k  +  int chi G (k + 1/t)  -  int_0^b chi (G(t) - G(-t)) / t
//
// with k(t) = 1/(e^{-t} - 1).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "tempered/error.hpp"
#include "tempered/kernels.hpp"
#include "tempered/polylog.hpp"
#include "tempered/quadrature.hpp"
#include "tempered/singular.hpp"
#include "tempered/test_function.hpp"

namespace tempered {

struct PairingResult {
  cplx value;
  double est_error = 0.0;
};

/// Even bump: 1 on [-a, a], 0 outside (-b, b), C-infinity in between.
class Cutoff {
 public:
  explicit Cutoff(double a = 0.5, double b = 1.0) : a_(a), b_(b) {
    if (!(a > 0.0 && b > a && std::isfinite(b))) throw error(errc::invalid_argument, "cutoff needs 0 < a < b");
  }

  double inner() const { return a_; }
  double outer() const { return b_; }

  double operator()(double t) const {
    const double r = std::abs(t);
    if (r <= a_) return 1.0;
    if (r >= b_) return 0.0;
    const double u = (b_ - r) / (b_ - a_);
    const double g0 = std::exp(-1.0 / u);
    const double g1 = std::exp(-1.0 / (1.0 - u));
    return g0 / (g0 + g1);
  }

 private:
  double a_;
  double b_;
};

namespace detail {

inline constexpr quad::Tolerance inner_tol{1e-17, 1e-13, 4000};
inline constexpr quad::Tolerance outer_tol{1e-15, 1e-12, 4000};

// int_0^L g(x) dx with a possible integrable singularity of g at x = 0; the
// double-exponential rule covers [0, min(L, near)], Gauss-Kronrod the rest.
template <class G>
quad::Result<cplx> origin_singular(G&& g, double length, double near) {
  quad::Result<cplx> out;
  if (!(length > 0.0)) return out;
  const double cut = std::min(length, near);
  auto wrapped = [&](double x) -> cplx { return g(x); };
  out += quad::tanh_sinh_left(wrapped, cut);
  if (length > cut) out += quad::gauss_kronrod(wrapped, cut, length, inner_tol);
  return out;
}

// 1/(e^{-t} - 1) + 1/t = -1/2 - sum_{j>=1} B_{2j} t^{2j-1} / (2j)!
inline double kernel_plus_pole(double t) {
  if (std::abs(t) >= 0.25) return 1.0 / std::expm1(-t) + 1.0 / t;
  static const std::vector<double> c = [] {
    std::vector<double> v;
    for (int j = 1; j <= 12; ++j) v.push_back(bernoulli_float(2 * j) / factorial(2 * j));
    return v;
  }();
  const double t2 = t * t;
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t2 + *it;
  return -0.5 - acc * t;
}

inline double kernel(double t) { return 1.0 / std::expm1(-t); }

inline int default_profile_order(Order s) {
  return std::max(0, static_cast<int>(std::ceil(1.25 - s.re())));
}

}  // namespace detail

/// t -> F_s(t) for a fixed test function; the k-th derivative of f is built
/// once.
template <class TF>
class Profile {
 public:
  Profile(Order s, const TF& f, int k = -1)
      : k_(k < 0 ? detail::default_profile_order(s) : k),
        exact_m_(is_nonpositive_integer(s.value()) ? static_cast<int>(-s.re()) : -1),
        fk_(f.derivative(exact_m_ >= 0 ? exact_m_ : std::min(k_, 20))) {
    if (k_ > 20) throw error(errc::out_of_range, "profile order k must be <= 20");
    if (s.re() + k_ <= 0.25) throw error(errc::invalid_argument, "profile needs Re(s) + k > 0.25");
    if (exact_m_ >= 0) {
      // gamma_+^{-m} = delta^(m): F(t) = (-1)^m f^(m)(t)
      factor_ = exact_m_ % 2 == 0 ? 1.0 : -1.0;
    } else {
      factor_ = (k_ % 2 == 0 ? 1.0 : -1.0) / gamma_fn(Order(s.value() + double(k_)));
      alpha_ = s.value() + double(k_) - 1.0;
    }
    support_ = fk_.support();
  }

  int order() const { return k_; }
  /// Support of the test function derivative; F_s vanishes beyond its upper end.
  Support support() const { return support_; }

  quad::Result<cplx> integrate(double t) const {
    quad::Result<cplx> out;
    if (exact_m_ >= 0) {
      out.value = factor_ * cplx(fk_(t));
      return out;
    }
    const double length = support_.upper - t;
    if (!(length > 0.0)) return out;
    const double start = support_.lower - t;
    const double w = fk_.width();
    auto g = [&](double x) -> cplx {
      return std::exp(alpha_ * std::log(x)) * cplx(fk_(x + t));
    };
    if (start > w) {
      out = quad::gauss_kronrod(g, start, support_.upper - t, detail::inner_tol);
    } else {
      out = detail::origin_singular(g, length, w);
    }
    out.value *= factor_;
    out.error *= std::abs(factor_);
    return out;
  }

  cplx operator()(double t) const { return integrate(t).value; }

 private:
  int k_;
  int exact_m_;
  TF fk_;
  cplx factor_;
  cplx alpha_;
  Support support_{};
};

/// F_s(t) = <gamma_+^s, f(. + t)>; k = -1 selects max(0, ceil(1.25 - Re s)).
template <class TF>
cplx profile(Order s, double t, const TF& f, int k = -1) {
  const Profile<TF> F(s, f, k);
  const auto r = F.integrate(t);
  quad::require(r, 1e-10 * std::abs(r.value) + 1e-300, "profile quadrature");
  return r.value;
}

template <class TF>
PairingResult pair_gamma_plus(Order s, const TF& f) {
  const Profile<TF> F(s, f);
  const auto r = F.integrate(0.0);
  quad::require(r, 1e-10 * std::abs(r.value) + 1e-300, "gamma_+ pairing");
  return {r.value, r.error};
}

namespace detail {

// <PV k, G> for G vanishing beyond t_hi and negligible (against e^t) below t_lo.
template <class G>
PairingResult pv_pairing(const G& g, double t_lo, double t_hi, const Cutoff& chi) {
  const double a = chi.inner();
  const double b = chi.outer();
  quad::Result<cplx> total;
  // integral over [lo, hi] clipped to [t_lo, t_hi]
  auto piece = [&](auto&& integrand, double lo, double hi) {
    lo = std::max(lo, t_lo);
    hi = std::min(hi, t_hi);
    if (hi > lo) total += quad::gauss_kronrod(integrand, lo, hi, outer_tol);
  };
  auto far = [&](double t) -> cplx { return (1.0 - chi(t)) * kernel(t) * g(t); };
  piece(far, t_lo, -b);
  piece(far, -b, -a);
  piece(far, a, b);
  piece(far, b, t_hi);
  auto near = [&](double t) -> cplx { return chi(t) * kernel_plus_pole(t) * g(t); };
  piece(near, -b, -a);
  piece(near, -a, 0.0);
  piece(near, 0.0, a);
  piece(near, a, b);
  auto odd = [&](double t) -> cplx {
    const double u = std::max(t, 1e-7);
    return -chi(t) * (g(u) - g(-u)) / u;
  };
  total += quad::gauss_kronrod(odd, 0.0, a, outer_tol);
  total += quad::gauss_kronrod(odd, a, b, outer_tol);
  if (!total.converged) throw error(errc::quadrature, "PV pairing quadrature did not converge");
  return {total.value, total.error + 1e-13 * std::abs(total.value)};
}

// Lower truncation point: e^t (1 + |t - upper|)^p below 1e-18.
inline double kernel_tail_start(double upper, double p, double from) {
  double t = std::min(from, -1.0);
  while (t > -700.0 && t + p * std::log1p(std::abs(upper - t)) > std::log(1e-18)) t -= 1.0;
  return t;
}

}  // namespace detail

/// <PV 1/(e^{-x} - 1), f>
template <class TF>
PairingResult pair_li0(const TF& f, const Cutoff& chi = Cutoff()) {
  const Support sup = f.support();
  const double t_lo = std::max(sup.lower, detail::kernel_tail_start(sup.upper, 0.0, sup.lower));
  auto g = [&](double t) -> cplx { return cplx(f(t)); };
  return detail::pv_pairing(g, t_lo, sup.upper, chi);
}

/// <li_s, f> = <PV 1/(e^{-x} - 1), F_s>, entire in s. k as in Profile.
template <class TF>
PairingResult pair_li(Order s, const TF& f, const Cutoff& chi = Cutoff(), int k = -1) {
  const Profile<TF> F(s, f, k);
  const Support sup = F.support();
  const double growth = std::max(0.0, s.re() + F.order() - 1.0) + 1.0;
  const double t_lo = detail::kernel_tail_start(sup.upper, growth, sup.lower);
  auto g = [&](double t) -> cplx { return F(t); };
  return detail::pv_pairing(g, t_lo, sup.upper, chi);
}

/// Quadrature of li_s against f on the real line, with the singular part at
/// 0 integrated by a rule adapted to its endpoint singularity. Needs
/// Re s > 0 and f negligible beyond x = R.
template <class TF>
PairingResult pair_direct(Order s, const TF& f) {
  if (s.re() <= 0.0) throw error(errc::non_integrable, "li_s is not locally integrable at 0 for Re s <= 0");
  Support sup = f.support();
  // beyond R the expansion is unavailable; the mass of f there must be negligible
  double tail = 0.0;
  if (!(sup.upper < zagier_radius)) {
    const double edge = 0.999 * zagier_radius;
    tail = std::abs(f(edge)) * f.width() * (std::abs(li_eval(s, {edge, Side::principal}).value) + 1.0);
    if (!(tail < 1e-12))
      throw error(errc::domain, "pair_direct needs the test function to vanish before x = " +
                                    std::to_string(zagier_radius));
    sup.upper = edge;
  }
  constexpr double window = 1.0;
  const SingularPart sing = singular_part_auto(s);
  quad::Result<cplx> total;
  auto li = [&](double x) -> cplx { return li_eval(s, {x, Side::principal}).value * f(x); };
  auto clipped = [&](auto&& g, double lo, double hi) {
    lo = std::max(lo, sup.lower);
    hi = std::min(hi, sup.upper);
    if (hi > lo) total += quad::gauss_kronrod(g, lo, hi, detail::outer_tol);
  };
  clipped(li, sup.lower, -window);
  clipped(li, window, sup.upper);
  auto smooth = [&](double x) -> cplx {
    const EvalPoint p{x, Side::principal};
    return (li_eval(s, p).value - sing.evaluate(p)) * f(x);
  };
  clipped(smooth, -window, 0.0);
  clipped(smooth, 0.0, window);
  auto right = [&](double d) -> cplx { return sing.evaluate({d, Side::principal}) * f(d); };
  auto left = [&](double d) -> cplx { return sing.evaluate({-d, Side::principal}) * f(-d); };
  if (sup.upper > 0.0) total += quad::tanh_sinh_left(right, std::min(window, sup.upper));
  if (sup.lower < 0.0) total += quad::tanh_sinh_left(left, std::min(window, -sup.lower));
  if (!total.converged) throw error(errc::quadrature, "direct pairing quadrature did not converge");
  return {total.value, total.error + tail + 1e-13 * std::abs(total.value)};
}

enum class EtaSide { plus, minus };

/// <(x +- i0)^a, f>.
template <class TF>
PairingResult pair_eta(Order a, EtaSide side, const TF& f) {
  const cplx av = a.value();
  const double sign = side == EtaSide::plus ? 1.0 : -1.0;
  if (a.re() < 0.5 && a.integer_distance() <= 1e-8) {
    const int m = static_cast<int>(-a.nearest_integer());
    if (m == 0) return {cplx(f.integral()), 1e-15};
    // -1/(m-1)! int log|x| f^(m)  -+  i pi f^(m-1)(0) / (m-1)!
    const TF fm = f.derivative(m);
    const Support sup = fm.support();
    quad::Result<cplx> logs;
    auto right = [&](double d) -> cplx { return std::log(d) * cplx(fm(d)); };
    auto left = [&](double d) -> cplx { return std::log(d) * cplx(fm(-d)); };
    const double w = f.width();
    if (sup.upper > 0.0) logs += detail::origin_singular(right, sup.upper, w);
    if (sup.lower < 0.0) logs += detail::origin_singular(left, -sup.lower, w);
    const double inv_fact = 1.0 / factorial(m - 1);
    const cplx delta = cplx(f.derivative(m - 1)(0.0)) * inv_fact;
    return {-inv_fact * logs.value - sign * cplx(0.0, pi) * delta, inv_fact * logs.error + 1e-14};
  }
  const Order s1(1.0 + av);
  const auto plus_part = pair_gamma_plus(s1, f);
  const auto minus_part = pair_gamma_plus(s1, f.reflected());
  const cplx g = gamma_fn(s1);
  const cplx phase = exp_i_pi(sign * av);
  return {g * (plus_part.value + phase * minus_part.value),
          std::abs(g) * (plus_part.est_error + minus_part.est_error)};
}

/// |<gamma_+^s, f^> - e^{-i pi s/2} <(x - i0)^{-s}, f>|
template <class TF>
double verify_fourier_gamma(Order s, const TF& f) {
  const auto lhs = pair_gamma_plus(s, f.fourier());
  const auto rhs = pair_eta(Order(-s.value()), EtaSide::minus, f);
  return std::abs(lhs.value - exp_i_pi(-0.5 * s.value()) * rhs.value);
}

/// |<li_{s-1}, f> + <li_s, f'>|. The second pairing integrates by parts two
/// more times than the default, so the two sides go through different
/// quadratures instead of coinciding term by term.
template <class TF>
double verify_functional_equation(Order s, const TF& f, const Cutoff& chi = Cutoff()) {
  const auto a = pair_li(Order(s.value() - 1.0), f, chi);
  const auto b = pair_li(s, f.derivative(), chi, detail::default_profile_order(s) + 2);
  return std::abs(a.value + b.value);
}

}  // namespace tempered
