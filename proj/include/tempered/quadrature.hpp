#pragma once

// Numerical integration used by the pairing module: globally adaptive
// Gauss-Kronrod (10/21 points) for smooth integrands on finite intervals and
// a double-exponential (tanh-sinh) rule for integrable endpoint singularities
// at the left end of [0, b].

#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

#include "tempered/error.hpp"

namespace tempered::quad {

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  bool converged = true;
  int evaluations = 0;

  Result& operator+=(const Result& other) {
    value += other.value;
    error += other.error;
    converged = converged && other.converged;
    evaluations += other.evaluations;
    return *this;
  }
};

template <class T>
Result<T> operator+(Result<T> a, const Result<T>& b) {
  a += b;
  return a;
}

struct Tolerance {
  double abs = 1e-15;
  double rel = 1e-13;
  int max_segments = 4000;
};

namespace detail {

inline constexpr double gk_nodes[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double gk_weights[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980957725, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
inline constexpr double g_weights[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  double magnitude;  // integral of |f|, for the round-off floor
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * gk_weights[10];
  T gauss{};
  double magnitude = std::abs(fc) * gk_weights[10];
  for (int i = 0; i < 10; ++i) {
    const double dx = half * gk_nodes[i];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * gk_weights[i];
    magnitude += (std::abs(f1) + std::abs(f2)) * gk_weights[i];
    if (i % 2 == 1) gauss += (f1 + f2) * g_weights[i / 2];
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), magnitude * std::abs(half)};
}

}  // namespace detail

/// Integral of f over [a, b] (a < b, finite). T is deduced from f's result
/// and may be real or complex.
template <class F>
auto gauss_kronrod(F&& f, double a, double b, Tolerance tol = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  Result<T> out;
  if (!(b > a)) return out;
  std::priority_queue<detail::Segment<T>> heap;
  auto first = detail::gk21<T>(f, a, b);
  T total = first.value;
  double total_err = first.error;
  double total_mag = first.magnitude;
  heap.push(first);
  int segments = 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (true) {
    const double target = std::max(tol.abs, tol.rel * std::abs(total));
    if (total_err <= target) break;
    if (total_err <= 50.0 * eps * total_mag) break;  // round-off floor
    if (segments >= tol.max_segments) {
      out.converged = false;
      break;
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      out.converged = false;
      heap.push(worst);
      break;
    }
    auto left = detail::gk21<T>(f, worst.a, mid);
    auto right = detail::gk21<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_mag += left.magnitude + right.magnitude - worst.magnitude;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  // re-sum to shed the drift of the running updates
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = std::max(err, 10.0 * eps * total_mag);
  out.evaluations = 21 * (2 * segments - 1);
  return out;
}

/// Integral of g over [0, b] where g(x) may have an integrable singularity
/// at x = 0 (x^a with Re a > -1, log x). g receives the exact distance from
/// the origin, so nodes clustered at 0 keep full relative precision.
template <class F>
auto tanh_sinh_left(F&& g, double b, double rel_tol = 1e-14, int max_level = 9)
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  Result<T> out;
  if (!(b > 0.0)) return out;
  constexpr double t_max = 6.5;
  constexpr double half_pi = 0.5 * 3.14159265358979323846;

  // contribution of the symmetric node pair at +t / -t
  auto pair = [&](double t) -> T {
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    if (e == 0.0) return T{};
    const double near = b * e / (1.0 + e);
    const double weight = b * half_pi * std::cosh(t) * 2.0 * e / ((1.0 + e) * (1.0 + e));
    if (weight == 0.0 || near == 0.0) return T{};
    out.evaluations += 2;
    return weight * (g(near) + g(b - near));
  };

  double h = 1.0;
  T sum = (b * 0.5 * half_pi) * g(0.5 * b);
  out.evaluations = 1;
  for (double t = h; t <= t_max; t += h) sum += pair(t);
  T previous = sum * h;
  T estimate = previous;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2.0 * h) sum += pair(t);
    estimate = sum * h;
    const double diff = std::abs(estimate - previous);
    previous = estimate;
    out.value = estimate;
    out.error = diff;
    if (level >= 3 && diff <= rel_tol * std::abs(estimate)) return out;
    if (level >= 3 && diff <= 1e-300) return out;
  }
  out.converged = false;
  return out;
}

template <class T>
const Result<T>& require(const Result<T>& r, double target, const char* what) {
  if (!r.converged && !(r.error <= target))
    throw error(errc::quadrature, std::string(what) + " did not converge");
  return r;
}

}  // namespace tempered::quad
