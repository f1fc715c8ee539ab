#pragma once

// Special-function kernels shared by every other module: complex gamma,
// digamma, Riemann zeta, exact Bernoulli numbers and the shifted Bernoulli
// polynomials, harmonic numbers.
//
// Tables are built once on first use and are immutable afterwards, so every
// function here is safe to call concurrently.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tempered/error.hpp"

namespace tempered {

using cplx = std::complex<double>;
using rational = boost::multiprecision::cpp_rational;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.57721566490153286061;
// Laurent data of zeta at s = 1: zeta(1 + e) = 1/e + sum_n (-1)^n g_n e^n / n!
inline constexpr double stieltjes_gamma0 = euler_gamma;
inline constexpr double stieltjes_gamma1 = -0.072815845483676724861;
inline constexpr double stieltjes_gamma2 = -0.0096903631928723184845;
inline constexpr double stieltjes_gamma3 = 0.0020538344203033458662;
inline constexpr double stieltjes_gamma4 = 0.0023253700654673000077;

/// Complex order of the polylogarithm. Both components must be finite.
class Order {
 public:
  Order(double re, double im = 0.0) : re_(re), im_(im) { check(); }  // NOLINT(implicit)
  Order(cplx s) : re_(s.real()), im_(s.imag()) { check(); }          // NOLINT(implicit)

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  cplx value() const noexcept { return {re_, im_}; }
  operator cplx() const noexcept { return value(); }  // NOLINT(implicit)

  bool is_real() const noexcept { return im_ == 0.0; }

  /// Distance to the nearest integer (in the complex plane).
  double integer_distance() const noexcept {
    return std::hypot(re_ - std::round(re_), im_);
  }
  long nearest_integer() const noexcept { return std::lround(re_); }

 private:
  void check() const {
    if (!std::isfinite(re_) || !std::isfinite(im_))
      throw error(errc::invalid_argument, "order must have finite components");
  }

  double re_;
  double im_;
};

// ---------------------------------------------------------------------------
// sin(pi z), cos(pi z) with exact zeros at the integers / half-integers.

inline double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double n = std::round(x);
  const double r = x - n;  // exact, |r| <= 1/2
  if (r == 0.0) return 0.0;
  const double v = std::sin(pi * r);
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

inline double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double n = std::round(x);
  const double r = std::abs(x - n);
  const double v = r <= 0.25 ? std::cos(pi * r) : std::sin(pi * (0.5 - r));
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

inline cplx sin_pi(cplx z) {
  if (z.imag() == 0.0) return sin_pi(z.real());
  const double n = std::round(z.real());
  const cplx v = std::sin(pi * cplx(z.real() - n, z.imag()));
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

inline cplx cos_pi(cplx z) {
  if (z.imag() == 0.0) return cos_pi(z.real());
  const double n = std::round(z.real());
  const cplx r(z.real() - n, z.imag());
  cplx v;
  if (std::abs(r.real()) <= 0.25) {
    v = std::cos(pi * r);
  } else if (r.real() > 0.0) {
    v = std::sin(pi * (0.5 - r));
  } else {
    v = std::sin(pi * (0.5 + r));
  }
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

/// exp(i pi z) without the rounding of pi * z at integer points.
inline cplx exp_i_pi(cplx z) { return cos_pi(z) + cplx(0.0, 1.0) * sin_pi(z); }

inline bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, standard convention B_1 = -1/2.

inline constexpr int bernoulli_table_size = 64;

struct BernoulliTable {
  std::vector<rational> exact_values;  // B_0 .. B_N
  std::vector<double> float_values;
};

namespace detail {

inline BernoulliTable build_bernoulli_table(int n_max) {
  using boost::multiprecision::cpp_int;
  BernoulliTable table;
  table.exact_values.reserve(n_max + 1);
  // binomial row C(n+1, j), updated in place
  std::vector<cpp_int> row{1};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<cpp_int> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);  // row = C(n+1, .)
    if (n == 0) {
      table.exact_values.emplace_back(1);
      continue;
    }
    rational acc = 0;
    for (int j = 0; j < n; ++j) acc += rational(row[j]) * table.exact_values[j];
    table.exact_values.push_back(-acc / rational(row[n]));
  }
  table.float_values.reserve(table.exact_values.size());
  for (const auto& b : table.exact_values) table.float_values.push_back(b.convert_to<double>());
  return table;
}

}  // namespace detail

inline const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table = detail::build_bernoulli_table(bernoulli_table_size);
  return table;
}

inline const rational& bernoulli_number(int n) {
  if (n < 0 || n > bernoulli_table_size)
    throw error(errc::out_of_range, "Bernoulli index " + std::to_string(n));
  return bernoulli_table().exact_values[n];
}

inline double bernoulli_float(int n) {
  if (n < 0 || n > bernoulli_table_size)
    throw error(errc::out_of_range, "Bernoulli index " + std::to_string(n));
  return bernoulli_table().float_values[n];
}

inline rational binomial_exact(int n, int k) {
  using boost::multiprecision::cpp_int;
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return rational(r);
}

/// B^n(q) with generating function t e^{(q+1)t} / (e^t - 1), i.e. the
/// standard Bernoulli polynomial evaluated at q + 1.
inline double bernoulli_poly_shifted(int n, double q) {
  if (n < 0 || n > bernoulli_table_size)
    throw error(errc::out_of_range, "Bernoulli polynomial index " + std::to_string(n));
  const double x = q + 1.0;
  // Horner over sum_k C(n,k) B_k x^{n-k}
  double acc = 0.0;
  double binom = 1.0;
  std::vector<double> terms(n + 1);
  for (int k = 0; k <= n; ++k) {
    terms[k] = binom * bernoulli_float(k);
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) acc = acc * x + terms[k];
  return acc;
}

inline rational bernoulli_poly_shifted_exact(int n, const rational& q) {
  if (n < 0 || n > bernoulli_table_size)
    throw error(errc::out_of_range, "Bernoulli polynomial index " + std::to_string(n));
  const rational x = q + 1;
  rational acc = 0;
  for (int k = 0; k <= n; ++k) acc = acc * x + binomial_exact(n, k) * bernoulli_number(k);
  return acc;
}

inline double harmonic(int n) {
  double h = 0.0;
  for (int j = n; j >= 1; --j) h += 1.0 / j;
  return h;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// ---------------------------------------------------------------------------
// Gamma: Lanczos (g = 7, 9 terms) on Re z >= 1/2, reflection below.

inline cplx gamma_fn(Order order) {
  const cplx z = order.value();
  if (is_nonpositive_integer(z))
    throw error(errc::pole, "gamma at non-positive integer " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    return pi / (sin_pi(z) * gamma_fn(Order(1.0 - z)));
  }
  if (z.imag() == 0.0 && z.real() <= 171.0 && z.real() == std::round(z.real()))
    return factorial(static_cast<int>(z.real()) - 1);
  static constexpr double g = 7.0;
  static constexpr double coef[9] = {0.99999999999980993227684700473478,
                                     676.520368121885098567009190444019,
                                     -1259.13921672240287047156078755283,
                                     771.3234287776530788486528258894,
                                     -176.61502916214059906584551354,
                                     12.507343278686904814458936853,
                                     -0.13857109526572011689554707,
                                     9.984369578019570859563e-6,
                                     1.50563273514931155834e-7};
  const cplx w = z - 1.0;
  cplx series = coef[0];
  for (int i = 1; i < 9; ++i) series += coef[i] / (w + double(i));
  const cplx t = w + g + 0.5;
  if (z.imag() == 0.0) {
    const double tr = t.real();
    return std::sqrt(2.0 * pi) * std::pow(tr, w.real() + 0.5) * std::exp(-tr) * series.real();
  }
  return std::sqrt(2.0 * pi) * std::exp((w + 0.5) * std::log(t) - t) * series;
}

inline cplx digamma(Order order) {
  cplx z = order.value();
  if (is_nonpositive_integer(z))
    throw error(errc::pole, "digamma at non-positive integer " + std::to_string(z.real()));
  cplx shift = 0.0;
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    shift = -pi * cos_pi(z) / sin_pi(z);
    z = 1.0 - z;
  }
  while (std::abs(z) < 12.0 || z.real() < 6.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const cplx inv2 = 1.0 / (z * z);
  cplx pw = inv2;
  cplx acc = std::log(z) - 0.5 / z;
  for (int k = 1; k <= 12; ++k) {
    acc -= bernoulli_float(2 * k) / (2.0 * k) * pw;
    pw *= inv2;
  }
  return acc + shift;
}

// ---------------------------------------------------------------------------
// Riemann zeta.

namespace detail {

inline cplx zeta_euler_maclaurin(cplx s) {
  const int n_cut = 15 + static_cast<int>(std::ceil(0.5 * std::abs(s)));
  cplx acc = 0.0;
  for (int n = n_cut - 1; n >= 1; --n) acc += std::exp(-s * std::log(double(n)));
  const double ln_n = std::log(double(n_cut));
  const cplx n_pow = std::exp(-s * ln_n);  // N^{-s}
  acc += n_pow * double(n_cut) / (s - 1.0) + 0.5 * n_pow;
  // sum_k B_2k / (2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx poch = s;
  cplx npow = n_pow / double(n_cut);
  double fact = 2.0;
  const double inv_n2 = 1.0 / (double(n_cut) * n_cut);
  for (int k = 1; k <= 30; ++k) {
    const cplx term = bernoulli_float(2 * k) / fact * poch * npow;
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    npow *= inv_n2;
    fact *= double(2 * k + 1) * double(2 * k + 2);
  }
  return acc;
}

inline cplx zeta_direct(cplx s) {
  cplx acc = 1.0;
  for (int n = 2; n < 64; ++n) {
    const cplx term = std::exp(-s * std::log(double(n)));
    acc += term;
    if (std::abs(term) < 1e-18) break;
  }
  return acc;
}

}  // namespace detail

/// zeta(-j) for j >= 0 from the Bernoulli table, j <= 63.
inline double zeta_nonpositive_integer(int j) {
  if (j == 0) return -0.5;
  if (j % 2 == 0) return 0.0;
  return -bernoulli_float(j + 1) / (j + 1);
}

/// Laurent expansion of zeta about its pole, truncated after the e^4 term;
/// accurate to double precision for |e| < 1e-2.
inline cplx zeta_laurent_near_one(cplx eps) {
  return 1.0 / eps + stieltjes_gamma0 -
         eps * (stieltjes_gamma1 -
                eps * (stieltjes_gamma2 / 2.0 -
                       eps * (stieltjes_gamma3 / 6.0 - eps * stieltjes_gamma4 / 24.0)));
}

inline cplx riemann_zeta(Order order);

/// zeta(1 - u), taking the Laurent branch in terms of u itself so that no
/// rounding of 1 - u is amplified near the pole.
inline cplx zeta_one_minus(cplx u) {
  if (u == cplx(0.0, 0.0)) throw error(errc::pole, "zeta at s = 1");
  if (std::abs(u) < 1e-2) return zeta_laurent_near_one(-u);
  return riemann_zeta(Order(1.0 - u));
}

inline cplx riemann_zeta(Order order) {
  const cplx s = order.value();
  if (s == cplx(1.0, 0.0)) throw error(errc::pole, "zeta at s = 1");
  if (std::abs(s - 1.0) < 1e-2) return zeta_laurent_near_one(s - 1.0);
  if (is_nonpositive_integer(s) && s.real() >= -(bernoulli_table_size - 1))
    return zeta_nonpositive_integer(static_cast<int>(-s.real()));
  if (s.real() >= 40.0) return detail::zeta_direct(s);
  if (s.real() >= 0.5) return detail::zeta_euler_maclaurin(s);
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
  const cplx one_minus = 1.0 - s;
  const cplx prefactor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi));
  return prefactor * sin_pi(0.5 * s) * gamma_fn(Order(one_minus)) * zeta_one_minus(s);
}

}  // namespace tempered
