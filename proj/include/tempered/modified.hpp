#pragma once

// Modified polylogarithms.
//
// On the real line:  lambda_i_n(x) = sum_{k<n} 2^k B_k / k! x^k li_{n-k}(x)
// In the plane:      sum_{k<n} 2^k B_k / k! log^k|z| Li_{n-k}(z), projected on
//                    the imaginary part for even n and the real part for odd n.
// B_k are the standard Bernoulli numbers (B_1 = -1/2); for n = 2 both reduce
// to li_2 - x li_1 and to the Bloch-Wigner function respectively.

#include <cmath>
#include <complex>
#include <string>

#include "tempered/error.hpp"
#include "tempered/kernels.hpp"
#include "tempered/polylog.hpp"

namespace tempered {

enum class Projection { real_part, imag_part, full };

inline Projection default_projection(int n) { return n % 2 == 0 ? Projection::imag_part : Projection::real_part; }

struct ModifiedSpec {
  int n;
  Projection projection;

  explicit ModifiedSpec(int weight) : ModifiedSpec(weight, default_projection(weight)) {}
  ModifiedSpec(int weight, Projection p) : n(weight), projection(p) {
    if (n < 1) throw error(errc::invalid_argument, "modified polylogarithm weight must be >= 1");
  }
};

/// 2^k B_k / k!
inline double modified_coefficient(int k) { return std::ldexp(bernoulli_float(k), k) / factorial(k); }

/// Boundary value of lambda_i_n at p (complex off the principal side).
inline cplx lambda_i_boundary(int n, EvalPoint p) {
  if (n < 1) throw error(errc::invalid_argument, "weight must be >= 1");
  if (p.x == 0.0) {
    if (n >= 2) return riemann_zeta(Order(double(n)));
    throw error(errc::origin, "lambda_i_1 = li_1 is singular at x = 0");
  }
  cplx acc{};
  double xk = 1.0;
  for (int k = 0; k < n; ++k, xk *= p.x) {
    const double c = modified_coefficient(k);
    if (c == 0.0) continue;
    acc += c * xk * li_eval(Order(double(n - k)), p).value;
  }
  return acc;
}

/// lambda_i_n(x), principal value for x > 0.
inline double lambda_i(int n, double x) { return lambda_i_boundary(n, {x, Side::principal}).real(); }

/// Coefficient c of the residual singularity c x^{n-1} log|x| of lambda_i_n,
/// -2^{n-1} B^{n-1}(-1/2) / (n-1)!; zero for even n.
inline double lambda_i_log_coefficient(int n) {
  return -std::ldexp(bernoulli_poly_shifted(n - 1, -0.5), n - 1) / factorial(n - 1);
}

/// The same coefficient read off from the numerics: across x > 0 the
/// boundary values differ by -2 pi i c x^{n-1}.
inline cplx extract_log_coefficient(int n, double x) {
  if (!(x > 0.0)) throw error(errc::domain, "coefficient extraction needs x > 0");
  const cplx jump = lambda_i_boundary(n, {x, Side::above}) - lambda_i_boundary(n, {x, Side::below});
  return -jump / (cplx(0.0, 2.0 * pi) * std::pow(x, n - 1));
}

/// Li_n(z) for integer n >= 1 and complex z, |log z| < R or |z| <= 0.6.
/// On the cut z > 1 the side picks the boundary value (principal by default).
inline cplx polylog_integer(int n, cplx z, Side side_on_cut = Side::principal) {
  if (n < 1) throw error(errc::invalid_argument, "polylog_integer needs n >= 1");
  if (z == cplx(1.0, 0.0)) {
    if (n >= 2) return riemann_zeta(Order(double(n)));
    throw error(errc::pole, "Li_1 at z = 1");
  }
  if (std::abs(z) <= 0.6) {
    cplx acc{};
    cplx zk = z;
    for (int k = 1; k < 200; ++k, zk *= z) {
      const cplx term = zk / std::pow(double(k), n);
      acc += term;
      if (std::abs(term) <= 1e-17 * std::abs(acc)) break;
    }
    return acc;
  }
  if (z.imag() == 0.0 && z.real() > 0.0) {
    const double x = std::log(z.real());
    if (n == 1 && x < 0.0) return -std::log1p(-z.real());
    return li_eval(Order(double(n)), {x, side_on_cut}).value;
  }
  const cplx x = std::log(z);
  if (!(std::abs(x) < zagier_radius))
    throw error(errc::domain, "|log z| beyond the expansion radius");
  if (n == 1) return -std::log(1.0 - z);
  const int m = n - 1;
  const cplx lead = std::pow(x, m) / factorial(m) * (harmonic(m) - std::log(-x));
  return lead + detail::zagier_regular(cplx(double(n), 0.0), x, m).value;
}

inline cplx classical_modified(ModifiedSpec spec, cplx z) {
  if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
    throw error(errc::domain, "modified polylogarithm needs z not in {0, 1}");
  const double log_abs = std::log(std::abs(z));
  cplx acc{};
  double lk = 1.0;
  for (int k = 0; k < spec.n; ++k, lk *= log_abs) {
    const double c = modified_coefficient(k);
    if (c == 0.0) continue;
    acc += c * lk * polylog_integer(spec.n - k, z);
  }
  switch (spec.projection) {
    case Projection::real_part: return acc.real();
    case Projection::imag_part: return acc.imag();
    case Projection::full: break;
  }
  return acc;
}

/// D(z) = Im Li_2(z) + arg(1 - z) log|z|; zero on the real axis.
inline double bloch_wigner(cplx z) {
  if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
    throw error(errc::domain, "Bloch-Wigner function needs z not in {0, 1}");
  if (z.imag() == 0.0) return 0.0;
  return polylog_integer(2, z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

}  // namespace tempered
