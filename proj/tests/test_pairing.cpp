#include <cmath>
#include <complex>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "tempered/pairing.hpp"

using namespace tempered;
using boost::math::quadrature::gauss_kronrod;

namespace {

template <class F>
double integrate(F f, double a, double b) {
  return gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-14);
}

// integrable endpoint singularities
template <class F>
double endpoint(F f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-14);
}

// F_s(0) for exp(-x^2/2): 2^{(s-2)/2} Gamma(s/2) / Gamma(s)
double gaussian_profile(double s) {
  if (s == 0.0) return 1.0;
  return std::pow(2.0, 0.5 * (s - 2.0)) * std::tgamma(0.5 * s) / std::tgamma(s);
}

}  // namespace

TEST(TestFunctionFamily, DerivativeMatchesFiniteDifference) {
  const auto f = hermite_gaussian(3, -0.4, 0.9);
  const double h = 1e-4;
  for (double x : {-1.3, 0.0, 0.8}) {
    const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
    EXPECT_NEAR(f.derivative()(x), fd, 1e-7);
    const double fd2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    EXPECT_NEAR(f.derivative(2)(x), fd2, 1e-5);
  }
  EXPECT_THROW(f.derivative(21), error);
}

TEST(TestFunctionFamily, FromMonomial) {
  const auto f = TestFunction::from_monomial(0.7, 1.3, {1.0, -2.0, 0.5});
  for (double x : {-1.0, 0.2, 2.4}) {
    const double expect = (1.0 - 2.0 * x + 0.5 * x * x) * std::exp(-(x - 0.7) * (x - 0.7) / (2.0 * 1.69));
    EXPECT_NEAR(f(x), expect, 1e-14);
  }
  EXPECT_THROW(TestFunction::from_monomial(0.0, 1.0, std::vector<double>(14, 1.0)), error);
  EXPECT_THROW(TestFunction(0.0, -1.0, {1.0}), error);
}

TEST(TestFunctionFamily, TranslateAndReflect) {
  const auto f = hermite_gaussian(2, 0.3, 0.8);
  for (double y : {-0.9, 0.1, 1.7}) {
    EXPECT_NEAR(f.translated(0.6)(y), f(y + 0.6), 1e-14);
    EXPECT_NEAR(f.reflected()(y), f(-y), 1e-14);
    EXPECT_NEAR((f * 2.5)(y), 2.5 * f(y), 1e-14);
  }
}

TEST(TestFunctionFamily, IntegralAndFourier) {
  const auto g = TestFunction::from_monomial(-0.5, 0.7, {0.3, 1.0, 0.4});
  EXPECT_NEAR(g.integral(), integrate([&](double x) { return g(x); }, -20.0, 20.0), 1e-13);
  const auto gh = g.fourier();
  for (double xi : {-2.0, 0.0, 0.7, 3.1}) {
    const double re = integrate([&](double x) { return g(x) * std::cos(x * xi); }, -20.0, 20.0);
    const double im = integrate([&](double x) { return -g(x) * std::sin(x * xi); }, -20.0, 20.0);
    EXPECT_LT(std::abs(gh(xi) - cplx(re, im)), 1e-12) << xi;
  }
}

TEST(TestFunctionFamily, HermiteAndUnitGaussian) {
  const auto h2 = hermite_gaussian(2);
  EXPECT_NEAR(h2(1.5), (1.5 * 1.5 - 1.0) * std::exp(-1.125), 1e-15);
  EXPECT_NEAR(unit_gaussian(1.0, 2.0).integral(), 1.0, 1e-14);
  const auto sup = unit_gaussian().support();
  EXPECT_LT(std::abs(unit_gaussian()(sup.upper)), 1e-17);
  EXPECT_GT(sup.upper, 8.0);
}

TEST(CutoffFunction, Shape) {
  const Cutoff chi(0.5, 1.0);
  EXPECT_EQ(chi(0.0), 1.0);
  EXPECT_EQ(chi(0.5), 1.0);
  EXPECT_EQ(chi(-1.0), 0.0);
  EXPECT_NEAR(chi(0.75), 0.5, 1e-15);
  EXPECT_EQ(chi(0.6), chi(-0.6));
  double prev = 1.0;
  for (double t = 0.5; t <= 1.0; t += 0.01) {
    EXPECT_LE(chi(t), prev + 1e-15);
    prev = chi(t);
  }
  EXPECT_THROW(Cutoff(1.0, 0.5), error);
}

TEST(Profile, GaussianClosedForm) {
  const auto f = hermite_gaussian(0);
  for (double s : {2.5, 1.0, 0.5, 0.0, -0.5, -1.5, -2.5}) EXPECT_NEAR(profile(Order(s), 0.0, f).real(), gaussian_profile(s), 1e-11) << s;
  EXPECT_NEAR(profile(Order(1.0), 0.0, unit_gaussian()).real(), 0.5, 1e-13);
  EXPECT_NEAR(profile(Order(0.5), 0.0, f).real(), 1.21628021425752, 1e-12);
}

TEST(Profile, IndependentOfIntegrationByParts) {
  const auto f = hermite_gaussian(1, -0.5, 0.8);
  for (double s : {0.5, 1.7, -0.3})
    for (double t : {-1.0, 0.3}) {
      const int k0 = detail::default_profile_order(Order(s));
      const cplx a = profile(Order(s), t, f, k0);
      EXPECT_LT(std::abs(profile(Order(s), t, f, k0 + 1) - a), 1e-10);
      EXPECT_LT(std::abs(profile(Order(s), t, f, k0 + 3) - a), 1e-10);
    }
  EXPECT_THROW(profile(Order(-1.5), 0.0, f, 0), error);
}

TEST(Profile, DeltaAtNonpositiveIntegers) {
  const auto f = hermite_gaussian(2, 0.4, 0.9);
  EXPECT_NEAR(profile(Order(0.0), 0.2, f).real(), f(0.2), 1e-15);
  EXPECT_NEAR(profile(Order(-1.0), 0.2, f).real(), -f.derivative()(0.2), 1e-15);
  EXPECT_NEAR(profile(Order(-2.0), 0.2, f).real(), f.derivative(2)(0.2), 1e-14);
}

TEST(Profile, DecayClass) {
  // F_s vanishes beyond the support and behaves like |t|^{s-1} / Gamma(s) * int f far left
  const auto f = unit_gaussian();
  for (double s : {0.5, 2.5}) {
    const Profile<TestFunction> F(Order(s), f);
    EXPECT_EQ(F(F.support().upper + 1.0), cplx(0.0));
    const double t = -100.0;
    const double expect = std::pow(-t, s - 1.0) / std::tgamma(s);
    EXPECT_NEAR(F(t).real() / expect, 1.0, 1e-3) << s;
  }
}

TEST(GammaPlus, SpecialOrders) {
  const auto f = hermite_gaussian(1, 0.3, 1.1);
  EXPECT_NEAR(pair_gamma_plus(Order(0.0), f).value.real(), f(0.0), 1e-15);
  EXPECT_NEAR(pair_gamma_plus(Order(-1.0), f).value.real(), -f.derivative()(0.0), 1e-15);
  const double oracle = integrate([&](double x) { return x * f(x); }, 0.0, 30.0);
  EXPECT_NEAR(pair_gamma_plus(Order(2.0), f).value.real(), oracle, 1e-12);
}

TEST(LiZero, EvenTestFunction) {
  // k(t) + k(-t) = -1, so the even part pairs to -int f / 2
  EXPECT_NEAR(pair_li0(unit_gaussian()).value.real(), -0.5, 1e-12);
  EXPECT_NEAR(pair_li0(hermite_gaussian(2, 0.0, 0.7)).value.real(), -0.5 * hermite_gaussian(2, 0.0, 0.7).integral(), 1e-12);
}

TEST(LiZero, FarFromOrigin) {
  // the support stays away from the pole, so plain quadrature applies
  for (double mu : {30.0, -30.0}) {
    const auto f = unit_gaussian(mu, 1.0);
    const double oracle = integrate([&](double t) { return f(t) / std::expm1(-t); }, mu - 15.0, mu + 15.0);
    EXPECT_NEAR(pair_li0(f).value.real(), oracle, 1e-12 + 1e-12 * std::abs(oracle)) << mu;
  }
}

TEST(LiZero, PrincipalValueOracle) {
  // PV int f k = int_0^inf f(t) k(t) + f(-t) k(-t) dt; the 1/t poles cancel
  for (double mu : {0.4, 4.0, -3.0}) {
    const auto f = hermite_gaussian(1, mu, 0.9);
    auto sym = [&](double t) { return f(t) / std::expm1(-t) + f(-t) / std::expm1(t); };
    const double oracle = integrate(sym, 0.0, 1.0) + integrate(sym, 1.0, 40.0);
    EXPECT_NEAR(pair_li0(f).value.real(), oracle, 1e-11) << mu;
  }
}

TEST(LiPairing, AgreesWithLiZeroAtOrderZero) {
  const auto f = hermite_gaussian(2, -0.4, 0.8);
  EXPECT_LT(std::abs(pair_li(Order(0.0), f).value - pair_li0(f).value), 1e-12);
}

TEST(LiPairing, DirectQuadratureOracle) {
  // li_s is locally integrable for s > 0: integrate pointwise values against f
  const auto f = unit_gaussian(-2.0, 0.8);
  for (double s : {2.5, 1.5, 0.5}) {
    auto g = [&](double x) { return li_eval(Order(s), {x}).value.real() * f(x); };
    const double near = endpoint(g, -1.0, 0.0) + endpoint(g, 0.0, 1.0);
    const double oracle = integrate(g, -14.0, -1.0) + near + integrate(g, 1.0, 5.4);
    EXPECT_NEAR(pair_li(Order(s), f).value.real(), oracle, 1e-9) << s;
  }
}

TEST(LiPairing, MatchesDirectPairing) {
  const auto f = hermite_gaussian(1, 0.0, 0.6);
  for (cplx s : {cplx(0.5), cplx(1.0), cplx(2.0), cplx(1.5, 0.8)}) {
    const auto a = pair_li(Order(s), f);
    const auto b = pair_direct(Order(s), f);
    EXPECT_LT(std::abs(a.value - b.value), 1e-9) << s;
  }
}

TEST(LiPairing, CutoffIndependence) {
  const auto f = hermite_gaussian(3, -0.3, 0.9);
  for (double s : {-1.5, 0.5, 2.0}) {
    const cplx a = pair_li(Order(s), f).value;
    EXPECT_LT(std::abs(pair_li(Order(s), f, Cutoff(0.2, 0.4)).value - a), 1e-10);
    EXPECT_LT(std::abs(pair_li(Order(s), f, Cutoff(1.0, 2.5)).value - a), 1e-10);
  }
}

TEST(LiPairing, ContinuousThroughIntegers) {
  const auto f = hermite_gaussian(0, -0.5, 1.0);
  for (double n : {-1.0, 1.0, 2.0}) {
    const cplx c = pair_li(Order(n), f).value;
    const cplx l = pair_li(Order(n - 1e-6), f).value;
    const cplx r = pair_li(Order(n + 1e-6), f).value;
    EXPECT_LT(std::abs(0.5 * (l + r) - c), 1e-9) << n;
    EXPECT_LT(std::abs(r - l), 1e-4);
  }
}

TEST(LiPairing, FunctionalEquation) {
  for (double s : {-1.5, 0.5, 1.0, 2.5}) {
    EXPECT_LT(verify_functional_equation(Order(s), hermite_gaussian(1, 0.4, 0.9)), 1e-9) << s;
    EXPECT_LT(verify_functional_equation(Order(s), hermite_gaussian(2, -1.0, 1.2)), 1e-9) << s;
  }
}

TEST(DirectPairing, Errors) {
  try {
    pair_direct(Order(-0.5), unit_gaussian());
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::non_integrable);
  }
  try {
    pair_direct(Order(1.5), unit_gaussian(3.0, 1.0));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::domain);
  }
}

TEST(EtaPairing, CenteredGaussianClosedForm) {
  // <(x +- i0)^a, e^{-x^2/2}> = 2^{(a-1)/2} Gamma((a+1)/2) (1 + e^{+- i pi a})
  const auto f = hermite_gaussian(0);
  for (double a : {-0.5, 0.3, 1.5, -1.5, -2.5}) {
    const cplx half = std::pow(2.0, 0.5 * (a - 1.0)) * std::tgamma(0.5 * (a + 1.0));
    const cplx plus = half * (1.0 + std::exp(cplx(0.0, pi * a)));
    const cplx minus = half * (1.0 + std::exp(cplx(0.0, -pi * a)));
    EXPECT_LT(std::abs(pair_eta(Order(a), EtaSide::plus, f).value - plus), 1e-11) << a;
    EXPECT_LT(std::abs(pair_eta(Order(a), EtaSide::minus, f).value - minus), 1e-11) << a;
  }
}

TEST(EtaPairing, NegativeIntegers) {
  const auto f = hermite_gaussian(1, 0.6, 0.9);
  EXPECT_NEAR(pair_eta(Order(0.0), EtaSide::plus, f).value.real(), f.integral(), 1e-14);
  // (x +- i0)^{-1} = PV 1/x -+ i pi delta
  const double pv = integrate([&](double x) { return (f(x) - f(-x)) / x; }, 0.0, 30.0);
  const cplx plus = pair_eta(Order(-1.0), EtaSide::plus, f).value;
  const cplx minus = pair_eta(Order(-1.0), EtaSide::minus, f).value;
  EXPECT_NEAR(plus.real(), pv, 1e-11);
  EXPECT_NEAR(plus.imag(), -pi * f(0.0), 1e-13);
  EXPECT_NEAR(minus.imag(), pi * f(0.0), 1e-13);
}

TEST(EtaPairing, LimitFromComplexPlane) {
  // <(x + i eps)^{-1/2}, f> for shrinking eps, extrapolated to eps = 0
  const auto f = hermite_gaussian(1, 0.6, 0.9);
  auto at = [&](double eps) {
    auto part = [&](bool imag) {
      auto g = [&](double x) {
        const cplx v = std::pow(cplx(x, eps), -0.5) * f(x);
        return imag ? v.imag() : v.real();
      };
      // x = eps sinh(u) spreads the eps-sized feature near the origin
      const double u_max = std::asinh(0.05 / eps);
      auto near = [&](double u) { return g(eps * std::sinh(u)) * eps * std::cosh(u); };
      return integrate(g, -12.0, -0.05) + integrate(near, -u_max, 0.0) + integrate(near, 0.0, u_max) +
             integrate(g, 0.05, 12.0);
    };
    return cplx(part(false), part(true));
  };
  const double e = 1e-3;
  const cplx a1 = at(e), a2 = at(e / 2.0), a4 = at(e / 4.0);
  // eliminate the O(eps) and O(eps^2) terms
  const cplx r1 = 2.0 * a2 - a1, r2 = 2.0 * a4 - a2;
  const cplx limit = (4.0 * r2 - r1) / 3.0;
  EXPECT_LT(std::abs(pair_eta(Order(-0.5), EtaSide::plus, f).value - limit), 1e-7);
}

TEST(Fourier, GammaPlusTransform) {
  for (double s : {-1.5, 0.5, 1.0, 3.0}) {
    EXPECT_LT(verify_fourier_gamma(Order(s), hermite_gaussian(0, 0.0, 1.0)), 1e-9) << s;
    EXPECT_LT(verify_fourier_gamma(Order(s), hermite_gaussian(2, 0.7, 1.2)), 1e-9) << s;
  }
}
