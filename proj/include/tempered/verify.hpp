#pragma once

// Self-verification suites: each check computes a residual and compares it
// with a fixed tolerance. Reference constants are frozen high-precision
// values.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tempered/error.hpp"
#include "tempered/jet.hpp"
#include "tempered/kernels.hpp"
#include "tempered/modified.hpp"
#include "tempered/pairing.hpp"
#include "tempered/polylog.hpp"
#include "tempered/singular.hpp"
#include "tempered/test_function.hpp"

namespace tempered {

struct Check {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string message;  // set when the check threw
  std::vector<std::pair<std::string, double>> table;
};

namespace reference {
inline constexpr double li2_at_minus_one = 0.40875428734889626906;  // Li_2(1/e)
inline constexpr double catalan = 0.91596559417721901505;
inline constexpr double zeta_half = -1.4603545088095868129;
inline constexpr double first_zeta_zero = 14.134725141734693790;
}  // namespace reference

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string suite) : suite_(std::move(suite)) {}

  using Table = std::vector<std::pair<std::string, double>>;

  void add(const std::string& name, double tolerance, const std::function<double(Table&)>& body) {
    Check c;
    c.suite = suite_;
    c.name = name;
    c.tolerance = tolerance;
    try {
      c.residual = body(c.table);
      c.passed = std::isfinite(c.residual) && c.residual <= tolerance;
    } catch (const std::exception& e) {
      c.residual = std::numeric_limits<double>::quiet_NaN();
      c.message = e.what();
      c.passed = false;
    }
    checks_.push_back(std::move(c));
  }

  void add(const std::string& name, double tolerance, const std::function<double()>& body) {
    add(name, tolerance, [&](Table&) { return body(); });
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::vector<TestFunction> probe_functions() {
  return {hermite_gaussian(0, 0.0, 1.0), hermite_gaussian(1, -0.5, 0.8), hermite_gaussian(2, 0.7, 1.2),
          hermite_gaussian(3, -1.5, 0.6)};
}

}  // namespace detail

inline std::vector<Check> verify_kernels() {
  detail::SuiteBuilder b("kernels");
  b.add("gamma_reflection", 1e-13, [] {
    const cplx s(0.3, 0.8);
    const cplx lhs = gamma_fn(Order(s)) * gamma_fn(Order(1.0 - s));
    return std::abs(lhs - pi / sin_pi(s)) / std::abs(lhs);
  });
  b.add("gamma_factorial", 1e-15, [] { return std::abs(gamma_fn(Order(11.0)) - 3628800.0) / 3628800.0; });
  b.add("digamma_one", 1e-14, [] { return std::abs(digamma(Order(1.0)) + euler_gamma); });
  b.add("zeta_two", 1e-14, [] { return std::abs(riemann_zeta(Order(2.0)) - pi * pi / 6.0); });
  b.add("zeta_minus_one", 1e-15, [] { return std::abs(riemann_zeta(Order(-1.0)) + 1.0 / 12.0); });
  b.add("zeta_half", 1e-13, [] { return std::abs(riemann_zeta(Order(0.5)) - reference::zeta_half); });
  b.add("zeta_first_zero", 1e-9, [] { return std::abs(riemann_zeta(Order(0.5, reference::first_zeta_zero))); });
  b.add("bernoulli_12", 0.0, [] {
    return bernoulli_number(12) == rational(-691, 2730) ? 0.0 : 1.0;
  });
  b.add("bernoulli_odd_at_half", 0.0, [] {
    for (int n = 1; n < 60; n += 2)
      if (bernoulli_poly_shifted_exact(n, rational(-1, 2)) != 0) return 1.0;
    return 0.0;
  });
  return b.take();
}

inline std::vector<Check> verify_polylog() {
  detail::SuiteBuilder b("polylog");
  b.add("overlap_direct_vs_expansion", 1e-9, [] {
    double worst = 0.0;
    for (const cplx s : {cplx(0.5), cplx(-0.5), cplx(1.5, 0.7), cplx(2.5)}) {
      for (int i = 0; i < 25; ++i) {
        const double x = -1.8 + 1.2 * i / 24.0;
        const cplx direct = li_direct_series(Order(s), x);
        const cplx zagier = li_zagier(Order(s), {x, Side::principal});
        worst = std::max(worst, std::abs(direct - zagier) / std::abs(direct));
      }
    }
    return worst;
  });
  b.add("li1_log_identity", 1e-12, [] {
    double worst = 0.0;
    for (double x : {-4.0, -1.0, -0.1, 0.1, 1.0})
      worst = std::max(worst, std::abs(li_eval(Order(1.0), {x, Side::principal}).value +
                                       std::log(std::abs(-std::expm1(x)))));
    return worst;
  });
  b.add("li2_at_minus_one", 1e-10, [] {
    return std::abs(li_eval(Order(2.0), {-1.0, Side::principal}).value - reference::li2_at_minus_one);
  });
  b.add("integer_guard_continuity", 1e-6, [](detail::SuiteBuilder::Table& t) {
    double worst = 0.0;
    for (double x : {-0.5, 0.3}) {
      const EvalPoint p{x, Side::principal};
      const cplx limit = li_eval(Order(2.0), p).value;
      auto at = [&](double h) { return li_eval(Order(2.0 + h), p).value; };
      // quadratic extrapolation to h = 0 from each side
      auto extrapolate = [&](double h) { return 3.0 * at(h) - 3.0 * at(2.0 * h) + at(3.0 * h); };
      const double right_gap = std::abs(extrapolate(1e-3) - limit);
      const double left_gap = std::abs(extrapolate(-1e-3) - limit);
      t.push_back({"x=" + detail::num(x) + " right", right_gap});
      t.push_back({"x=" + detail::num(x) + " left", left_gap});
      worst = std::max({worst, right_gap, left_gap});
    }
    return worst;
  });
  b.add("positive_axis_zeta", 1e-14, [] { return std::abs(Li_eval(Order(2.0), 1.0) - pi * pi / 6.0); });
  b.add("boundary_mean_is_principal", 1e-13, [] {
    const Order s(0.7, 0.2);
    const double x = 1.3;
    const cplx above = li_eval(s, {x, Side::above}).value;
    const cplx below = li_eval(s, {x, Side::below}).value;
    return std::abs(0.5 * (above + below) - li_eval(s, {x, Side::principal}).value);
  });
  return b.take();
}

inline std::vector<Check> verify_singular() {
  detail::SuiteBuilder b("singular");
  auto add_jet = [&](const std::string& label, Order s) {
    b.add("remainder_smooth_" + label, 1e-6, [s](detail::SuiteBuilder::Table& t) {
      auto c = compare_sides([&](double x) { return smooth_remainder(s, {x, Side::principal}); });
      t.push_back({"value_gap", c.gap[0]});
      t.push_back({"derivative_gap", c.gap[1]});
      return std::max(c.gap[0], c.gap[1]);
    });
  };
  add_jet("s=0.5", Order(0.5));
  add_jet("s=1.5", Order(1.5));
  for (int n : {0, 1, 2, 3, -1}) add_jet("n=" + std::to_string(n), Order(double(n)));
  b.add("remainder_taylor_matches", 1e-12, [] {
    const Order s(0.5);
    const auto c = remainder_taylor(s, 1);
    auto j = one_sided_jet([&](double x) { return smooth_remainder(s, {x, Side::principal}); }, -1.0);
    return std::abs(j.d[0] - c[0]);
  });
  return b.take();
}

inline std::vector<Check> verify_modified() {
  detail::SuiteBuilder b("modified");
  auto smoothness = [&](int n, double value_tol, double deriv_tol) {
    const double zeta_n = riemann_zeta(Order(double(n))).real();
    b.add("lambda_i" + std::to_string(n) + "_value", value_tol, [n, zeta_n](detail::SuiteBuilder::Table& t) {
      auto c = compare_sides([&](double x) { return cplx(lambda_i(n, x)); });
      for (int d = 0; d < jet_order; ++d) {
        t.push_back({"left_d" + std::to_string(d), c.left.d[d].real()});
        t.push_back({"right_d" + std::to_string(d), c.right.d[d].real()});
        t.push_back({"gap_d" + std::to_string(d), c.gap[d]});
      }
      return std::max(std::abs(c.left.d[0].real() - zeta_n), std::abs(c.right.d[0].real() - zeta_n));
    });
    b.add("lambda_i" + std::to_string(n) + "_derivatives", deriv_tol, [n] {
      auto c = compare_sides([&](double x) { return cplx(lambda_i(n, x)); });
      return std::max({c.gap[1], c.gap[2], c.gap[3]});
    });
  };
  smoothness(2, 1e-8, 1e-6);
  smoothness(4, 1e-5, 1e-5);
  b.add("log_coefficients", 1e-10, [](detail::SuiteBuilder::Table& t) {
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
      const cplx c = extract_log_coefficient(n, 0.4);
      const double expected = lambda_i_log_coefficient(n);
      t.push_back({"n=" + std::to_string(n), c.real()});
      worst = std::max(worst, std::abs(c - expected));
    }
    return worst;
  });
  b.add("bloch_wigner_i", 1e-10, [] { return std::abs(bloch_wigner(cplx(0.0, 1.0)) - reference::catalan); });
  b.add("bloch_wigner_cut", 1e-5, [] {
    return std::abs(bloch_wigner(cplx(2.0, 1e-6)) - bloch_wigner(cplx(2.0, -1e-6)));
  });
  b.add("bloch_wigner_five_term", 1e-9, [] {
    double worst = 0.0;
    const std::pair<cplx, cplx> pts[] = {{cplx(0.3, 0.4), cplx(-0.7, 1.2)},
                                         {cplx(2.0, 0.5), cplx(0.1, -0.3)},
                                         {cplx(-1.5, 0.2), cplx(0.5, 0.5)}};
    for (const auto& [x, y] : pts) {
      const cplx xy = 1.0 - x * y;
      worst = std::max(worst, std::abs(bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((1.0 - x) / xy) +
                                       bloch_wigner(xy) + bloch_wigner((1.0 - y) / xy)));
    }
    return worst;
  });
  b.add("modified_matches_bloch_wigner", 1e-13, [] {
    const cplx z(0.4, 1.7);
    return std::abs(classical_modified(ModifiedSpec(2), z) - bloch_wigner(z));
  });
  return b.take();
}

inline std::vector<Check> verify_pairing() {
  detail::SuiteBuilder b("pairing");
  const auto probes = detail::probe_functions();
  const TestFunction gauss = unit_gaussian();
  for (double s : {-1.5, 0.5, 1.0, 2.5}) {
    b.add("functional_equation_s=" + detail::num(s), 1e-7, [s, &probes](detail::SuiteBuilder::Table& t) {
      double worst = 0.0;
      for (std::size_t i = 0; i < probes.size(); ++i) {
        const double r = verify_functional_equation(Order(s), probes[i]);
        t.push_back({"probe" + std::to_string(i), r});
        worst = std::max(worst, r);
      }
      return worst;
    });
  }
  b.add("even_part", 1e-10, [&] { return std::abs(pair_li0(gauss).value + 0.5); });
  b.add("cutoff_independence", 1e-8, [&] {
    double worst = 0.0;
    for (double s : {0.0, 0.5, 1.0, 2.5})
      for (const auto& f : probes)
        worst = std::max(worst, std::abs(pair_li(Order(s), f).value - pair_li(Order(s), f, Cutoff(0.3, 0.8)).value));
    return worst;
  });
  b.add("entirety_mean_value", 1e-8, [&] {
    double worst = 0.0;
    for (double s0 : {0.0, 1.0, 2.0}) {
      cplx mean{};
      for (int j = 0; j < 16; ++j) mean += pair_li(Order(s0 + 0.3 * std::polar(1.0, 2.0 * pi * j / 16.0)), gauss).value;
      worst = std::max(worst, std::abs(mean / 16.0 - pair_li(Order(s0), gauss).value));
    }
    return worst;
  });
  b.add("fourier_gamma", 1e-8, [&] {
    double worst = 0.0;
    for (double s : {-1.5, 0.5, 1.0, 3.0})
      for (const auto& f : probes) worst = std::max(worst, verify_fourier_gamma(Order(s), f));
    return worst;
  });
  b.add("sokhotski", 1e-9, [&] {
    double worst = 0.0;
    for (const auto& f : probes) {
      const cplx jump = pair_eta(Order(-1.0), EtaSide::plus, f).value - pair_eta(Order(-1.0), EtaSide::minus, f).value;
      worst = std::max(worst, std::abs(jump + cplx(0.0, 2.0 * pi) * f(0.0)));
    }
    return worst;
  });
  b.add("direct_agreement", 1e-7, [] {
    double worst = 0.0;
    const std::pair<double, TestFunction> cases[] = {{2.0, unit_gaussian(-2.0, 0.8)},
                                                     {1.0, unit_gaussian(0.0, 0.6)},
                                                     {0.5, unit_gaussian(0.0, 0.6)},
                                                     {2.5, unit_gaussian(-3.0, 1.0)}};
    for (const auto& [s, f] : cases)
      worst = std::max(worst, std::abs(pair_li(Order(s), f).value - pair_direct(Order(s), f).value));
    return worst;
  });
  return b.take();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernels", "polylog", "singular", "modified", "pairing"};
  return names;
}

inline std::vector<Check> run_suite(const std::string& name) {
  if (name == "kernels") return verify_kernels();
  if (name == "polylog") return verify_polylog();
  if (name == "singular") return verify_singular();
  if (name == "modified") return verify_modified();
  if (name == "pairing") return verify_pairing();
  if (name == "all") {
    std::vector<Check> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw error(errc::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace tempered
