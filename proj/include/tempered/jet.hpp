#pragma once

// One-sided Taylor jets at the origin: value and first derivatives of f at
// 0+ or 0-, estimated from samples on one side only. Used to check that a
// function assembled separately on x < 0 and x > 0 joins smoothly.

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

namespace tempered {

inline constexpr int jet_order = 4;  // value + 3 derivatives

struct Jet {
  std::array<std::complex<double>, jet_order> d{};
  std::array<double, jet_order> err{};
};

struct JetOptions {
  double h = 0.05;    // largest step of the ladder
  int nodes = 6;      // one-sided interpolation nodes h, 2h, ..., nodes*h
  int levels = 3;     // ladder h, h/2, h/4, ...
};

namespace detail {

// weights[d][i]: coefficient of x^d of the polynomial interpolating the data
// at nodes 1..n (scaled variable).
inline std::vector<std::vector<double>> interpolation_weights(int n) {
  // invert the Vandermonde matrix V[i][j] = (i+1)^j in long double
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0.0L));
  for (int i = 0; i < n; ++i) {
    long double p = 1.0L;
    for (int j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= (i + 1);
    }
    a[i][n + i] = 1.0L;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    const long double inv = 1.0L / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const long double f = a[r][c];
      if (f == 0.0L) continue;
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  // coefficients = V^{-1} data; row d of V^{-1} gives the weights of x^d
  std::vector<std::vector<double>> w(n, std::vector<double>(n));
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < n; ++i) w[d][i] = static_cast<double>(a[d][n + i]);
  return w;
}

template <class F>
std::array<std::complex<double>, jet_order> raw_jet(F& f, double side, double h, int nodes) {
  const auto w = interpolation_weights(nodes);
  std::vector<std::complex<double>> samples(nodes);
  for (int i = 0; i < nodes; ++i) samples[i] = f(side * h * (i + 1));
  std::array<std::complex<double>, jet_order> out{};
  double fact = 1.0;
  for (int d = 0; d < jet_order && d < nodes; ++d) {
    std::complex<double> acc{};
    for (int i = 0; i < nodes; ++i) acc += w[d][i] * samples[i];
    out[d] = fact * acc / std::pow(side * h, d);
    fact *= (d + 1);
  }
  return out;
}

}  // namespace detail

/// Jet of f at 0 from the side sign(side) (+1 right, -1 left), with
/// Richardson extrapolation over the step ladder.
template <class F>
Jet one_sided_jet(F&& f, double side, JetOptions opt = {}) {
  std::vector<std::array<std::complex<double>, jet_order>> ladder;
  double h = opt.h;
  for (int l = 0; l < opt.levels; ++l, h *= 0.5) ladder.push_back(detail::raw_jet(f, side, h, opt.nodes));
  Jet out;
  for (int d = 0; d < jet_order; ++d) {
    // error of derivative d behaves like h^{nodes - d}, then the next power
    std::vector<std::complex<double>> col;
    for (const auto& j : ladder) col.push_back(j[d]);
    std::complex<double> previous_best = col.back();
    int p = opt.nodes - d;
    while (col.size() > 1) {
      const double f2 = std::pow(2.0, p);
      std::vector<std::complex<double>> next;
      for (std::size_t i = 0; i + 1 < col.size(); ++i) next.push_back((f2 * col[i + 1] - col[i]) / (f2 - 1.0));
      previous_best = col.back();
      col = std::move(next);
      ++p;
    }
    out.d[d] = col.front();
    out.err[d] = std::abs(col.front() - previous_best);
  }
  return out;
}

struct TwoSidedComparison {
  Jet left;
  Jet right;
  std::array<double, jet_order> gap{};
};

template <class F>
TwoSidedComparison compare_sides(F&& f, JetOptions opt = {}) {
  TwoSidedComparison c;
  c.left = one_sided_jet(f, -1.0, opt);
  c.right = one_sided_jet(f, 1.0, opt);
  for (int d = 0; d < jet_order; ++d) c.gap[d] = std::abs(c.left.d[d] - c.right.d[d]);
  return c;
}

}  // namespace tempered
