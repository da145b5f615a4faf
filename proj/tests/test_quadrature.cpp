#include "sqz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using sqz::QuadratureGeometry;
using sqz::VarianceMode;

namespace {
constexpr double kPi = 3.14159265358979323846;

QuadratureGeometry geom(double gl, double al = 0.0) { return {gl, al}; }

// Minimize the variance curve numerically: coarse bracket over one period,
// then golden-section refinement to machine precision. Deliberately blind to
// the closed-form minimizer.
double refined_min_variance(double gl) {
  auto f = [&](double chi) { return sqz::variance(geom(gl), chi); };
  const int n = 4096;
  int besti = 0;
  double best = f(0.0);
  for (int i = 1; i < n; ++i) {
    double v = f(kPi * i / n);
    if (v < best) {
      best = v;
      besti = i;
    }
  }
  double a = kPi * (besti - 1) / n, b = kPi * (besti + 1) / n;
  const double r = 0.6180339887498949;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  return std::min({best, f1, f2});
}
}  // namespace

TEST_CASE("output variance at pinned phases") {
  CHECK(sqz::variance(geom(0.0), 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  // chi = 0 reads the antisqueezed noise 1 + (g l)^2.
  CHECK(sqz::variance(geom(5.0), 0.0) == doctest::Approx(26.0).epsilon(1e-14));
  CHECK(sqz::variance(geom(5.0), kPi / 2) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("optimal phase") {
  // Large rotation: quadrature angle approaches pi/2.
  CHECK(sqz::optimal_phase(1e8) == doctest::Approx(kPi / 2).epsilon(1e-7));
  CHECK(sqz::optimal_phase(5.0) ==
        doctest::Approx(1.3805431382387142).epsilon(1e-12));
  // Sign flip mirrors the phase across pi/2.
  CHECK(sqz::optimal_phase(-5.0) ==
        doctest::Approx(kPi - 1.3805431382387142).epsilon(1e-12));

  bool degenerate = false;
  CHECK(sqz::optimal_phase(0.0, &degenerate) == 0.0);
  CHECK(degenerate);
}

TEST_CASE("minimum lossless variance, exact and asymptotic") {
  CHECK(sqz::min_variance(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sqz::min_variance(5.0) ==
        doctest::Approx(0.03708798216373992).epsilon(1e-12));
  CHECK(sqz::min_variance(5.0, VarianceMode::asymptotic) ==
        doctest::Approx(0.16).epsilon(1e-15));
  // v_min * v_max = 1 for the lossless map: check against the conjugate
  // quadrature sum rule v(chi) + v(chi + pi/2) = 2 + G.
  double g = 5.0, G = g * g;
  double vmin = sqz::min_variance(g);
  CHECK(1.0 / vmin + vmin == doctest::Approx(2.0 + G).epsilon(1e-12));
}

TEST_CASE("closed-form minimum matches a refined numerical search") {
  // Relative agreement to 1e-10 across four decades of rotation strength.
  for (double gl : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0}) {
    double exact = sqz::min_variance(gl);
    double grid = refined_min_variance(gl);
    CHECK(std::abs(grid - exact) / exact < 1e-10);
    double chi = sqz::optimal_phase(gl);
    CHECK(sqz::variance(geom(gl), chi) ==
          doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("variance is pi-periodic and obeys the conjugate sum rule") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> chi(-kPi, kPi), gl(-10.0, 10.0);
  for (int i = 0; i < 300; ++i) {
    double g = gl(rng), c = chi(rng);
    double v = sqz::variance(geom(g), c);
    CHECK(sqz::variance(geom(g), c + kPi) == doctest::Approx(v).epsilon(1e-12));
    double sum = v + sqz::variance(geom(g), c + kPi / 2);
    CHECK(sum == doctest::Approx(2.0 + g * g).epsilon(1e-12));
  }
}

TEST_CASE("absorption pulls the variance toward vacuum") {
  // v = e^{-al} v0 + (1 - e^{-al}).
  double v0 = sqz::variance(geom(5.0), 0.7);
  double v = sqz::variance(geom(5.0, 0.2), 0.7);
  CHECK(v == doctest::Approx(std::exp(-0.2) * v0 + (1 - std::exp(-0.2)))
                 .epsilon(1e-14));
  // Fully opaque slab re-thermalizes to vacuum from either side of 1.
  CHECK(sqz::variance(geom(5.0, 60.0), sqz::optimal_phase(5.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sqz::variance(geom(5.0, 60.0), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sqz::lossy_min_variance(5.0, 0.2) ==
        doctest::Approx(std::exp(-0.2) * sqz::min_variance(5.0) +
                        (1 - std::exp(-0.2)))
            .epsilon(1e-14));
}

TEST_CASE("Monte-Carlo vacuum propagation reproduces the variance curve") {
  // Draw vacuum-statistics complex amplitudes (each real quadrature with
  // variance 1/4 so v is normalized to 1), push them through the linearized
  // rotation a -> a + i g l Im(a)... expressed as a + (i g l / 2)(a* - a),
  // and read the LO quadrature E(chi) = 2 Re[a e^{i chi}].
  const std::size_t n = 1000000;
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> q(0.0, 0.5);
  for (double gl : {1.0, 5.0}) {
    std::vector<std::complex<double>> out(n);
    for (auto& a : out) {
      std::complex<double> a0(q(rng), q(rng));
      a = a0 + std::complex<double>(0.0, gl / 2.0) * (std::conj(a0) - a0);
    }
    for (int k = 0; k < 8; ++k) {
      double chi = kPi * k / 8.0;
      std::complex<double> lo = std::polar(1.0, chi);
      double sum = 0.0, sum2 = 0.0;
      for (const auto& a : out) {
        double e = 2.0 * std::real(a * lo);
        sum += e;
        sum2 += e * e;
      }
      double mean = sum / n;
      double var = sum2 / n - mean * mean;
      double want = sqz::variance(geom(gl), chi);
      // Sampling error of a variance estimate: SE ~ v sqrt(2/n).
      double se = want * std::sqrt(2.0 / n);
      CHECK(std::abs(var - want) < 3.0 * se);
    }
  }
}

TEST_CASE("optimal interaction length") {
  CHECK(sqz::optimal_length(1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sqz::optimal_length(100.0, 1.0) ==
        doctest::Approx(0.09283177667225558).epsilon(1e-12));
  CHECK(sqz::optimal_length(8.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS((void)sqz::optimal_length(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)sqz::optimal_length(1.0, -1.0), std::domain_error);

  // The returned depth minimizes the asymptotic noise budget 4/(gl)^2 + al.
  for (double ratio : {10.0, 100.0, 1e4, 1e6}) {
    double al_opt = sqz::optimal_length(ratio, 1.0);
    auto budget = [&](double al) {
      double gl = ratio * al;
      return 4.0 / (gl * gl) + al;
    };
    double at_opt = budget(al_opt);
    CHECK(budget(al_opt * 1.01) > at_opt);
    CHECK(budget(al_opt * 0.99) > at_opt);
    // Scan for the true minimizer and compare positions to 0.1%.
    double best = al_opt, best_v = at_opt;
    for (int i = -2000; i <= 2000; ++i) {
      double al = al_opt * std::pow(10.0, i * 1e-4);
      if (budget(al) < best_v) {
        best_v = budget(al);
        best = al;
      }
    }
    CHECK(std::abs(best - al_opt) / al_opt < 1e-3);
  }
}

TEST_CASE("length-optimized squeeze factor") {
  auto unity = sqz::squeezing_parameter(std::pow(3.0, 1.5), 1.0);
  CHECK(unity.s == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(unity.s_db == doctest::Approx(0.0).epsilon(1e-12));

  auto r100 = sqz::squeezing_parameter(100.0, 1.0);
  CHECK(r100.s == doctest::Approx(2.6798225625539).epsilon(1e-9));
  CHECK(r100.s_db == doctest::Approx(4.2810603930684).epsilon(1e-8));
  CHECK(r100.in_validity);
  CHECK(r100.ell_opt_alpha ==
        doctest::Approx(sqz::optimal_length(100.0, 1.0)).epsilon(1e-14));
  // Scale invariance: only g/alpha matters for s.
  auto scaled = sqz::squeezing_parameter(200.0, 2.0);
  CHECK(scaled.s == doctest::Approx(r100.s).epsilon(1e-14));

  auto low = sqz::squeezing_parameter(5.0, 1.0);
  CHECK_FALSE(low.in_validity);

  CHECK_THROWS_AS((void)sqz::squeezing_parameter(-3.0, 1.0),
                  std::domain_error);
}

TEST_CASE("uncertainty product saturates only at the stationary phases") {
  CHECK(sqz::uncertainty_product(0.0, 0.4) ==
        doctest::Approx(1.0).epsilon(1e-14));
  double chi = sqz::optimal_phase(5.0);
  CHECK(sqz::uncertainty_product(5.0, chi) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sqz::uncertainty_product(5.0, 0.0) ==
        doctest::Approx(26.0).epsilon(1e-12));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ph(0.0, kPi);
  for (int i = 0; i < 100; ++i)
    CHECK(sqz::uncertainty_product(3.0, ph(rng)) >= 1.0 - 1e-12);
}

TEST_CASE("decibel convention") {
  CHECK(sqz::squeeze_db_from_variance(1.0) == 0.0);
  CHECK(sqz::squeeze_db_from_variance(0.01) ==
        doctest::Approx(10.0).epsilon(1e-12));
  // 10 log10(s) with v = 1/s^2.
  double s = 2.0;
  CHECK(sqz::squeeze_db_from_variance(1.0 / (s * s)) ==
        doctest::Approx(10.0 * std::log10(s)).epsilon(1e-12));
}
