#include "sqz/angular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqz {

namespace {

bool half_integral(double x) {
  return std::abs(2.0 * x - std::round(2.0 * x)) < 1e-9;
}

int twice(double x) { return static_cast<int>(std::round(2.0 * x)); }

bool triangle_ok(double a, double b, double c) {
  return c >= std::abs(a - b) - 1e-9 && c <= a + b + 1e-9 &&
         half_integral(a + b + c) &&
         std::abs(std::remainder(a + b + c, 1.0)) < 1e-9;  // integral perimeter
}

// ln n! via lgamma; arguments here are always small non-negative integers.
double lnfact(int n) { return std::lgamma(n + 1.0); }

void check_momentum(double j, double m, const char* who) {
  if (j < 0 || !half_integral(j) || !half_integral(m))
    throw std::domain_error(std::string(who) + ": invalid angular momentum");
  if (std::abs(m) > j + 1e-9)
    throw std::domain_error(std::string(who) + ": |m| > j");
  if ((twice(j) - twice(m)) % 2 != 0)
    throw std::domain_error(std::string(who) + ": j and m differ by non-integer");
}

}  // namespace

double clebsch_gordan(double j1, double m1, double j2, double m2, double J,
                      double M) {
  check_momentum(j1, m1, "clebsch_gordan");
  check_momentum(j2, m2, "clebsch_gordan");
  check_momentum(J, M, "clebsch_gordan");
  if (!triangle_ok(j1, j2, J))
    throw std::domain_error("clebsch_gordan: triangle rule violated");
  if (twice(m1) + twice(m2) != twice(M)) return 0.0;

  // Racah's closed form, evaluated in log space. All factorial arguments are
  // integers because the triangle and projection checks passed.
  int a = twice(j1), b = twice(j2), c = twice(J);
  int am = twice(m1), bm = twice(m2), cm = twice(M);
  auto f2 = [](int twice_n) { return lnfact(twice_n / 2); };

  double pref = 0.5 * (std::log(c + 1.0) + f2(a + b - c) + f2(a - b + c) +
                       f2(-a + b + c) - f2(a + b + c + 2) + f2(a + am) +
                       f2(a - am) + f2(b + bm) + f2(b - bm) + f2(c + cm) +
                       f2(c - cm));

  int kmin = std::max({0, (b - c - am) / 2, (a - c + bm) / 2});
  int kmax = std::min({(a + b - c) / 2, (a - am) / 2, (b + bm) / 2});
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    double ln = lnfact(k) + f2(a + b - c - 2 * k) + f2(a - am - 2 * k) +
                f2(b + bm - 2 * k) + f2(c - b + am + 2 * k) +
                f2(c - a - bm + 2 * k);
    sum += (k % 2 ? -1.0 : 1.0) * std::exp(pref - ln);
  }
  return sum;
}

double wigner_3j(double j1, double j2, double j3, double m1, double m2,
                 double m3) {
  check_momentum(j1, m1, "wigner_3j");
  check_momentum(j2, m2, "wigner_3j");
  check_momentum(j3, m3, "wigner_3j");
  if (!triangle_ok(j1, j2, j3)) return 0.0;
  if (twice(m1) + twice(m2) + twice(m3) != 0) return 0.0;
  int phase2 = twice(j1) - twice(j2) - twice(m3);
  double sign = (phase2 / 2) % 2 ? -1.0 : 1.0;
  return sign / std::sqrt(2.0 * j3 + 1.0) *
         clebsch_gordan(j1, m1, j2, m2, j3, -m3);
}

double wigner_6j(double j1, double j2, double j3, double j4, double j5,
                 double j6) {
  for (double j : {j1, j2, j3, j4, j5, j6})
    if (j < 0 || !half_integral(j))
      throw std::domain_error("wigner_6j: invalid angular momentum");
  if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) ||
      !triangle_ok(j4, j2, j6) || !triangle_ok(j4, j5, j3))
    return 0.0;

  // Racah formula with the triangle-coefficient prefactor.
  auto tri = [](double a, double b, double c) {
    return 0.5 * (lnfact(twice(a + b - c) / 2) + lnfact(twice(a - b + c) / 2) +
                  lnfact(twice(-a + b + c) / 2) -
                  lnfact(twice(a + b + c) / 2 + 1));
  };
  double pref = tri(j1, j2, j3) + tri(j1, j5, j6) + tri(j4, j2, j6) +
                tri(j4, j5, j3);

  int ab = twice(j1 + j2 + j3) / 2, cd = twice(j1 + j5 + j6) / 2;
  int ef = twice(j4 + j2 + j6) / 2, gh = twice(j4 + j5 + j3) / 2;
  int p1 = twice(j1 + j2 + j4 + j5) / 2;
  int p2 = twice(j2 + j3 + j5 + j6) / 2;
  int p3 = twice(j3 + j1 + j6 + j4) / 2;

  int kmin = std::max({ab, cd, ef, gh});
  int kmax = std::min({p1, p2, p3});
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    double ln = lnfact(k + 1) - lnfact(k - ab) - lnfact(k - cd) -
                lnfact(k - ef) - lnfact(k - gh) - lnfact(p1 - k) -
                lnfact(p2 - k) - lnfact(p3 - k);
    sum += (k % 2 ? -1.0 : 1.0) * std::exp(pref + ln);
  }
  return sum;
}

double hyperfine_amplitude(double Jg, double Je, double I, double F,
                           double Fp) {
  int phase2 = twice(F + Je + 1.0 + I);
  double sign = (phase2 / 2) % 2 ? -1.0 : 1.0;
  return sign * std::sqrt((2.0 * Je + 1.0) * (2.0 * F + 1.0)) *
         wigner_6j(Je, Fp, I, F, Jg, 1.0);
}

}  // namespace sqz
