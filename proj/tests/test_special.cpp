#include <cmath>

#include <gsl/gsl_sf_bessel.h>

#include "doctest.h"
#include "helmsens/special.hpp"

using namespace helmsens;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("cylinder functions match GSL over orders and arguments") {
  for (int n = -8; n <= 12; ++n) {
    for (double x : {0.3, 1.0, 2.0, 5.7, 13.2, 40.0}) {
      CHECK(bessel_j(n, x) ==
            doctest::Approx(gsl_sf_bessel_Jn(n, x)).epsilon(1e-12));
      CHECK(bessel_y(n, x) ==
            doctest::Approx(gsl_sf_bessel_Yn(n, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivatives match central differences of GSL") {
  const double h = 1e-6;
  for (int n : {-3, 0, 1, 4, 9}) {
    for (double x : {0.8, 2.0, 7.3}) {
      const double jp =
          (gsl_sf_bessel_Jn(n, x + h) - gsl_sf_bessel_Jn(n, x - h)) / (2 * h);
      const double yp =
          (gsl_sf_bessel_Yn(n, x + h) - gsl_sf_bessel_Yn(n, x - h)) / (2 * h);
      CHECK(bessel_j_prime(n, x) == doctest::Approx(jp).epsilon(1e-7));
      CHECK(bessel_y_prime(n, x) == doctest::Approx(yp).epsilon(1e-7));
      const Complex hp = hankel1_prime(n, x);
      CHECK(hp.real() == doctest::Approx(jp).epsilon(1e-7));
      CHECK(hp.imag() == doctest::Approx(yp).epsilon(1e-7));
    }
  }
}

TEST_CASE("second derivative satisfies the Bessel ODE") {
  for (int n : {0, 2, 5}) {
    for (double x : {1.1, 3.0, 8.5}) {
      const double lhs = bessel_j_pprime(n, x) + bessel_j_prime(n, x) / x +
                         (1.0 - n * n / (x * x)) * bessel_j(n, x);
      CHECK(std::abs(lhs) < 1e-12);
      const Complex lhs_h = hankel1_pprime(n, x) + hankel1_prime(n, x) / x +
                            (1.0 - n * n / (x * x)) * hankel1(n, x);
      CHECK(std::abs(lhs_h) < 1e-11);
    }
  }
}

TEST_CASE("Wronskian validation") {
  for (double x : {0.5, 2.0, 11.0}) {
    CHECK_NOTHROW(validate_bessel_backend(x));
    const double w = bessel_j(3, x) * bessel_y_prime(3, x) -
                     bessel_j_prime(3, x) * bessel_y(3, x);
    CHECK(w == doctest::Approx(2.0 / (kPi * x)).epsilon(1e-13));
  }
}
