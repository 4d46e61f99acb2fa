#include "helmsens/special.hpp"

#include <cmath>
#include <numbers>

namespace helmsens {

namespace {

double sign_for_negative_order(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double bessel_j(int n, double x) {
  if (n < 0) return sign_for_negative_order(n) * bessel_j(-n, x);
  return std::cyl_bessel_j(static_cast<double>(n), x);
}

double bessel_y(int n, double x) {
  if (n < 0) return sign_for_negative_order(n) * bessel_y(-n, x);
  return std::cyl_neumann(static_cast<double>(n), x);
}

Complex hankel1(int n, double x) {
  return Complex(bessel_j(n, x), bessel_y(n, x));
}

double bessel_j_prime(int n, double x) {
  return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

double bessel_y_prime(int n, double x) {
  return 0.5 * (bessel_y(n - 1, x) - bessel_y(n + 1, x));
}

Complex hankel1_prime(int n, double x) {
  return Complex(bessel_j_prime(n, x), bessel_y_prime(n, x));
}

double bessel_j_pprime(int n, double x) {
  const double nn = static_cast<double>(n);
  return -bessel_j_prime(n, x) / x +
         (nn * nn / (x * x) - 1.0) * bessel_j(n, x);
}

Complex hankel1_pprime(int n, double x) {
  const double nn = static_cast<double>(n);
  return -hankel1_prime(n, x) / x +
         (nn * nn / (x * x) - 1.0) * hankel1(n, x);
}

void validate_bessel_backend(double x) {
  const double expect = 2.0 / (std::numbers::pi * x);
  for (int n = 0; n <= 8; ++n) {
    const double w = bessel_j(n, x) * bessel_y_prime(n, x) -
                     bessel_j_prime(n, x) * bessel_y(n, x);
    if (std::abs(w - expect) > 1e-12 * std::abs(expect))
      throw IllConditioned("Bessel Wronskian check failed at order " +
                           std::to_string(n) + ", x = " + std::to_string(x));
  }
}

}  // namespace helmsens
