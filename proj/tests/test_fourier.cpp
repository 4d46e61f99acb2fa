#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "helmsens/fourier.hpp"

using namespace helmsens;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Complex> naive_dft(const std::vector<Complex>& a) {
  const std::size_t n = a.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      out[k] += a[j] * std::exp(Complex(0.0, -2.0 * kPi *
                                                 static_cast<double>(k * j) /
                                                 static_cast<double>(n)));
  return out;
}

}  // namespace

TEST_CASE("fft matches the naive DFT") {
  const std::size_t n = 64;
  std::vector<Complex> a(n);
  for (std::size_t j = 0; j < n; ++j)
    a[j] = Complex(std::sin(0.7 * j + 0.3), std::cos(1.3 * j));
  const std::vector<Complex> ref = naive_dft(a);
  std::vector<Complex> b = a;
  fft_inplace(b, false);
  for (std::size_t k = 0; k < n; ++k)
    CHECK(std::abs(b[k] - ref[k]) < 1e-11);
  fft_inplace(b, true);
  for (std::size_t j = 0; j < n; ++j)
    CHECK(std::abs(b[j] / static_cast<double>(n) - a[j]) < 1e-12);
  std::vector<Complex> odd(6);
  CHECK_THROWS_AS(fft_inplace(odd, false), UnderResolved);
}

TEST_CASE("spectral derivative and interpolation are exact on trig polys") {
  const std::size_t n = 32;
  BoundaryField f(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = f.node(j);
    f[j] = std::cos(3.0 * t) + Complex(0.0, 1.0) * std::sin(5.0 * t);
  }
  const BoundaryField df = f.derivative();
  for (std::size_t j = 0; j < n; ++j) {
    const double t = f.node(j);
    const Complex want =
        -3.0 * std::sin(3.0 * t) + Complex(0.0, 5.0) * std::cos(5.0 * t);
    CHECK(std::abs(df[j] - want) < 1e-12);
  }
  for (double t : {0.1, 1.7, 4.4}) {
    CHECK(std::abs(f.interp(t) - (std::cos(3.0 * t) +
                                  Complex(0.0, 1.0) * std::sin(5.0 * t))) <
          1e-12);
    CHECK(std::abs(f.interp_derivative(t) -
                   (-3.0 * std::sin(3.0 * t) +
                    Complex(0.0, 5.0) * std::cos(5.0 * t))) < 1e-11);
  }
}

TEST_CASE("resample preserves band-limited content") {
  const std::size_t n = 16;
  BoundaryField f(n);
  for (std::size_t j = 0; j < n; ++j)
    f[j] = std::cos(2.0 * f.node(j)) + 0.5;
  const BoundaryField up = resample(f, 64);
  for (std::size_t j = 0; j < 64; ++j)
    CHECK(std::abs(up[j] - (std::cos(2.0 * up.node(j)) + 0.5)) < 1e-12);
  const BoundaryField down = resample(up, 16);
  for (std::size_t j = 0; j < 16; ++j) CHECK(std::abs(down[j] - f[j]) < 1e-12);
}

TEST_CASE("fft_bin_mode covers the balanced range") {
  CHECK(fft_bin_mode(0, 8) == 0);
  CHECK(fft_bin_mode(3, 8) == 3);
  CHECK(fft_bin_mode(4, 8) == -4);
  CHECK(fft_bin_mode(7, 8) == -1);
}
