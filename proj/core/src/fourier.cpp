#include "helmsens/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace helmsens {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

void fft_inplace(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw UnderResolved("FFT size must be a power of two");
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        Complex u = a[i + j];
        Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

BoundaryField::BoundaryField(std::size_t n, Complex fill) : samples_(n, fill) {
  if (!is_pow2(n)) throw UnderResolved("node count must be a power of two");
}

BoundaryField::BoundaryField(std::vector<Complex> samples)
    : samples_(std::move(samples)) {
  if (!is_pow2(samples_.size()))
    throw UnderResolved("node count must be a power of two");
}

double BoundaryField::node(std::size_t j) const {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(size());
}

std::vector<Complex> BoundaryField::hat() const {
  std::vector<Complex> c = samples_;
  fft_inplace(c, false);
  const double inv = 1.0 / static_cast<double>(c.size());
  for (Complex& z : c) z *= inv;
  return c;
}

BoundaryField BoundaryField::from_hat(const std::vector<Complex>& coeffs) {
  std::vector<Complex> s = coeffs;
  fft_inplace(s, true);
  return BoundaryField(std::move(s));
}

BoundaryField BoundaryField::derivative() const {
  std::vector<Complex> c = hat();
  const std::size_t n = c.size();
  for (std::size_t m = 0; m < n; ++m) {
    if (m == n / 2) {
      c[m] = 0.0;  // Nyquist mode has no odd derivative representation
      continue;
    }
    c[m] *= Complex(0.0, static_cast<double>(fft_bin_mode(m, n)));
  }
  return from_hat(c);
}

Complex BoundaryField::interp(double t) const {
  const std::vector<Complex> c = hat();
  const std::size_t n = c.size();
  Complex acc = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const long long mode = fft_bin_mode(m, n);
    if (m == n / 2) {
      acc += c[m] * std::cos(static_cast<double>(n) / 2.0 * t);
      continue;
    }
    const double ph = static_cast<double>(mode) * t;
    acc += c[m] * Complex(std::cos(ph), std::sin(ph));
  }
  return acc;
}

Complex BoundaryField::interp_derivative(double t) const {
  const std::vector<Complex> c = hat();
  const std::size_t n = c.size();
  Complex acc = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    if (m == n / 2) continue;
    const double mode = static_cast<double>(fft_bin_mode(m, n));
    const double ph = mode * t;
    acc += c[m] * Complex(0.0, mode) * Complex(std::cos(ph), std::sin(ph));
  }
  return acc;
}

double BoundaryField::max_abs() const {
  double m = 0.0;
  for (const Complex& z : samples_) m = std::max(m, std::abs(z));
  return m;
}

BoundaryField& BoundaryField::operator+=(const BoundaryField& o) {
  for (std::size_t j = 0; j < size(); ++j) samples_[j] += o.samples_[j];
  return *this;
}

BoundaryField& BoundaryField::operator-=(const BoundaryField& o) {
  for (std::size_t j = 0; j < size(); ++j) samples_[j] -= o.samples_[j];
  return *this;
}

BoundaryField& BoundaryField::operator*=(Complex c) {
  for (Complex& z : samples_) z *= c;
  return *this;
}

BoundaryField resample(const BoundaryField& f, std::size_t new_n) {
  const std::vector<Complex> c = f.hat();
  const std::size_t n = c.size();
  std::vector<Complex> out(new_n, Complex(0.0, 0.0));
  const std::size_t keep = std::min(n, new_n) / 2;
  for (std::size_t m = 0; m < keep; ++m) out[m] = c[m];
  for (std::size_t m = 1; m <= keep; ++m) out[new_n - m] = c[n - m];
  return BoundaryField::from_hat(out);
}

BoundaryField hadamard(const BoundaryField& a, const BoundaryField& b) {
  BoundaryField out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
  return out;
}

BoundaryField hadamard_div(const BoundaryField& a, const BoundaryField& b) {
  BoundaryField out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] / b[j];
  return out;
}

}  // namespace helmsens
