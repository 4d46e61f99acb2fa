#ifndef HELMSENS_FOURIER_HPP
#define HELMSENS_FOURIER_HPP

#include <complex>
#include <vector>

#include "helmsens/errors.hpp"

namespace helmsens {

using Complex = std::complex<double>;

// In-place radix-2 FFT; size must be a power of two. inverse=true applies the
// unnormalized inverse transform (caller divides by N where needed).
void fft_inplace(std::vector<Complex>& a, bool inverse);

// Periodic samples on the uniform parameter grid t_j = 2*pi*j/N, N a power of
// two. Spectral operations use the balanced mode range n in [-N/2, N/2); the
// Nyquist mode is treated as cos(N/2 t) for interpolation and dropped by
// differentiation.
class BoundaryField {
public:
  BoundaryField() = default;
  explicit BoundaryField(std::size_t n, Complex fill = 0.0);
  explicit BoundaryField(std::vector<Complex> samples);

  std::size_t size() const { return samples_.size(); }
  Complex& operator[](std::size_t j) { return samples_[j]; }
  const Complex& operator[](std::size_t j) const { return samples_[j]; }
  const std::vector<Complex>& samples() const { return samples_; }

  // Node j -> parameter 2*pi*j/N.
  double node(std::size_t j) const;

  // Fourier coefficients c_n, returned indexed by FFT bin: entry m holds the
  // mode n = m for m < N/2 and n = m - N for m >= N/2. f(t) = sum c_n e^{int}.
  std::vector<Complex> hat() const;
  static BoundaryField from_hat(const std::vector<Complex>& coeffs);

  BoundaryField derivative() const;            // d/dt, spectral
  Complex interp(double t) const;              // trig interpolant at t
  Complex interp_derivative(double t) const;   // its d/dt

  double max_abs() const;

  BoundaryField& operator+=(const BoundaryField& o);
  BoundaryField& operator-=(const BoundaryField& o);
  BoundaryField& operator*=(Complex c);

  friend BoundaryField operator+(BoundaryField a, const BoundaryField& b) {
    return a += b;
  }
  friend BoundaryField operator-(BoundaryField a, const BoundaryField& b) {
    return a -= b;
  }
  friend BoundaryField operator*(Complex c, BoundaryField a) { return a *= c; }

  // Pointwise product and quotient at nodes.
  friend BoundaryField hadamard(const BoundaryField& a, const BoundaryField& b);
  friend BoundaryField hadamard_div(const BoundaryField& a,
                                    const BoundaryField& b);

private:
  std::vector<Complex> samples_;
};

// Band-limited resampling to a different power-of-two node count (zero-pads
// or truncates the spectrum).
BoundaryField resample(const BoundaryField& f, std::size_t new_n);

// Signed Fourier mode for FFT bin m of an N-point transform.
inline long long fft_bin_mode(std::size_t m, std::size_t n) {
  return m < n / 2 ? static_cast<long long>(m)
                   : static_cast<long long>(m) - static_cast<long long>(n);
}

}  // namespace helmsens

#endif
