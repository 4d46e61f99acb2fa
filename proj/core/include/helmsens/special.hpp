#ifndef HELMSENS_SPECIAL_HPP
#define HELMSENS_SPECIAL_HPP

#include <vector>

#include "helmsens/fourier.hpp"

namespace helmsens {

// Cylinder functions of integer order for real positive argument, with
// derivatives from the recurrences C' = (C_{n-1} - C_{n+1})/2 and the Bessel
// ODE for C''. Orders are validated at runtime by the Wronskian
// J_n(x) Y_n'(x) - J_n'(x) Y_n(x) = 2/(pi x).
double bessel_j(int n, double x);   // J_n, any integer n
double bessel_y(int n, double x);   // Y_n
Complex hankel1(int n, double x);   // H_n^{(1)} = J_n + i Y_n

double bessel_j_prime(int n, double x);
double bessel_y_prime(int n, double x);
Complex hankel1_prime(int n, double x);

// Second derivative via the ODE: C'' = -C'/x + (n^2/x^2 - 1) C.
double bessel_j_pprime(int n, double x);
Complex hankel1_pprime(int n, double x);

// Throws IllConditioned if the Wronskian identity fails beyond 1e-12 relative
// at the given argument (validates the backing implementation at runtime).
void validate_bessel_backend(double x);

}  // namespace helmsens

#endif
