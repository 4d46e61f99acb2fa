#ifndef HELMSENS_GEOM_HPP
#define HELMSENS_GEOM_HPP

#include <cmath>
#include <complex>

namespace helmsens {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
  double norm() const { return std::hypot(x, y); }
};

// Row-major 2x2 real matrix; a(i,j) = entry in row i, column j.
struct Mat2 {
  double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  static Mat2 identity() {
    Mat2 a;
    a(0, 0) = a(1, 1) = 1.0;
    return a;
  }
  Mat2 transpose() const {
    Mat2 a;
    a(0, 0) = m[0][0];
    a(0, 1) = m[1][0];
    a(1, 0) = m[0][1];
    a(1, 1) = m[1][1];
    return a;
  }
  double trace() const { return m[0][0] + m[1][1]; }

  friend Mat2 operator+(Mat2 a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) += b(i, j);
    return a;
  }
  friend Mat2 operator-(Mat2 a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) -= b(i, j);
    return a;
  }
  friend Mat2 operator*(double s, Mat2 a) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) *= s;
    return a;
  }
  friend Vec2 operator*(const Mat2& a, Vec2 v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
  }
};

// Complex-valued 2-vector and symmetric 2x2 matrix (field gradients/Hessians).
struct CVec2 {
  std::complex<double> x{0.0, 0.0};
  std::complex<double> y{0.0, 0.0};

  friend CVec2 operator+(CVec2 a, CVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend CVec2 operator-(CVec2 a, CVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend CVec2 operator*(std::complex<double> s, CVec2 a) {
    return {s * a.x, s * a.y};
  }
  friend std::complex<double> dot(CVec2 a, Vec2 b) {
    return a.x * b.x + a.y * b.y;
  }
  friend std::complex<double> dot(CVec2 a, CVec2 b) {
    return a.x * b.x + a.y * b.y;  // bilinear, not sesquilinear
  }
};

struct CMat2 {
  std::complex<double> m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  std::complex<double>& operator()(int i, int j) { return m[i][j]; }
  std::complex<double> operator()(int i, int j) const { return m[i][j]; }

  friend CVec2 operator*(const CMat2& a, Vec2 v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
  }
  // Frobenius-type contraction sum_ij a_ij b_ij with a real.
  friend std::complex<double> contract(const Mat2& a, const CMat2& b) {
    std::complex<double> s = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += a(i, j) * b(i, j);
    return s;
  }
};

}  // namespace helmsens

#endif
