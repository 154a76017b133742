#ifndef ETSG_LINALG_HPP
#define ETSG_LINALG_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Fixed-size complex linear algebra for 2x2 spin blocks and 4x4 Dirac
// operators. Dense storage, value semantics, no allocation.

#include <array>
#include <cmath>
#include <complex>

namespace etsg {

using cplx = std::complex<double>;

struct Vec2c {
  cplx a{}, b{};

  double norm() const { return std::sqrt(std::norm(a) + std::norm(b)); }
};

inline Vec2c operator+(const Vec2c& u, const Vec2c& v) { return {u.a + v.a, u.b + v.b}; }
inline Vec2c operator*(cplx s, const Vec2c& v) { return {s * v.a, s * v.b}; }
inline cplx dot(const Vec2c& u, const Vec2c& v) {  // <u|v>, conjugates u
  return std::conj(u.a) * v.a + std::conj(u.b) * v.b;
}

struct Mat2c {
  // row-major
  std::array<cplx, 4> m{};

  cplx& operator()(int i, int j) { return m[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[2 * i + j]; }

  static Mat2c identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static Mat2c zero() { return {}; }
};

inline Mat2c operator*(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}
inline Mat2c operator*(cplx s, const Mat2c& x) {
  Mat2c r = x;
  for (auto& e : r.m) e *= s;
  return r;
}
inline Mat2c operator+(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.m[i] = x.m[i] + y.m[i];
  return r;
}
inline Mat2c operator-(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.m[i] = x.m[i] - y.m[i];
  return r;
}
inline Vec2c operator*(const Mat2c& x, const Vec2c& v) {
  return {x(0, 0) * v.a + x(0, 1) * v.b, x(1, 0) * v.a + x(1, 1) * v.b};
}
inline Mat2c adjoint(const Mat2c& x) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

inline const Mat2c& pauli_x() {
  static const Mat2c s{{0.0, 1.0, 1.0, 0.0}};
  return s;
}
inline const Mat2c& pauli_y() {
  static const Mat2c s{{0.0, cplx(0, -1), cplx(0, 1), 0.0}};
  return s;
}
inline const Mat2c& pauli_z() {
  static const Mat2c s{{1.0, 0.0, 0.0, -1.0}};
  return s;
}

// sigma . v for a real 3-vector
inline Mat2c sigma_dot(double vx, double vy, double vz) {
  Mat2c r;
  r(0, 0) = vz;
  r(0, 1) = cplx(vx, -vy);
  r(1, 0) = cplx(vx, vy);
  r(1, 1) = -vz;
  return r;
}

struct Vec4c {
  std::array<cplx, 4> c{};

  cplx& operator[](int i) { return c[i]; }
  const cplx& operator[](int i) const { return c[i]; }

  double norm() const {
    double s = 0;
    for (const auto& e : c) s += std::norm(e);
    return std::sqrt(s);
  }
};

inline Vec4c operator+(const Vec4c& u, const Vec4c& v) {
  Vec4c r;
  for (int i = 0; i < 4; ++i) r[i] = u[i] + v[i];
  return r;
}
inline Vec4c operator-(const Vec4c& u, const Vec4c& v) {
  Vec4c r;
  for (int i = 0; i < 4; ++i) r[i] = u[i] - v[i];
  return r;
}
inline Vec4c operator*(cplx s, const Vec4c& v) {
  Vec4c r;
  for (int i = 0; i < 4; ++i) r[i] = s * v[i];
  return r;
}
inline cplx dot(const Vec4c& u, const Vec4c& v) {  // <u|v>
  cplx s = 0;
  for (int i = 0; i < 4; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

struct Mat4c {
  std::array<cplx, 16> m{};

  cplx& operator()(int i, int j) { return m[4 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[4 * i + j]; }

  static Mat4c identity() {
    Mat4c r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
  static Mat4c zero() { return {}; }

  // assemble from 2x2 blocks [[tl, tr], [bl, br]]
  static Mat4c from_blocks(const Mat2c& tl, const Mat2c& tr, const Mat2c& bl,
                           const Mat2c& br) {
    Mat4c r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r(i, j) = tl(i, j);
        r(i, j + 2) = tr(i, j);
        r(i + 2, j) = bl(i, j);
        r(i + 2, j + 2) = br(i, j);
      }
    return r;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& e : m) s += std::norm(e);
    return std::sqrt(s);
  }

  cplx trace() const { return m[0] + m[5] + m[10] + m[15]; }
};

inline Mat4c operator*(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int l = 0; l < 4; ++l) s += x(i, l) * y(l, j);
      r(i, j) = s;
    }
  return r;
}
inline Mat4c operator+(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.m[i] = x.m[i] + y.m[i];
  return r;
}
inline Mat4c operator-(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.m[i] = x.m[i] - y.m[i];
  return r;
}
inline Mat4c operator*(cplx s, const Mat4c& x) {
  Mat4c r = x;
  for (auto& e : r.m) e *= s;
  return r;
}
inline Vec4c operator*(const Mat4c& x, const Vec4c& v) {
  Vec4c r;
  for (int i = 0; i < 4; ++i) {
    cplx s = 0;
    for (int j = 0; j < 4; ++j) s += x(i, j) * v[j];
    r[i] = s;
  }
  return r;
}
inline Mat4c adjoint(const Mat4c& x) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}
inline Mat4c commutator(const Mat4c& x, const Mat4c& y) {
  return x * y - y * x;
}

// Solve a 4x4 complex system by LU with partial pivoting. Returns false if a
// pivot falls below `pivot_tol` times the largest initial column magnitude
// (rank-deficient system).
bool solve4(Mat4c a, Vec4c rhs, Vec4c& out, double pivot_tol = 1e-13);

}  // namespace etsg

#endif
