#ifndef SEAOPT_LINALG_HPP_
#define SEAOPT_LINALG_HPP_

#include "seaopt/errors.hpp"
#include "seaopt/jet.hpp"

namespace seaopt {

/// Minimal fixed-size planar algebra usable with double, Dual and Jet
/// scalars alike. Eigen stays on the plain-double side of the code base;
/// the generic-scalar kernels use these to keep template friction low.
template <class S>
struct Vec2 {
  S x{}, y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Vec2 operator*(const S& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator*(const Vec2& a, const S& s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend S dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
  S squared_norm() const { return x * x + y * y; }
};

template <class S>
struct Mat22 {
  // Row-major: [a b; c d].
  S a{}, b{}, c{}, d{};

  S det() const { return a * d - b * c; }

  Vec2<S> operator*(const Vec2<S>& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }
  friend Mat22 operator+(const Mat22& m, const Mat22& n) {
    return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
  }
  friend Mat22 operator*(const S& s, const Mat22& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
  friend Mat22 operator*(const Mat22& m, const Mat22& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  Mat22 transposed() const { return {a, c, b, d}; }

  Vec2<S> transpose_times(const Vec2<S>& v) const {
    return {a * v.x + c * v.y, b * v.x + d * v.y};
  }
};

/// Solves [a b; c d] z = r by Cramer's rule. The caller is responsible for
/// conditioning; a vanishing determinant value raises SingularJacobian.
template <class S>
Vec2<S> solve22(const Mat22<S>& m, const Vec2<S>& r) {
  const S det = m.det();
  if (value_of(det) == 0.0) throw SingularJacobian("2x2 solve: zero determinant");
  const S inv = inv_scalar(det);
  return {inv * (m.d * r.x - m.b * r.y), inv * (m.a * r.y - m.c * r.x)};
}

template <class S>
Mat22<S> inverse22(const Mat22<S>& m) {
  const S det = m.det();
  if (value_of(det) == 0.0)
    throw SingularJacobian("2x2 inverse: zero determinant");
  const S inv = inv_scalar(det);
  return {inv * m.d, -(inv * m.b), -(inv * m.c), inv * m.a};
}

}  // namespace seaopt

#endif  // SEAOPT_LINALG_HPP_
