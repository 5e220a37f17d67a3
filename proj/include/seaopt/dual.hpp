#ifndef SEAOPT_DUAL_HPP_
#define SEAOPT_DUAL_HPP_

#include <array>
#include <cmath>
#include <cstdint>

namespace seaopt {

/// First-order forward-mode scalar carrying up to `Cap` directional
/// derivatives at once. The active direction count `n` is a runtime value so
/// kernels of different sizes can share one instantiation; entries at index
/// >= n are treated as zero and never read.
///
/// Comparison operators act on the value part only.
template <int Cap>
struct Dual {
  double v = 0.0;
  int n = 0;
  std::array<double, Cap> d{};

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit by design (constants)

  static Dual seeded(double value, int dir, int ndirs) {
    Dual r(value);
    r.n = ndirs;
    r.d.fill(0.0);
    r.d[dir] = 1.0;
    return r;
  }

  double value() const { return v; }
  double deriv(int k) const { return k < n ? d[k] : 0.0; }

  Dual& operator+=(const Dual& b) {
    v += b.v;
    if (b.n > n) n = b.n;
    for (int k = 0; k < b.n; ++k) d[k] += b.d[k];
    return *this;
  }
  Dual& operator-=(const Dual& b) {
    v -= b.v;
    if (b.n > n) n = b.n;
    for (int k = 0; k < b.n; ++k) d[k] -= b.d[k];
    return *this;
  }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  Dual& operator/=(const Dual& b) { return *this = *this / b; }

  friend Dual operator-(const Dual& a) {
    Dual r;
    r.v = -a.v;
    r.n = a.n;
    for (int k = 0; k < a.n; ++k) r.d[k] = -a.d[k];
    return r;
  }
  friend Dual operator+(const Dual& a, const Dual& b) {
    Dual r;
    r.v = a.v + b.v;
    r.n = a.n > b.n ? a.n : b.n;
    for (int k = 0; k < a.n; ++k) r.d[k] = a.d[k];
    for (int k = a.n; k < r.n; ++k) r.d[k] = 0.0;
    for (int k = 0; k < b.n; ++k) r.d[k] += b.d[k];
    return r;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r;
    r.v = a.v - b.v;
    r.n = a.n > b.n ? a.n : b.n;
    for (int k = 0; k < a.n; ++k) r.d[k] = a.d[k];
    for (int k = a.n; k < r.n; ++k) r.d[k] = 0.0;
    for (int k = 0; k < b.n; ++k) r.d[k] -= b.d[k];
    return r;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r;
    r.v = a.v * b.v;
    r.n = a.n > b.n ? a.n : b.n;
    for (int k = 0; k < a.n; ++k) r.d[k] = b.v * a.d[k];
    for (int k = a.n; k < r.n; ++k) r.d[k] = 0.0;
    for (int k = 0; k < b.n; ++k) r.d[k] += a.v * b.d[k];
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const double inv = 1.0 / b.v;
    Dual r;
    r.v = a.v * inv;
    r.n = a.n > b.n ? a.n : b.n;
    const double s = -r.v * inv;
    for (int k = 0; k < a.n; ++k) r.d[k] = inv * a.d[k];
    for (int k = a.n; k < r.n; ++k) r.d[k] = 0.0;
    for (int k = 0; k < b.n; ++k) r.d[k] += s * b.d[k];
    return r;
  }

  friend bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
};

namespace detail {

// Applies the chain rule for a univariate function: r = f(a.v), df = f'(a.v).
template <int Cap>
inline Dual<Cap> chain(const Dual<Cap>& a, double f, double df) {
  Dual<Cap> r;
  r.v = f;
  r.n = a.n;
  for (int k = 0; k < a.n; ++k) r.d[k] = df * a.d[k];
  return r;
}

}  // namespace detail

template <int Cap>
inline Dual<Cap> sin(const Dual<Cap>& a) {
  return detail::chain(a, std::sin(a.v), std::cos(a.v));
}
template <int Cap>
inline Dual<Cap> cos(const Dual<Cap>& a) {
  return detail::chain(a, std::cos(a.v), -std::sin(a.v));
}
template <int Cap>
inline Dual<Cap> exp(const Dual<Cap>& a) {
  const double e = std::exp(a.v);
  return detail::chain(a, e, e);
}
template <int Cap>
inline Dual<Cap> log(const Dual<Cap>& a) {
  return detail::chain(a, std::log(a.v), 1.0 / a.v);
}
template <int Cap>
inline Dual<Cap> sqrt(const Dual<Cap>& a) {
  const double s = std::sqrt(a.v);
  return detail::chain(a, s, 0.5 / s);
}
template <int Cap>
inline Dual<Cap> atan2(const Dual<Cap>& y, const Dual<Cap>& x) {
  const double den = x.v * x.v + y.v * y.v;
  Dual<Cap> r;
  r.v = std::atan2(y.v, x.v);
  r.n = x.n > y.n ? x.n : y.n;
  const double gy = x.v / den;
  const double gx = -y.v / den;
  for (int k = 0; k < y.n; ++k) r.d[k] = gy * y.d[k];
  for (int k = y.n; k < r.n; ++k) r.d[k] = 0.0;
  for (int k = 0; k < x.n; ++k) r.d[k] += gx * x.d[k];
  return r;
}

/// Numerically safe softplus: (1/beta) ln(1 + exp(beta p)), the smooth
/// surrogate of max(p, 0). Monotone, and within ln(2)/beta of the exact clip.
inline double softplus(double p, double beta) {
  const double bp = beta * p;
  if (bp > 0.0) return p + std::log1p(std::exp(-bp)) / beta;
  return std::log1p(std::exp(bp)) / beta;
}

template <int Cap>
inline Dual<Cap> softplus(const Dual<Cap>& p, double beta) {
  const double bp = beta * p.v;
  // Logistic sigmoid, evaluated without overflow for either sign.
  const double sg = bp >= 0.0 ? 1.0 / (1.0 + std::exp(-bp))
                              : std::exp(bp) / (1.0 + std::exp(bp));
  return detail::chain(p, softplus(p.v, beta), sg);
}

template <int Cap>
inline double value_of(const Dual<Cap>& a) {
  return a.v;
}
inline double value_of(double a) { return a; }

inline bool is_finite(double a) { return std::isfinite(a); }
template <int Cap>
inline bool is_finite(const Dual<Cap>& a) {
  if (!std::isfinite(a.v)) return false;
  for (int k = 0; k < a.n; ++k)
    if (!std::isfinite(a.d[k])) return false;
  return true;
}

}  // namespace seaopt

#endif  // SEAOPT_DUAL_HPP_
