#ifndef SEAOPT_JET_HPP_
#define SEAOPT_JET_HPP_

#include <array>
#include <cmath>
#include <initializer_list>

#include "seaopt/dual.hpp"
#include "seaopt/errors.hpp"

namespace seaopt {

/// Truncated Taylor expansion of a time signal: value plus time derivatives
/// up to a fixed order K <= kMaxOrder. Arithmetic is exact truncated-Taylor
/// arithmetic, so derivatives of products, quotients and the transcendental
/// functions below propagate without approximation.
///
/// The scalar type S is double in plain evaluation and Dual<> when decision
/// derivatives are propagated through the same formulas.
///
/// Binary operations require equal orders; scalars (constants) participate
/// through the dedicated overloads and never truncate the order.
template <class S>
class Jet {
 public:
  static constexpr int kMaxOrder = 5;

  Jet() : order_(0) { c_[0] = S(0.0); }

  /// A constant signal: all time derivatives zero.
  static Jet constant(const S& v, int order) {
    Jet j;
    j.order_ = order;
    j.c_[0] = v;
    for (int k = 1; k <= order; ++k) j.c_[k] = S(0.0);
    return j;
  }

  /// The running time itself: value t0, first derivative one.
  static Jet time(const S& t0, int order) {
    Jet j = constant(t0, order);
    if (order >= 1) j.c_[1] = S(1.0);
    return j;
  }

  /// Builds a jet from value and derivatives f, f', f'', ...
  static Jet from_derivatives(const S* derivs, int order) {
    Jet j;
    j.order_ = order;
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) fact *= k;
      j.c_[k] = derivs[k] * S(1.0 / fact);
    }
    return j;
  }

  int order() const { return order_; }
  const S& value() const { return c_[0]; }

  /// k-th time derivative (k! times the k-th Taylor coefficient).
  S derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c_[k] * S(fact);
  }

  const S& coeff(int k) const { return c_[k]; }
  S& coeff(int k) { return c_[k]; }

  /// Time derivative as a jet one order lower.
  Jet derivative_jet() const {
    Jet j;
    j.order_ = order_ > 0 ? order_ - 1 : 0;
    if (order_ == 0) {
      j.c_[0] = S(0.0);
      return j;
    }
    for (int k = 0; k < order_; ++k) j.c_[k] = c_[k + 1] * S(k + 1.0);
    return j;
  }

  /// Copy truncated to a lower order.
  Jet truncated(int order) const {
    Jet j;
    j.order_ = order;
    for (int k = 0; k <= order; ++k) j.c_[k] = c_[k];
    return j;
  }

  Jet operator-() const {
    Jet j;
    j.order_ = order_;
    for (int k = 0; k <= order_; ++k) j.c_[k] = -c_[k];
    return j;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet j;
    j.order_ = a.order_ < b.order_ ? a.order_ : b.order_;
    for (int k = 0; k <= j.order_; ++k) j.c_[k] = a.c_[k] + b.c_[k];
    return j;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet j;
    j.order_ = a.order_ < b.order_ ? a.order_ : b.order_;
    for (int k = 0; k <= j.order_; ++k) j.c_[k] = a.c_[k] - b.c_[k];
    return j;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet j;
    j.order_ = a.order_ < b.order_ ? a.order_ : b.order_;
    for (int k = 0; k <= j.order_; ++k) {
      S acc = a.c_[0] * b.c_[k];
      for (int i = 1; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
      j.c_[k] = acc;
    }
    return j;
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  friend Jet operator+(const Jet& a, const S& s) {
    Jet j = a;
    j.c_[0] += s;
    return j;
  }
  friend Jet operator+(const S& s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, const S& s) {
    Jet j = a;
    j.c_[0] -= s;
    return j;
  }
  friend Jet operator-(const S& s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(const Jet& a, const S& s) {
    Jet j;
    j.order_ = a.order_;
    for (int k = 0; k <= a.order_; ++k) j.c_[k] = a.c_[k] * s;
    return j;
  }
  friend Jet operator*(const S& s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, const S& s) { return a * (S(1.0) / s); }

  friend Jet reciprocal(const Jet& u) {
    if (value_of(u.c_[0]) == 0.0)
      throw DivisionByZeroJet("jet reciprocal of zero value");
    Jet r;
    r.order_ = u.order_;
    const S inv = S(1.0) / u.c_[0];
    r.c_[0] = inv;
    for (int k = 1; k <= u.order_; ++k) {
      S acc = u.c_[1] * r.c_[k - 1];
      for (int j = 2; j <= k; ++j) acc += u.c_[j] * r.c_[k - j];
      r.c_[k] = -inv * acc;
    }
    return r;
  }

  friend Jet sqrt(const Jet& u) {
    using std::sqrt;
    if (value_of(u.c_[0]) <= 0.0)
      throw DivisionByZeroJet("jet sqrt of non-positive value");
    Jet r;
    r.order_ = u.order_;
    r.c_[0] = sqrt(u.c_[0]);
    const S half_inv = S(0.5) / r.c_[0];
    for (int k = 1; k <= u.order_; ++k) {
      S acc = u.c_[k];
      for (int j = 1; j < k; ++j) acc -= r.c_[j] * r.c_[k - j];
      r.c_[k] = half_inv * acc;
    }
    return r;
  }

  friend Jet sin(const Jet& u) { return sincos(u).first; }
  friend Jet cos(const Jet& u) { return sincos(u).second; }

  /// Simultaneous sin/cos (the recurrences are coupled anyway).
  friend std::pair<Jet, Jet> sincos(const Jet& u) {
    using std::cos;
    using std::sin;
    Jet s, c;
    s.order_ = c.order_ = u.order_;
    s.c_[0] = sin(u.c_[0]);
    c.c_[0] = cos(u.c_[0]);
    for (int k = 1; k <= u.order_; ++k) {
      S sa = u.c_[1] * c.c_[k - 1];
      S ca = u.c_[1] * s.c_[k - 1];
      for (int j = 2; j <= k; ++j) {
        sa += S(static_cast<double>(j)) * u.c_[j] * c.c_[k - j];
        ca += S(static_cast<double>(j)) * u.c_[j] * s.c_[k - j];
      }
      const S invk = S(1.0 / k);
      s.c_[k] = invk * sa;
      c.c_[k] = -invk * ca;
    }
    return {s, c};
  }

  friend Jet atan2(const Jet& y, const Jet& x) {
    using std::atan2;
    const int order = y.order_ < x.order_ ? y.order_ : x.order_;
    Jet th;
    th.order_ = order;
    th.c_[0] = atan2(y.c_[0], x.c_[0]);
    if (order == 0) return th;
    // d(theta)/dt = (x y' - y x') / (x^2 + y^2), then integrate coefficients.
    const Jet xt = x.truncated(order - 1);
    const Jet yt = y.truncated(order - 1);
    const Jet num = xt * y.derivative_jet() - yt * x.derivative_jet();
    const Jet den = xt * xt + yt * yt;
    const Jet w = num * reciprocal(den);
    for (int k = 1; k <= order; ++k) th.c_[k] = w.c_[k - 1] * S(1.0 / k);
    return th;
  }

  friend Jet square(const Jet& a) { return a * a; }

 private:
  std::array<S, kMaxOrder + 1> c_;
  int order_;
};

using DJet = Jet<double>;

template <class S>
inline double value_of(const Jet<S>& j) {
  return value_of(j.value());
}

template <class S>
inline bool is_finite(const Jet<S>& j) {
  for (int k = 0; k <= j.order(); ++k)
    if (!is_finite(j.coeff(k))) return false;
  return true;
}

// Multiplicative inverse that preserves jet order (a raw S(1.0) constant
// would be order zero and truncate subsequent products).
inline double inv_scalar(double s) { return 1.0 / s; }
template <int Cap>
inline Dual<Cap> inv_scalar(const Dual<Cap>& s) {
  return Dual<Cap>(1.0) / s;
}
template <class S>
inline Jet<S> inv_scalar(const Jet<S>& s) {
  return reciprocal(s);
}

}  // namespace seaopt

#endif  // SEAOPT_JET_HPP_
