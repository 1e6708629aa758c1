#pragma once

#include <cmath>

namespace pignn {

/// First-order dual number a + b*eps with eps^2 = 0. Running a computation
/// in Dual arithmetic propagates one tangent direction alongside the value
/// (forward-mode differentiation).
struct Dual {
  double v = 0.0;  // value
  double t = 0.0;  // tangent

  Dual() = default;
  Dual(double value) : v(value) {}
  Dual(double value, double tangent) : v(value), t(tangent) {}
};

inline Dual operator-(Dual a) { return {-a.v, -a.t}; }
inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.t + b.t}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.t - b.t}; }
inline Dual operator*(Dual a, Dual b) {
  return {a.v * b.v, a.v * b.t + a.t * b.v};
}
inline Dual operator/(Dual a, Dual b) {
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  return {q, (a.t - q * b.t) * inv};
}
inline Dual& operator+=(Dual& a, Dual b) { a = a + b; return a; }
inline Dual& operator-=(Dual& a, Dual b) { a = a - b; return a; }
inline Dual& operator*=(Dual& a, Dual b) { a = a * b; return a; }

inline Dual sqrt(Dual a) {
  const double r = std::sqrt(a.v);
  return {r, a.t / (2.0 * r)};
}
inline Dual exp(Dual a) {
  const double e = std::exp(a.v);
  return {e, a.t * e};
}
inline Dual log(Dual a) { return {std::log(a.v), a.t / a.v}; }

/// Second-order dual number a + b*e1 + c*e2 + d*e1*e2 with e1^2 = e2^2 = 0.
/// Seeding two independent tangent directions extracts a mixed second
/// derivative from the e1*e2 component.
struct HyperDual {
  double v = 0.0;   // value
  double t1 = 0.0;  // e1 tangent
  double t2 = 0.0;  // e2 tangent
  double t12 = 0.0; // e1*e2 cross term

  HyperDual() = default;
  HyperDual(double value) : v(value) {}
  HyperDual(double value, double e1, double e2, double e12)
      : v(value), t1(e1), t2(e2), t12(e12) {}
};

inline HyperDual operator-(HyperDual a) { return {-a.v, -a.t1, -a.t2, -a.t12}; }
inline HyperDual operator+(HyperDual a, HyperDual b) {
  return {a.v + b.v, a.t1 + b.t1, a.t2 + b.t2, a.t12 + b.t12};
}
inline HyperDual operator-(HyperDual a, HyperDual b) {
  return {a.v - b.v, a.t1 - b.t1, a.t2 - b.t2, a.t12 - b.t12};
}
inline HyperDual operator*(HyperDual a, HyperDual b) {
  return {a.v * b.v,
          a.v * b.t1 + a.t1 * b.v,
          a.v * b.t2 + a.t2 * b.v,
          a.v * b.t12 + a.t12 * b.v + a.t1 * b.t2 + a.t2 * b.t1};
}

// Chain rule for a smooth scalar map applied to a hyper-dual argument:
// f(a) + f'(a)(b e1 + c e2) + (f'(a) d + f''(a) b c) e1 e2.
inline HyperDual hd_apply(HyperDual a, double f, double fp, double fpp) {
  return {f, fp * a.t1, fp * a.t2, fp * a.t12 + fpp * a.t1 * a.t2};
}

inline HyperDual operator/(HyperDual a, HyperDual b) {
  const double inv = 1.0 / b.v;
  HyperDual binv = hd_apply(b, inv, -inv * inv, 2.0 * inv * inv * inv);
  return a * binv;
}
inline HyperDual& operator+=(HyperDual& a, HyperDual b) { a = a + b; return a; }
inline HyperDual& operator-=(HyperDual& a, HyperDual b) { a = a - b; return a; }
inline HyperDual& operator*=(HyperDual& a, HyperDual b) { a = a * b; return a; }

inline HyperDual sqrt(HyperDual a) {
  const double r = std::sqrt(a.v);
  return hd_apply(a, r, 0.5 / r, -0.25 / (r * a.v));
}
inline HyperDual exp(HyperDual a) {
  const double e = std::exp(a.v);
  return hd_apply(a, e, e, e);
}
inline HyperDual log(HyperDual a) {
  const double inv = 1.0 / a.v;
  return hd_apply(a, std::log(a.v), inv, -inv * inv);
}

/// Value part of a scalar, uniform across double/Dual/HyperDual.
inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.v; }
inline double value_of(const HyperDual& x) { return x.v; }

inline bool finite_value(double x) { return std::isfinite(x); }
inline bool finite_value(const Dual& x) {
  return std::isfinite(x.v) && std::isfinite(x.t);
}
inline bool finite_value(const HyperDual& x) {
  return std::isfinite(x.v) && std::isfinite(x.t1) && std::isfinite(x.t2) &&
         std::isfinite(x.t12);
}

} // namespace pignn
