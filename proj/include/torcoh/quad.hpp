#pragma once

#include <string>
#include <utility>

#include "torcoh/numbers.hpp"

namespace torcoh {

// Element a + b*sqrt(d) of a real quadratic field. d is a square-free
// positive integer, held as 0 whenever b == 0 so that plain rationals
// from different contexts compare equal and mix freely.
struct Quad {
  Rat a;
  Rat b;
  long d = 0;

  Quad() = default;
  Quad(int v) : a(v) {}
  Quad(const Int& v) : a(v) {}
  Quad(Rat v) : a(std::move(v)) {}
  Quad(Rat ra, Rat rb, long rd) : a(std::move(ra)), b(std::move(rb)), d(rd) {
    if (b == 0) d = 0;
  }

  bool is_rational() const { return d == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b && x.d == y.d;
  }
};

// Common discriminant of two operands; 0 is neutral, a genuine clash throws.
inline long quad_merge_d(long x, long y) {
  if (x == 0) return y;
  if (y == 0) return x;
  if (x != y) throw InputError("mixed quadratic fields sqrt(" + std::to_string(x) + ") and sqrt(" + std::to_string(y) + ")");
  return x;
}

inline Quad operator+(const Quad& x, const Quad& y) {
  return Quad(x.a + y.a, x.b + y.b, quad_merge_d(x.d, y.d));
}

inline Quad operator-(const Quad& x, const Quad& y) {
  return Quad(x.a - y.a, x.b - y.b, quad_merge_d(x.d, y.d));
}

inline Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.d); }

inline Quad operator*(const Quad& x, const Quad& y) {
  long d = quad_merge_d(x.d, y.d);
  return Quad(x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
}

inline Quad conj(const Quad& x) { return Quad(x.a, -x.b, x.d); }

inline Rat quad_norm(const Quad& x) { return x.a * x.a - Rat(x.d) * x.b * x.b; }

inline Quad operator/(const Quad& x, const Quad& y) {
  if (y.is_zero()) throw InputError("division by zero quadratic scalar");
  if (y.is_rational()) return Quad(x.a / y.a, x.b / y.a, x.d);
  Rat n = quad_norm(y);
  Quad t = x * conj(y);
  return Quad(t.a / n, t.b / n, t.d);
}

inline Quad& operator+=(Quad& x, const Quad& y) { return x = x + y; }
inline Quad& operator-=(Quad& x, const Quad& y) { return x = x - y; }
inline Quad& operator*=(Quad& x, const Quad& y) { return x = x * y; }

std::string quad_to_string(const Quad& x);
Quad quad_from_string(const std::string& s, long expected_d);

using QuadVec = std::vector<Quad>;

}  // namespace torcoh
