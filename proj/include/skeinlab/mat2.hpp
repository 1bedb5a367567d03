// 2x2 matrices over an arbitrary exact coefficient ring.
#pragma once

#include "skeinlab/rat.hpp"

namespace skeinlab {

template <class R>
struct Mat2 {
  R a, b, c, d;  // row-major [[a,b],[c,d]]

  static Mat2 identity() { return {R(Int(1)), R(Int(0)), R(Int(0)), R(Int(1))}; }

  R trace() const { return a + d; }
  R det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const R& s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }

  // Adjugate = inverse when det == 1 (callers keep the unimodular invariant).
  Mat2 inv_unimodular() const { return {d, -b, -c, a}; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

}  // namespace skeinlab
