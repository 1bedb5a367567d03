// Small dense 4x4 matrices over an exact ring; just enough for the Clifford
// product and its characteristic polynomial.
#pragma once

#include <array>

#include "skeinlab/rat.hpp"

namespace skeinlab {

template <class R>
struct Mat4 {
  std::array<std::array<R, 4>, 4> e{};

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.e[i][i] = R(Int(1));
    return m;
  }

  R trace() const { return e[0][0] + e[1][1] + e[2][2] + e[3][3]; }

  Mat4 operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        R acc = R(Int(0));
        for (int k = 0; k < 4; ++k) acc += e[i][k] * o.e[k][j];
        r.e[i][j] = acc;
      }
    return r;
  }
  Mat4 operator+(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] + o.e[i][j];
    return r;
  }
  Mat4 operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] - o.e[i][j];
    return r;
  }
  friend Mat4 operator*(const R& s, const Mat4& m) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.e[i][j] = s * m.e[i][j];
    return r;
  }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
  friend bool operator!=(const Mat4& a, const Mat4& b) { return !(a == b); }
};

// Monic characteristic polynomial coefficients [1, c1, c2, c3, c4] of
// X^4 + c1 X^3 + ... + c4, by Faddeev-LeVerrier (exact over a field
// containing the rationals).
template <class R>
std::array<R, 5> char_poly(const Mat4<R>& m) {
  std::array<R, 5> c{R(Int(1)), R(Int(0)), R(Int(0)), R(Int(0)), R(Int(0))};
  Mat4<R> mk = m;
  for (int k = 1; k <= 4; ++k) {
    R ck = -(mk.trace() / R(Int(k)));
    c[k] = ck;
    if (k < 4) {
      Mat4<R> shift = mk;
      for (int i = 0; i < 4; ++i) shift.e[i][i] += ck;
      mk = m * shift;
    }
  }
  return c;
}

}  // namespace skeinlab
