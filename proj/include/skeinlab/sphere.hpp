// Points on the complex 3-sphere as determinant-1 matrices, the braid
// action by reflections, the explicit correspondence with matrix tuples,
// boundary monodromies, the Clifford/Coxeter invariant, and the central
// sign action.
#pragma once

#include <array>
#include <vector>

#include "skeinlab/mat2.hpp"
#include "skeinlab/mat4.hpp"
#include "skeinlab/rat.hpp"

namespace skeinlab {

using SpherePoint = Mat2<GaussRat>;
using Vec4 = std::array<GaussRat, 4>;

struct SphereConfig {
  std::vector<SpherePoint> points;
  bool normalized = false;  // last point is the identity

  size_t r() const { return points.size(); }
};

// [[x1+ix2, x3+ix4], [-x3+ix4, x1-ix2]]; det = q(v) = sum of squares.
SpherePoint vec_to_mat(const Vec4& v);
Vec4 mat_to_vec(const SpherePoint& m);

// <U,V> = tr(U^-1 V)/2, the bilinear form polarizing q under the matrix
// identification.
GaussRat pairing(const SpherePoint& u, const SpherePoint& v);

// s_u(v) = 2<u,v>u - v = tr(U^-1 V) U - V; equals U V^-1 U for det-1 inputs.
SpherePoint reflect(const SpherePoint& u, const SpherePoint& v);

// sigma_i: (..., u_i, u_{i+1}, ...) -> (..., s_{u_i}(u_{i+1}), u_i, ...);
// 1-based i <= r-1. A normalized config touched at the last slot is
// re-normalized by right translation (an SO(4) move).
SphereConfig braid_act(const SphereConfig& c, int i);

SphereConfig normalize(const SphereConfig& c);

// (A_1,...,A_{r-1}) -> (A_1...A_{r-1}, A_2...A_{r-1}, ..., A_{r-1}, 1).
SphereConfig rep_to_sphere(const std::vector<SpherePoint>& rep);

// Inverse of the suffix-product assignment: A_j = u_j u_{j+1}^-1 after
// normalization.
std::vector<SpherePoint> sphere_to_rep(const SphereConfig& c);

// Boundary monodromy traces of the hyperelliptic presentation; one value
// for n = 1 (r odd), two for n = 2 (r even). r = 2g + n with g >= 1.
template <class R>
std::vector<R> boundary_monodromy(const std::vector<Mat2<R>>& rep, int n);

// Ordered Clifford product gamma(vec u_1) ... gamma(vec u_r) in the fixed
// gamma-matrix realization.
Mat4<GaussRat> coxeter_product(const SphereConfig& c);

// The SO(4)-conjugacy invariant exposed: monic char poly coefficients.
std::array<GaussRat, 5> coxeter_invariant(const SphereConfig& c);

const std::array<Mat4<GaussRat>, 4>& gamma_matrices();
Mat4<GaussRat> gamma_of(const Vec4& v);

// Suffix-product sign pattern (a_1...a_{r-1}, a_2...a_{r-1}, ..., a_{r-1}, 1).
std::vector<int> central_to_sphere(const std::vector<int>& a);

// Whether the central action by the sign vector preserves the boundary
// monodromy traces: always for n = 1; for n = 2 iff the odd-index product
// a_1 a_3 ... a_{r-1} is 1 (both displayed boundary words scale by exactly
// that product).
bool boundary_preserved_by_signs(const std::vector<int>& a, int n);

enum class ModuliEqual { Equal, NotEqual, Degenerate };

// SO(4)-orbit equality test for spanning configurations: Gram matrices must
// agree exactly and the determinant of the first independent quadruple must
// match (not just up to sign). Non-spanning configs are reported
// Degenerate rather than decided.
ModuliEqual moduli_equal(const SphereConfig& c, const SphereConfig& d);

// ---- template implementation ----

template <class R>
std::vector<R> boundary_monodromy(const std::vector<Mat2<R>>& rep, int n) {
  const int r = static_cast<int>(rep.size()) + 1;
  if (n != 1 && n != 2) throw std::invalid_argument("boundary_monodromy: n must be 1 or 2");
  if (r % 2 != (n == 1 ? 1 : 0) || r < n + 2)
    throw std::invalid_argument("boundary_monodromy: parity of r must match n (r = 2g+n, g >= 1)");
  auto prod = [&rep](int first, int step, int last) {
    Mat2<R> acc = Mat2<R>::identity();
    for (int i = first; i <= last; i += step) acc = acc * rep[i - 1];
    return acc;
  };
  Mat2<R> all = prod(1, 1, r - 1);
  if (n == 1) {
    Mat2<R> w = prod(1, 2, r - 2) * all.inv_unimodular() * prod(2, 2, r - 1);
    return {w.trace()};
  }
  Mat2<R> w1 = prod(1, 2, r - 1);
  Mat2<R> w2 = all.inv_unimodular() * prod(2, 2, r - 2);
  return {w1.trace(), w2.trace()};
}

}  // namespace skeinlab
