// The character algebra engine: trace-word rewriting to polynomial normal
// form on rank-2 surfaces, and the exact matrix-evaluation oracle for any
// rank.
//
// Rank-2 coordinates are (x, y, z) = (tr_g1, tr_g2, tr_{g1 g2}); on the
// once-punctured torus that is (tr_a, tr_b, tr_ab).
#pragma once

#include <map>
#include <stdexcept>

#include "skeinlab/mat2.hpp"
#include "skeinlab/multipoly.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

inline const std::vector<std::string> kTraceVars = {"x", "y", "z"};

// Assignment of generators to exact determinant-1 matrices; the evaluation
// oracle for the character algebra.
template <class R>
struct MatrixRep {
  SurfaceSig sig;
  std::map<int, Mat2<R>> images;

  MatrixRep(SurfaceSig s, std::map<int, Mat2<R>> imgs)
      : sig(s), images(std::move(imgs)) {
    sig.validate();
    for (const auto& [g, m] : images) {
      if (g < 1 || g > sig.rank())
        throw std::invalid_argument("MatrixRep: generator out of rank");
      if (!(m.det() == R(Int(1))))
        throw std::invalid_argument("MatrixRep: image must have det 1");
    }
  }
};

template <class R>
Mat2<R> evaluate_word(const MatrixRep<R>& rep, const Word& w) {
  Mat2<R> acc = Mat2<R>::identity();
  for (int l : w.letters()) {
    auto it = rep.images.find(std::abs(l));
    if (it == rep.images.end())
      throw std::invalid_argument("evaluate_word: generator has no image");
    acc = acc * (l > 0 ? it->second : it->second.inv_unimodular());
  }
  return acc;
}

// tr rho(w), exact over the coefficient ring of the representation.
template <class R>
R evaluate_trace(const MatrixRep<R>& rep, const Word& w) {
  return evaluate_word(rep, w).trace();
}

// Polynomial normal form of tr_w in Z[x,y,z] for a rank-2 surface. Rewrites
// with cyclic invariance, tr_w = tr_{w^-1}, the product relation
// tr_uv = tr_u tr_v - tr_{uv^-1} and the Cayley-Hamilton square reduction,
// with memoization on the cyclic/inversion class.
MultiPoly trace_reduce(const SurfaceSig& sig, const Word& w);

// The polynomial T_s = trace_reduce(slope_word(s)); memoized.
MultiPoly slope_trace(const Slope& s);

// Boundary trace of the once-punctured torus: x^2 + y^2 + z^2 - xyz - 2.
const MultiPoly& kappa();

}  // namespace skeinlab
