// Relative fibers of the four-punctured sphere: the coefficients of the
// cubic surface cut out by the boundary traces, produced by exact fitting
// against sampled determinant-1 triples (no external formula tables).
//
// Coordinates: x = tr(C1 C2), y = tr(C2 C3), z = tr(C1 C3),
// p_i = tr(C_i) with C4 = (C1 C2 C3)^-1. The fitted equation is
//   x^2 + y^2 + z^2 + s*xyz - A x - B y - C z - D = 0,
// where the sign s of the cubic term is itself pinned by the fit.
#pragma once

#include <array>

#include "skeinlab/mat2.hpp"
#include "skeinlab/multipoly.hpp"
#include "skeinlab/rng.hpp"

namespace skeinlab {

struct FiberCoefficients {
  Rat A, B, C, D;
  int xyz_sign = 1;  // coefficient of xyz in the fitted equation
};

// Rational det-1 triple with tr C_i = p_i (i = 1,2,3) and
// tr(C1 C2 C3) = p_4, exactly.
std::array<Mat2<Rat>, 3> sample_triple_with_traces(const std::array<Rat, 4>& p,
                                                   Rng& rng);

// Fit (A,B,C,D) and the xyz sign from 8 samples, then verify on 20 fresh
// ones; throws if no sign admits a consistent fit.
FiberCoefficients fiber_coefficients(const std::array<Rat, 4>& p, Rng& rng);

// Value of the fitted equation at a point (zero iff on the fiber).
Rat fiber_eval(const FiberCoefficients& fc, const Rat& x, const Rat& y, const Rat& z);

// The fiber polynomial with formal parameters: variables (x,y,z,A,B,C,D).
MultiPoly fiber_symbolic(int xyz_sign);

inline const std::vector<std::string> kFiberVars = {"x", "y", "z", "A", "B", "C", "D"};

}  // namespace skeinlab
