// Measured laminations on the once-punctured torus as weighted slopes, the
// associated valuations via the multicurve decomposition, Laurent
// degenerations as pseudo-valuations, and the domination fit.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"
#include "skeinlab/mat2.hpp"
#include "skeinlab/multicurve.hpp"
#include "skeinlab/rng.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

struct Lamination {
  // On the once-punctured torus distinct slopes intersect, so at most one
  // essential slope can carry weight.
  std::map<Slope, Rat> slope_weights;
  Rat boundary_weight = Rat(0);

  void validate() const;
  Lamination scaled(const Rat& c) const;
  std::string str() const;
};

// "p/q:weight[,boundary:w]"; "0" or "boundary:w" for slope-free laminations.
Lamination parse_lamination(const std::string& s);

// v_lambda(f): max over the multicurve decomposition of k * weight * i(lam, s);
// kappa powers and constants contribute 0. nullopt encodes -infinity (f = 0).
std::optional<Rat> valuate(const Lamination& lam, const MultiPoly& f);
std::optional<Rat> valuate_decomposed(const Lamination& lam,
                                      const BasisDecomposition& dec);

// Internal consistency of the two valuation routes on tr_w for a single
// weighted slope, plus the simple-word cross check against the slope
// intersection number.
bool thurston_check(const Lamination& lam, const Word& w);

// Translation length on the dual tree: max(0, 2v).
Rat translation_length(const Rat& v);

// Farey-graph adjacency: slope intersection number 1 (the curve complex of
// both supported surfaces; the geometric number on the four-punctured
// sphere is twice the slope pairing).
bool farey_adjacent(const Slope& s, const Slope& u, const SurfaceSig& sig);

// Matrix representation over Laurent polynomials realizing a degeneration;
// boundary traces must be t-constant (the relative condition).
struct LaurentRep {
  SurfaceSig sig;
  std::map<int, Mat2<LaurentPoly>> images;

  LaurentRep(SurfaceSig s, std::map<int, Mat2<LaurentPoly>> imgs);
};

// Max t-degree of f evaluated through the coordinate substitution; a
// pseudo-valuation (evaluation may kill nonzero f, giving -infinity).
std::optional<long> laurent_valuate(const LaurentRep& rep, const MultiPoly& f);

struct DominationReport {
  long height = 0;
  int samples = 0;
  bool fitted = false;       // a weighted slope matched every tested slope trace
  Lamination lamination;     // meaningful when fitted
  std::vector<std::string> slope_values;  // "s: v=... v_lam=..." per tested slope
  int inequality_checked = 0;
  int kernel_skips = 0;      // nonzero f with laurent value -infinity
  std::string note;
};

// Fits a weighted slope from the slope-trace values, verifies equality on
// all tested slopes and v <= v_lambda on random polynomials. An inequality
// violation throws (it would falsify the domination statement); a missing
// fit is reported, not fabricated.
DominationReport dominate(const LaurentRep& rep, long height, int samples, Rng& rng);

}  // namespace skeinlab
