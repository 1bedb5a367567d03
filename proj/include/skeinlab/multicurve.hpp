// Multicurve-basis decomposition on the once-punctured torus: every
// f in Z[x,y,z] is a unique integer combination of T_s^k * kappa^m
// (parallel copies of one slope plus boundary copies).
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skeinlab/multipoly.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

struct BasisKey {
  std::optional<Slope> slope;  // nullopt when k == 0 (pure boundary term)
  int k = 0;                   // parallel copies of the slope
  int m = 0;                   // boundary (kappa) copies

  friend bool operator<(const BasisKey& a, const BasisKey& b) {
    if (a.slope.has_value() != b.slope.has_value()) return !a.slope.has_value();
    if (a.slope && b.slope && !(*a.slope == *b.slope)) return *a.slope < *b.slope;
    if (a.k != b.k) return a.k < b.k;
    return a.m < b.m;
  }
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

struct BasisDecomposition {
  std::map<BasisKey, Int> terms;

  friend bool operator==(const BasisDecomposition&, const BasisDecomposition&) = default;
};

// T_slope^k * kappa^m (the constant 1 for the empty key).
MultiPoly basis_element(const BasisKey& key);

// Exact decomposition; throws std::runtime_error("basis search exhausted")
// if the candidate set cannot express f after one enlargement retry.
BasisDecomposition multicurve_decompose(const MultiPoly& f);

MultiPoly recombine(const BasisDecomposition& dec);

// The candidate basis elements with degree <= deg, enumerated the same way
// the decomposition uses them (exposed for the uniqueness test oracle).
std::vector<BasisKey> basis_candidates(int deg);

// Exact linear algebra over Rat: solve M v = rhs (M given by rows).
// Returns nullopt when inconsistent; throws when the solution is not unique
// (column rank deficiency).
std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> rows,
                                          std::vector<Rat> rhs);
int rat_rank(std::vector<std::vector<Rat>> rows);

}  // namespace skeinlab
