// Relative automorphisms of the character algebra as coordinate
// substitutions. Every map carries an explicit inverse candidate;
// automorphy is certified by is_relative_automorphism, never assumed.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeinlab/multipoly.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

class CoordMap {
 public:
  CoordMap(std::vector<std::string> vars, std::vector<MultiPoly> fwd,
           std::vector<MultiPoly> inv);

  const std::vector<std::string>& vars() const { return vars_; }
  const MultiPoly& image(const std::string& var) const;
  const MultiPoly& inverse_image(const std::string& var) const;

  MultiPoly apply(const MultiPoly& f) const;
  MultiPoly apply_inverse(const MultiPoly& f) const;

  CoordMap inverse_map() const { return CoordMap(vars_, inv_, fwd_); }

  // apply(compose(a,b), f) == apply(a, apply(b, f)).
  friend CoordMap compose(const CoordMap& a, const CoordMap& b);

  friend bool operator==(const CoordMap& a, const CoordMap& b);

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::vector<MultiPoly> fwd_, inv_;

  std::map<std::string, MultiPoly> as_map(const std::vector<MultiPoly>& images) const;
};

CoordMap identity_map(const std::vector<std::string>& vars);

// Coordinate systems backing the symbolic actions: variable names together
// with the defining trace words.
struct CoordSystem {
  SurfaceSig sig;
  std::vector<std::string> vars;
  std::vector<Word> words;
};
// Supported: Sigma_{1,1} with (x,y,z) = (tr_a, tr_b, tr_ab) and Sigma_{0,4}
// with (x,y,z,p1..p4).
CoordSystem coord_system(const SurfaceSig& sig);

// Boundary trace polynomials a relative automorphism must fix: {kappa} for
// Sigma_{1,1}, the four p_i for Sigma_{0,4}.
std::vector<MultiPoly> boundary_polys(const SurfaceSig& sig);

// The three mapping-class generators of the once-punctured torus:
//   R: (x,y,z) -> (y,x,z)
//   T: (x,y,z) -> (x,xy-z,y)
//   U: (x,y,z) -> (x,y,xy-z)
CoordMap mcg_generator(char name);

// Vieta involution along one coordinate of the once-punctured torus,
// e.g. tau_z: z <-> xy - z.
CoordMap vieta(char axis);

// Vieta involution on the four-punctured sphere fiber with formal
// parameters (A,B,C,D): the second-root map of the fiber equation with the
// given xyz sign (tau_x: x -> A - s*yz - x).
CoordMap vieta_fiber(char axis, int xyz_sign);

// Permutation of (x,y,z); perm[i] = image index of coordinate i.
CoordMap coordinate_permutation(const std::array<int, 3>& perm);

// Raw diagonal sign map on a variable list (not necessarily induced by any
// central representation).
CoordMap coordinate_signs(const std::vector<std::string>& vars,
                          const std::vector<int>& signs);

struct SignVector {
  std::map<int, int> values;  // generator index -> +1/-1

  int of_word(const Word& w) const;
  std::string str() const;
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

// The central-representation action: each trace coordinate tr_w picks up
// the sign eps(w) determined by exponent sums mod 2.
CoordMap sign_action(const SurfaceSig& sig, const SignVector& eps);

struct RelAutCheck {
  bool ok = false;
  std::string detail;  // which certificate failed, when not ok
};

// True iff m and its attached inverse are two-sided inverses on the
// coordinates and m fixes every given boundary polynomial.
RelAutCheck is_relative_automorphism(const CoordMap& m,
                                     const std::vector<MultiPoly>& boundary);

// The sign vector eps' with g o sign_action(eps) o g^-1 == sign_action(eps');
// throws std::runtime_error("not a sign action") when none exists.
SignVector conjugate_sign(const CoordMap& g, const SignVector& eps,
                          const SurfaceSig& sig);

// Coordinate map induced by a free-group endomorphism psi (tr_w -> tr_psi(w))
// on a rank-2 surface; psi_inverse supplies the inverse candidate.
CoordMap induced_by_word_images(const SurfaceSig& sig,
                                const std::map<int, Word>& psi,
                                const std::map<int, Word>& psi_inverse);

// Image slope under the curve-complex action of g: the slope s' with
// apply(g, T_s) == T_s', searched up to the given height.
std::optional<Slope> slope_image(const CoordMap& g, const Slope& s, long search_height);

}  // namespace skeinlab
