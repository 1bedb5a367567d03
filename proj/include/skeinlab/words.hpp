// Free-group words on punctured-surface generators, boundary words, and
// slopes on the once-punctured torus.
//
// Generators of pi_1(Sigma_{g,n}) are ordered a_1,b_1,...,a_g,b_g,c_1,...,
// c_{n-1} and numbered from 1; a letter is +k for generator k, -k for its
// inverse. Serialization: generator k prints as the k-th lowercase letter,
// its inverse as the uppercase letter ("abAB").
#pragma once

#include <map>
#include <string>
#include <vector>

#include "skeinlab/rat.hpp"

namespace skeinlab {

struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  int rank() const { return 2 * genus + punctures - 1; }
  // chi < 0, i.e. 2g + n - 2 >= 1, with at least one puncture.
  void validate() const;
  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> reduced_letters);  // must already be reduced

  const std::vector<int>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenation, freely reduced
  Word pow(int k) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

  std::string str() const;

 private:
  std::vector<int> letters_;
  friend Word free_reduce(const std::vector<int>& raw);
};

// Cancels adjacent inverse pairs until none remain; idempotent.
Word free_reduce(const std::vector<int>& raw);

Word parse_word(const std::string& s, int rank);

// Strips conjugating prefixes: w = u v u^-1 -> v. Trace functions only see
// the cyclic class.
Word cyclically_reduce(const Word& w);

// Lexicographic minimum over all rotations of w and of w^-1 (both cyclically
// reduced); the memo key for trace computations.
std::vector<int> cyclic_inversion_key(const Word& w);

std::vector<long> exponent_sums(const Word& w, int rank);

// Replace each generator by a word (inverse letters map to inverted images).
Word substituted_word(const Word& w, const std::map<int, Word>& images);

// i-th boundary curve. For i < n this is the generator c_i; for i = n it is
// (prod [a_j,b_j] c_1...c_{n-1})^-1 from the surface relation.
Word boundary_word(const SurfaceSig& sig, int index);

// Primitive slope (p,q) on the once-punctured torus, canonical with q > 0,
// or (1,0) for infinity.
struct Slope {
  long p = 1, q = 0;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.q != b.q ? a.q < b.q : a.p < b.p;
  }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

bool slope_is_canonical(long p, long q);
// Reduces and orients (p,q); throws on (0,0).
Slope make_slope(long p, long q);
// Requires a canonical "p/q" string.
Slope parse_slope(const std::string& s);

// Christoffel-type representative of the (p,q) curve: W(1,0)="a",
// W(0,1)="b", Farey mediant W(p+r,q+s) = W(right parent) * W(left parent);
// negative p mirrors the tree through a -> a^-1.
Word slope_word(const Slope& s);

// |p1 q2 - q1 p2|, the geometric intersection number of the two slopes.
long intersection(const Slope& a, const Slope& b);

// All canonical slopes with max(|p|,|q|) <= height.
std::vector<Slope> slopes_up_to_height(long height);

}  // namespace skeinlab
