// Deterministic randomness for property suites. All reductions are done by
// hand so reports are byte-identical across platforms for a given seed.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skeinlab/mat2.hpp"
#include "skeinlab/multipoly.hpp"
#include "skeinlab/rat.hpp"
#include "skeinlab/words.hpp"

namespace skeinlab {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Inclusive range; modulo reduction (bias is irrelevant here and the
  // result is platform-independent, unlike std distributions).
  long range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty range");
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  long nonzero(long lo, long hi) {
    for (;;) {
      long v = range(lo, hi);
      if (v != 0) return v;
    }
  }
  int sign() { return next() & 1 ? 1 : -1; }

 private:
  std::mt19937_64 eng_;
};

// Freely reduced word of exactly the requested length.
Word random_reduced_word(Rng& rng, int rank, int length);

// Product of elementary shears: integer entries, det 1.
Mat2<Rat> random_unimodular(Rng& rng, int steps = 6, long shear_max = 3);

// Generic rational det-1 matrix [[a,b],[c,(1+bc)/a]].
Mat2<Rat> random_sl2_rat(Rng& rng, long entry_max = 5);

// Generic Gaussian-rational det-1 matrix.
Mat2<GaussRat> random_sl2_gauss(Rng& rng, long entry_max = 3);

// Dense-ish random polynomial of total degree <= deg.
MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int deg,
                      long coeff_max, int terms);

}  // namespace skeinlab
