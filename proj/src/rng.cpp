#include "skeinlab/rng.hpp"

namespace skeinlab {

Word random_reduced_word(Rng& rng, int rank, int length) {
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) {
    for (;;) {
      int g = static_cast<int>(rng.range(1, rank));
      int l = rng.sign() * g;
      if (!letters.empty() && letters.back() == -l) continue;
      letters.push_back(l);
      break;
    }
  }
  return Word(std::move(letters));
}

Mat2<Rat> random_unimodular(Rng& rng, int steps, long shear_max) {
  Mat2<Rat> m = Mat2<Rat>::identity();
  for (int i = 0; i < steps; ++i) {
    Rat e{Int(rng.nonzero(-shear_max, shear_max))};
    if (rng.next() & 1)
      m = m * Mat2<Rat>{Rat(1), e, Rat(0), Rat(1)};
    else
      m = m * Mat2<Rat>{Rat(1), Rat(0), e, Rat(1)};
  }
  return m;
}

Mat2<Rat> random_sl2_rat(Rng& rng, long entry_max) {
  Rat a{Int(rng.nonzero(-entry_max, entry_max))};
  Rat b{Int(rng.range(-entry_max, entry_max))};
  Rat c{Int(rng.range(-entry_max, entry_max))};
  return {a, b, c, (Rat(1) + b * c) / a};
}

Mat2<GaussRat> random_sl2_gauss(Rng& rng, long entry_max) {
  auto g = [&rng, entry_max] {
    return GaussRat(Rat(Int(rng.range(-entry_max, entry_max))),
                    Rat(Int(rng.range(-entry_max, entry_max))));
  };
  GaussRat a;
  do {
    a = g();
  } while (a.is_zero());
  GaussRat b = g(), c = g();
  return {a, b, c, (GaussRat(Int(1)) + b * c) / a};
}

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int deg,
                      long coeff_max, int terms) {
  MultiPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Expt e(vars.size(), 0);
    int budget = static_cast<int>(rng.range(0, deg));
    for (int i = 0; i < budget; ++i) ++e[rng.range(0, vars.size() - 1)];
    p.add_term(e, Int(rng.nonzero(-coeff_max, coeff_max)));
  }
  return p;
}

}  // namespace skeinlab
