#include "skeinlab/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "skeinlab/coordmap.hpp"
#include "skeinlab/fiber.hpp"
#include "skeinlab/lamination.hpp"
#include "skeinlab/multicurve.hpp"
#include "skeinlab/rng.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/sphere.hpp"

namespace skeinlab {

namespace {

constexpr SurfaceSig kTorus{1, 1};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct Battery {
  CriterionResult res;
  Timer timer;
  double budget_ms;

  Battery(int number, std::string name, double budget)
      : budget_ms(budget) {
    res.number = number;
    res.name = std::move(name);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++res.cases;
    if (!ok && res.failures.size() < 16) res.failures.push_back(describe());
    if (!ok) failed = true;
  }
  void check(bool ok, const std::string& describe) {
    check(ok, [&describe] { return describe; });
  }

  CriterionResult finish() {
    res.ms = timer.ms();
    if (res.ms > budget_ms) {
      failed = true;
      res.failures.push_back("runtime budget exceeded: " + std::to_string(res.ms) + " ms");
    }
    res.pass = !failed;
    return res;
  }

 private:
  bool failed = false;
};

void enumerate_reduced_words(int rank, int max_len,
                             const std::function<void(const Word&)>& visit) {
  std::vector<int> letters;
  std::function<void()> rec = [&] {
    visit(Word(letters));
    if (static_cast<int>(letters.size()) == max_len) return;
    for (int g = 1; g <= rank; ++g) {
      for (int l : {g, -g}) {
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
        rec();
        letters.pop_back();
      }
    }
  };
  rec();
}

MultiPoly xyz(const char* n) { return MultiPoly::variable(kTraceVars, n); }

MatrixRep<Rat> random_pair_rep(Rng& rng) {
  return MatrixRep<Rat>(kTorus,
                        {{1, random_unimodular(rng)}, {2, random_unimodular(rng)}});
}

std::string show_word(const Word& w) { return "word \"" + w.str() + "\""; }

}  // namespace

// 1. trace_reduce vs the evaluation oracle on every freely reduced word of
// length <= 6, plus the commutator identity verbatim.
CriterionResult criterion_skein_oracle(uint64_t seed, int scale) {
  Battery bat(1, "skein oracle (rewrite = evaluate)", 60'000);
  Rng rng(seed * 1009 + 1);

  MultiPoly x = xyz("x"), y = xyz("y"), z = xyz("z");
  MultiPoly commutator = x * x + y * y + z * z - x * y * z -
                         MultiPoly::constant(kTraceVars, Int(2));
  bat.check(trace_reduce(kTorus, parse_word("abAB", 2)) == commutator,
            "tr[a,b] != x^2+y^2+z^2-xyz-2");

  long words = 0;
  enumerate_reduced_words(2, 6, [&](const Word& w) {
    ++words;
    MultiPoly poly = trace_reduce(kTorus, w);
    for (int rep = 0; rep < 5 * scale; ++rep) {
      MatrixRep<Rat> mats = random_pair_rep(rng);
      std::map<std::string, Rat> at{{"x", evaluate_trace(mats, Word({1}))},
                                    {"y", evaluate_trace(mats, Word({2}))},
                                    {"z", evaluate_trace(mats, Word({1, 2}))}};
      bat.check(poly.evaluate<Rat>(at) == evaluate_trace(mats, w),
                [&] { return show_word(w) + ": rewrite disagrees with evaluation"; });
    }
  });
  bat.res.detail = std::to_string(words) + " freely reduced words of length <= 6, 5 reps each";
  return bat.finish();
}

// 2. Relative-automorphism battery on the once-punctured torus.
CriterionResult criterion_relative_battery(uint64_t seed, int scale) {
  (void)seed;
  (void)scale;
  Battery bat(2, "relative automorphism battery", 5'000);
  const std::vector<MultiPoly> boundary = boundary_polys(kTorus);

  auto expect_relative = [&](const CoordMap& m, const std::string& label) {
    RelAutCheck c = is_relative_automorphism(m, boundary);
    bat.check(c.ok, [&] { return label + ": " + c.detail; });
  };
  for (char g : {'R', 'T', 'U'}) expect_relative(mcg_generator(g), std::string(1, g));
  expect_relative(vieta('z'), "tau_z");
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                 {1, 0, 2},
                                                 {0, 2, 1},
                                                 {2, 1, 0},
                                                 {1, 2, 0},
                                                 {2, 0, 1}}};
  for (const auto& p : perms)
    expect_relative(coordinate_permutation(p), "permutation");

  for (const auto& s : std::vector<std::vector<int>>{
           {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}})
    expect_relative(coordinate_signs(kTraceVars, s), "product-one signs");
  for (const auto& s : std::vector<std::vector<int>>{
           {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, -1}}) {
    RelAutCheck c = is_relative_automorphism(coordinate_signs(kTraceVars, s), boundary);
    bat.check(!c.ok, "product-minus-one signs must fail");
  }

  std::map<int, Word> inv_gens{{1, Word({-1})}, {2, Word({-2})}};
  bat.check(induced_by_word_images(kTorus, inv_gens, inv_gens) == identity_map(kTraceVars),
            "hyperelliptic (a,b)->(a^-1,b^-1) must induce the identity");
  return bat.finish();
}

// 3. Multicurve decomposition round-trips and the worked expansions.
CriterionResult criterion_decomposition(uint64_t seed, int scale) {
  Battery bat(3, "multicurve decomposition", 60'000);
  Rng rng(seed * 1009 + 3);

  {
    BasisDecomposition d = multicurve_decompose(kappa());
    BasisDecomposition expect;
    expect.terms[BasisKey{std::nullopt, 0, 1}] = 1;
    bat.check(d == expect, "kappa must decompose to the basis element itself");
  }
  {
    BasisDecomposition d = multicurve_decompose(xyz("x") * xyz("y"));
    BasisDecomposition expect;
    expect.terms[BasisKey{Slope{1, 1}, 1, 0}] = 1;
    expect.terms[BasisKey{Slope{-1, 1}, 1, 0}] = 1;
    bat.check(d == expect, "xy must split as T_(1,1) + T_(-1,1)");
  }
  {
    BasisDecomposition d = multicurve_decompose(xyz("x") * xyz("y") * xyz("z"));
    BasisDecomposition expect;
    expect.terms[BasisKey{Slope{1, 0}, 2, 0}] = 1;
    expect.terms[BasisKey{Slope{0, 1}, 2, 0}] = 1;
    expect.terms[BasisKey{Slope{1, 1}, 2, 0}] = 1;
    expect.terms[BasisKey{std::nullopt, 0, 1}] = -1;
    expect.terms[BasisKey{std::nullopt, 0, 0}] = -2;
    bat.check(d == expect, "xyz must expand over squares minus kappa minus 2");
  }

  for (int i = 0; i < 100 * scale; ++i) {
    MultiPoly f = random_poly(rng, kTraceVars, 5, 9, 8);
    bat.check(recombine(multicurve_decompose(f)) == f,
              [&] { return "round trip failed on " + f.str(); });
  }
  bat.res.detail = "3 worked expansions + " + std::to_string(100 * scale) + " round trips";
  return bat.finish();
}

// 4. Valuation axioms for weighted-slope laminations.
CriterionResult criterion_valuation_axioms(uint64_t seed, int scale) {
  Battery bat(4, "valuation axioms", 120'000);
  Rng rng(seed * 1009 + 4);

  std::vector<Lamination> lams;
  auto weighted = [](long p, long q, Rat w) {
    Lamination l;
    l.slope_weights[make_slope(p, q)] = w;
    return l;
  };
  lams.push_back(weighted(0, 1, Rat(1)));
  lams.push_back(weighted(1, 0, Rat(1)));
  lams.push_back(weighted(1, 1, Rat(2)));
  lams.push_back(weighted(2, 1, Rat(Int(1), Int(2))));
  lams.push_back(weighted(-1, 2, Rat(3)));

  for (const Lamination& lam : lams) {
    bat.check(!valuate(lam, MultiPoly(kTraceVars)).has_value(), "v(0) must be -infinity");
    for (int m = 0; m < 3; ++m) {
      // nonzero elements of Z[kappa] valuate to 0
      MultiPoly r = kappa().pow(m) * Int(m + 2) + kappa().pow(m > 0 ? m - 1 : 0);
      auto v = valuate(lam, r);
      bat.check(v.has_value() && *v == Rat(0), "v must vanish on nonzero Z[kappa]");
    }
  }

  auto nonzero_poly = [&rng](int deg) {
    for (;;) {
      MultiPoly f = random_poly(rng, kTraceVars, deg, 9, 6);
      if (!f.is_zero()) return f;
    }
  };

  for (int i = 0; i < 200 * scale; ++i) {
    MultiPoly f = nonzero_poly(4), g = nonzero_poly(4);
    BasisDecomposition df = multicurve_decompose(f);
    BasisDecomposition dg = multicurve_decompose(g);
    BasisDecomposition dfg = multicurve_decompose(f * g);
    BasisDecomposition dsum = multicurve_decompose(f + g);
    for (const Lamination& lam : lams) {
      auto vf = valuate_decomposed(lam, df);
      auto vg = valuate_decomposed(lam, dg);
      auto vfg = valuate_decomposed(lam, dfg);
      bat.check(vf && vg && vfg && *vfg == *vf + *vg, [&] {
        return "multiplicativity failed: f=" + f.str() + " g=" + g.str() +
               " lam=" + lam.str();
      });
      auto vsum = valuate_decomposed(lam, dsum);
      Rat mx = std::max(*vf, *vg);
      bool ultra = !vsum.has_value() || *vsum <= mx;
      if (*vf != *vg) ultra = vsum.has_value() && *vsum == mx;
      bat.check(ultra, [&] {
        return "ultrametric failed: f=" + f.str() + " g=" + g.str() + " lam=" + lam.str();
      });
    }
  }
  bat.res.detail = "5 laminations x " + std::to_string(200 * scale) + " pairs";
  return bat.finish();
}

namespace {

LaurentRep domination_fixture(int which) {
  LaurentPoly one{Int(1)}, zero;
  Mat2<LaurentPoly> shear{one, one, zero, one};
  switch (which) {
    case 0:
      return LaurentRep(kTorus, {{1, {LaurentPoly::t_power(1), zero, zero,
                                      LaurentPoly::t_power(-1)}},
                                 {2, shear}});
    case 1:
      return LaurentRep(kTorus, {{1, {LaurentPoly(Int(2)), one, one, one}}, {2, shear}});
    default:
      return LaurentRep(kTorus, {{1, {LaurentPoly::t_power(2), zero, zero,
                                      LaurentPoly::t_power(-2)}},
                                 {2, shear}});
  }
}

}  // namespace

// 5. Domination by a fitted weighted slope for the shipped Laurent fixtures.
CriterionResult criterion_domination(uint64_t seed, int scale) {
  Battery bat(5, "tropical domination", 60'000);
  Rng rng(seed * 1009 + 5);

  struct Expect {
    bool has_slope;
    Slope s;
    Rat w;
  };
  const Expect expected[3] = {{true, Slope{0, 1}, Rat(1)},
                              {false, Slope{1, 0}, Rat(0)},
                              {true, Slope{0, 1}, Rat(2)}};
  for (int i = 0; i < 3; ++i) {
    LaurentRep rep = domination_fixture(i);
    DominationReport report;
    try {
      report = dominate(rep, 3, 100 * scale, rng);
    } catch (const std::runtime_error& e) {
      bat.check(false, std::string("fixture ") + std::to_string(i) + ": " + e.what());
      continue;
    }
    bat.check(report.fitted, "fixture " + std::to_string(i) + ": no dominating slope fitted");
    if (!report.fitted) continue;
    const auto& sw = report.lamination.slope_weights;
    if (expected[i].has_slope) {
      bat.check(sw.size() == 1 && sw.count(expected[i].s) &&
                    sw.at(expected[i].s) == expected[i].w,
                "fixture " + std::to_string(i) + ": fitted " + report.lamination.str());
    } else {
      bat.check(sw.empty(), "fixture " + std::to_string(i) + ": expected zero lamination");
    }
    bat.check(report.inequality_checked >= 100 * scale - 5,
              "fixture " + std::to_string(i) + ": not enough inequality samples");
  }
  bat.res.detail = "3 fixtures, slope equality at height 3, 100 random inequalities each";
  return bat.finish();
}

namespace {

SphereConfig random_config(Rng& rng, int r, bool normalized = false) {
  SphereConfig c;
  for (int i = 0; i < r; ++i) c.points.push_back(random_sl2_gauss(rng));
  if (normalized) c = normalize(c);
  return c;
}

bool configs_equal(const SphereConfig& a, const SphereConfig& b) {
  return a.points == b.points;
}

}  // namespace

// 6. Braid relations, reflection identities, q preservation.
CriterionResult criterion_braid(uint64_t seed, int scale) {
  Battery bat(6, "sphere braid relations", 60'000);
  Rng rng(seed * 1009 + 6);

  for (int r : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 20 * scale; ++trial) {
      SphereConfig c = random_config(rng, r);
      for (int i = 1; i + 1 <= r - 1; ++i) {
        SphereConfig lhs = braid_act(braid_act(braid_act(c, i), i + 1), i);
        SphereConfig rhs = braid_act(braid_act(braid_act(c, i + 1), i), i + 1);
        bat.check(configs_equal(lhs, rhs),
                  "braid relation failed at r=" + std::to_string(r) +
                      " i=" + std::to_string(i));
      }
      for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 2; j <= r - 1; ++j) {
          SphereConfig lhs = braid_act(braid_act(c, i), j);
          SphereConfig rhs = braid_act(braid_act(c, j), i);
          bat.check(configs_equal(lhs, rhs), "far commutation failed");
        }
    }
  }

  for (int trial = 0; trial < 100 * scale; ++trial) {
    SpherePoint u = random_sl2_gauss(rng), v = random_sl2_gauss(rng);
    SpherePoint w = reflect(u, v);
    bat.check(w.det() == GaussRat(Int(1)), "reflection must preserve q");
    bat.check(reflect(u, w) == v, "reflection must be an involution");
    bat.check(w == u * v.inv_unimodular() * u, "tr(U^-1 V)U - V != U V^-1 U");
  }
  bat.res.detail = "r in {3..6} x 20 configs; 100 reflection identity pairs";
  return bat.finish();
}

// 7. Coxeter invariant: gamma relations and braid invariance of the char poly.
CriterionResult criterion_coxeter(uint64_t seed, int scale) {
  Battery bat(7, "Coxeter invariant", 30'000);
  Rng rng(seed * 1009 + 7);

  const auto& g = gamma_matrices();
  Mat4<GaussRat> id = Mat4<GaussRat>::identity();
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      Mat4<GaussRat> anti = g[k] * g[l] + g[l] * g[k];
      Mat4<GaussRat> expect = (k == l) ? GaussRat(Int(2)) * id : Mat4<GaussRat>{};
      bat.check(anti == expect, "gamma anticommutation failed");
    }

  for (int r : {3, 4, 5}) {
    for (int trial = 0; trial < 20 * scale; ++trial) {
      SphereConfig c = random_config(rng, r);
      auto inv = coxeter_invariant(c);
      for (int i = 1; i <= r - 1; ++i)
        bat.check(coxeter_invariant(braid_act(c, i)) == inv,
                  "char poly changed under braid generator");
    }
  }
  bat.res.detail = "16 gamma pairs; r in {3,4,5} x 20 configs x every generator";
  return bat.finish();
}

// 8. Fan-Whang correspondence: roundtrip, Gram entries, boundary invariance.
CriterionResult criterion_fan_whang(uint64_t seed, int scale) {
  Battery bat(8, "tuple/sphere correspondence", 60'000);
  Rng rng(seed * 1009 + 8);

  for (int r : {3, 4, 5, 6}) {
    int n = (r % 2 == 1) ? 1 : 2;
    for (int trial = 0; trial < 20 * scale; ++trial) {
      std::vector<SpherePoint> rep;
      for (int i = 0; i < r - 1; ++i) rep.push_back(random_sl2_gauss(rng));

      SphereConfig c = rep_to_sphere(rep);
      bat.check(sphere_to_rep(c) == rep, "rep -> sphere -> rep is not the identity");

      for (int j = 0; j + 1 < r; ++j) {
        GaussRat lhs = pairing(c.points[j], c.points[j + 1]);
        bat.check(lhs == rep[j].trace() / GaussRat(Int(2)),
                  "<u_j, u_{j+1}> != tr(A_j)/2");
      }

      std::vector<GaussRat> traces = boundary_monodromy(rep, n);
      for (int i = 1; i <= r - 1; ++i) {
        std::vector<SpherePoint> moved = sphere_to_rep(braid_act(c, i));
        bat.check(boundary_monodromy(moved, n) == traces,
                  "boundary trace moved under conjugated braid generator " +
                      std::to_string(i));
      }

      if (r == 3) {
        // Cross-module oracle: the r=3 boundary trace is the commutator trace
        // of (a, b) = (A_1, A_2^-1) on the once-punctured torus.
        MatrixRep<GaussRat> torus(kTorus, {{1, rep[0]}, {2, rep[1].inv_unimodular()}});
        bat.check(traces[0] == evaluate_trace(torus, parse_word("abAB", 2)),
                  "r=3 boundary trace != commutator trace");
      }
    }
  }
  bat.res.detail = "r in {3..6} x 20 tuples: roundtrip, Gram, boundary invariance";
  return bat.finish();
}

// 9. Central representations on tuples and the sign-preservation criterion.
CriterionResult criterion_central_signs(uint64_t seed, int scale) {
  Battery bat(9, "central sign representations", 30'000);
  Rng rng(seed * 1009 + 9);

  for (int r : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 5 * scale; ++trial) {
      std::vector<SpherePoint> rep;
      std::vector<int> a;
      for (int i = 0; i < r - 1; ++i) {
        rep.push_back(random_sl2_gauss(rng));
        a.push_back(rng.sign());
      }
      std::vector<SpherePoint> signed_rep;
      for (int i = 0; i < r - 1; ++i)
        signed_rep.push_back(GaussRat(Int(a[i])) * rep[i]);

      std::vector<int> pattern = central_to_sphere(a);
      SphereConfig base = rep_to_sphere(rep);
      SphereConfig twisted = rep_to_sphere(signed_rep);
      bool ok = true;
      for (int j = 0; j < r; ++j)
        ok = ok && twisted.points[j] == GaussRat(Int(pattern[j])) * base.points[j];
      bat.check(ok, "suffix-product equivariance failed at r=" + std::to_string(r));
    }
  }

  // r=4, n=2: criterion vs brute force for all 8 sign vectors.
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<int> a{(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1};
    bool predicted = boundary_preserved_by_signs(a, 2);
    for (int trial = 0; trial < 10 * scale; ++trial) {
      std::vector<SpherePoint> rep;
      for (int i = 0; i < 3; ++i) rep.push_back(random_sl2_gauss(rng));
      std::vector<SpherePoint> signed_rep;
      for (int i = 0; i < 3; ++i) signed_rep.push_back(GaussRat(Int(a[i])) * rep[i]);
      bool preserved = boundary_monodromy(rep, 2) == boundary_monodromy(signed_rep, 2);
      bat.check(preserved == predicted, [&] {
        std::ostringstream out;
        out << "criterion mismatch for signs (" << a[0] << "," << a[1] << "," << a[2]
            << "): brute force says " << (preserved ? "preserved" : "changed");
        return out.str();
      });
    }
  }
  bat.res.detail = "equivariance r in {3..6}; r=4 criterion vs brute force, all 8 vectors";
  return bat.finish();
}

// 10. Four-punctured sphere fibers: fit, identity-representation point,
// vanishing oracle, symbolic Vieta preservation.
CriterionResult criterion_fibers(uint64_t seed, int scale) {
  Battery bat(10, "four-punctured sphere fibers", 60'000);
  Rng rng(seed * 1009 + 10);

  std::array<Rat, 4> p2222{Rat(2), Rat(2), Rat(2), Rat(2)};
  FiberCoefficients fc = fiber_coefficients(p2222, rng);
  {
    // Identity representation x = y = z = 2 must lie on the fitted fiber.
    Rat at_id = fiber_eval(fc, Rat(2), Rat(2), Rat(2));
    Rat combo = Rat(2) * (fc.A + fc.B + fc.C) + fc.D;
    std::ostringstream note;
    note << "fitted xyz sign " << (fc.xyz_sign > 0 ? "+1" : "-1")
         << "; 2(A+B+C)+D = " << combo.str();
    bat.res.detail = note.str();
    bat.check(at_id.is_zero(), "identity representation not on the fitted fiber");
  }

  int first_sign = fc.xyz_sign;
  for (int trial = 0; trial < 5 * scale; ++trial) {
    std::array<Rat, 4> p;
    for (auto& v : p) v = Rat(Int(rng.range(-4, 4)), Int(rng.range(1, 2)));
    FiberCoefficients fit = fiber_coefficients(p, rng);
    bat.check(fit.xyz_sign == first_sign, "xyz sign varies across fibers");
    for (int fresh = 0; fresh < 20; ++fresh) {
      auto triple = sample_triple_with_traces(p, rng);
      Rat x = (triple[0] * triple[1]).trace();
      Rat y = (triple[1] * triple[2]).trace();
      Rat z = (triple[0] * triple[2]).trace();
      bat.check(fiber_eval(fit, x, y, z).is_zero(), [&] {
        return "fitted equation does not vanish on a fresh sample (p = " + p[0].str() +
               "," + p[1].str() + "," + p[2].str() + "," + p[3].str() + ")";
      });
    }
  }

  MultiPoly fiber = fiber_symbolic(first_sign);
  std::vector<MultiPoly> fixed;
  for (const char* v : {"A", "B", "C", "D"})
    fixed.push_back(MultiPoly::variable(kFiberVars, v));
  fixed.push_back(fiber);
  for (char axis : {'x', 'y', 'z'}) {
    CoordMap tau = vieta_fiber(axis, first_sign);
    bat.check(tau.apply(fiber) == fiber,
              std::string("tau_") + axis + " does not preserve the fiber polynomial");
    RelAutCheck c = is_relative_automorphism(tau, fixed);
    bat.check(c.ok, [&] { return std::string("tau_") + axis + ": " + c.detail; });
  }
  bat.res.detail += "; 5 random trace vectors x 20 fresh samples; 3 Vieta maps";
  return bat.finish();
}

bool RunReport::ok() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"skein-oracle", "valuation-axioms", "domination", "braid",
          "coxeter",      "signs",            "actions",    "all"};
}

RunReport run_suite(const std::string& name, uint64_t seed, int scale) {
  using Fn = CriterionResult (*)(uint64_t, int);
  static const std::map<std::string, std::vector<Fn>> suites{
      {"skein-oracle", {criterion_skein_oracle, criterion_decomposition}},
      {"valuation-axioms", {criterion_valuation_axioms}},
      {"domination", {criterion_domination}},
      {"braid", {criterion_braid, criterion_fan_whang}},
      {"coxeter", {criterion_coxeter}},
      {"signs", {criterion_central_signs}},
      {"actions", {criterion_relative_battery, criterion_fibers}},
      {"all",
       {criterion_skein_oracle, criterion_relative_battery, criterion_decomposition,
        criterion_valuation_axioms, criterion_domination, criterion_braid,
        criterion_coxeter, criterion_fan_whang, criterion_central_signs,
        criterion_fibers}},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);

  Timer timer;
  RunReport report;
  report.suite = name;
  report.seed = seed;
  report.scale = scale;
  for (Fn fn : it->second) {
    CriterionResult r = fn(seed, scale);
    report.cases += r.cases;
    report.results.push_back(std::move(r));
  }
  report.wall_ms = timer.ms();
  return report;
}

std::string report_json(const RunReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& r : report.results) {
    if (r.pass) continue;
    std::vector<std::string> sorted = r.failures;
    std::sort(sorted.begin(), sorted.end());
    failures.push_back(nlohmann::json{
        {"criterion", r.number}, {"inputs", sorted}, {"name", r.name}});
  }
  nlohmann::json j{{"cases", report.cases},
                   {"failures", failures},
                   {"scale", report.scale},
                   {"seed", report.seed},
                   {"suite", report.suite}};
  return j.dump();
}

std::string report_text(const RunReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name << " ("
        << r.cases << " cases, " << static_cast<long>(r.ms) << " ms)";
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
    for (const auto& f : r.failures) out << "       " << f << "\n";
  }
  out << (report.ok() ? "OK" : "FAILED") << ": suite " << report.suite << ", "
      << report.cases << " cases, seed " << report.seed << ", scale " << report.scale
      << ", " << static_cast<long>(report.wall_ms) << " ms\n";
  return out.str();
}

}  // namespace skeinlab
