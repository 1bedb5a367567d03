#include "skeinlab/fiber.hpp"

#include <stdexcept>

#include "skeinlab/multicurve.hpp"

namespace skeinlab {

std::array<Mat2<Rat>, 3> sample_triple_with_traces(const std::array<Rat, 4>& p,
                                                   Rng& rng) {
  // C1 generic with trace p1; Q = C1*C2 lower triangular with a free
  // rational eigenvalue so tr(C2) = p2 solves linearly; C3 = Q^-1 * M with
  // M solved linearly from tr(M) = p4 and tr(Q^-1 M) = p3.
  for (int attempt = 0; attempt < 256; ++attempt) {
    Rat a{Int(rng.range(-6, 6))};
    Rat b{Int(rng.nonzero(-6, 6))};
    Rat lam{Int(rng.nonzero(2, 7) * rng.sign())};
    Rat alpha{Int(rng.range(-6, 6))};

    Mat2<Rat> c1{a, b, (a * (p[0] - a) - Rat(1)) / b, p[0] - a};
    Rat mu = ((p[0] - a) * lam + a / lam - p[1]) / b;
    if (mu.is_zero()) continue;
    Mat2<Rat> q{lam, Rat(0), mu, Rat(1) / lam};
    Mat2<Rat> c2 = c1.inv_unimodular() * q;

    Rat beta = (alpha / lam + lam * (p[3] - alpha) - p[2]) / mu;
    if (beta.is_zero()) continue;
    Rat delta = p[3] - alpha;
    Mat2<Rat> mm{alpha, beta, (alpha * delta - Rat(1)) / beta, delta};
    Mat2<Rat> c3 = q.inv_unimodular() * mm;

    std::array<Mat2<Rat>, 3> triple{c1, c2, c3};
    // Exactness is by construction; keep the cheap invariant checks on.
    if (c1.trace() != p[0] || c2.trace() != p[1] || c3.trace() != p[2])
      throw std::logic_error("sample_triple_with_traces: trace drift");
    if ((c1 * c2 * c3).trace() != p[3])
      throw std::logic_error("sample_triple_with_traces: product trace drift");
    return triple;
  }
  throw std::runtime_error("sample_triple_with_traces: no nondegenerate sample");
}

namespace {

struct XYZ {
  Rat x, y, z;
};

XYZ coords(const std::array<Mat2<Rat>, 3>& t) {
  return {(t[0] * t[1]).trace(), (t[1] * t[2]).trace(), (t[0] * t[2]).trace()};
}

Rat quadric(const XYZ& c, int sign) {
  Rat v = c.x * c.x + c.y * c.y + c.z * c.z;
  Rat xyz = c.x * c.y * c.z;
  return sign > 0 ? v + xyz : v - xyz;
}

}  // namespace

FiberCoefficients fiber_coefficients(const std::array<Rat, 4>& p, Rng& rng) {
  std::vector<XYZ> fit_pts;
  for (int i = 0; i < 8; ++i) fit_pts.push_back(coords(sample_triple_with_traces(p, rng)));

  for (int sign : {-1, +1}) {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (const XYZ& c : fit_pts) {
      rows.push_back({c.x, c.y, c.z, Rat(1)});
      rhs.push_back(quadric(c, sign));
    }
    std::optional<std::vector<Rat>> sol;
    try {
      sol = rat_solve(rows, rhs);
    } catch (const std::runtime_error&) {
      continue;  // rank-deficient sample cloud; sign undecidable from it
    }
    if (!sol) continue;
    FiberCoefficients fc{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3], sign};
    bool verified = true;
    for (int i = 0; i < 20 && verified; ++i) {
      XYZ c = coords(sample_triple_with_traces(p, rng));
      verified = fiber_eval(fc, c.x, c.y, c.z).is_zero();
    }
    if (verified) return fc;
  }
  throw std::runtime_error("fiber_coefficients: no consistent fit for either xyz sign");
}

Rat fiber_eval(const FiberCoefficients& fc, const Rat& x, const Rat& y, const Rat& z) {
  Rat v = x * x + y * y + z * z - fc.A * x - fc.B * y - fc.C * z - fc.D;
  Rat xyz = x * y * z;
  return fc.xyz_sign > 0 ? v + xyz : v - xyz;
}

MultiPoly fiber_symbolic(int xyz_sign) {
  auto v = [](const char* name) { return MultiPoly::variable(kFiberVars, name); };
  MultiPoly x = v("x"), y = v("y"), z = v("z");
  MultiPoly f = x * x + y * y + z * z - v("A") * x - v("B") * y - v("C") * z - v("D");
  MultiPoly xyz = x * y * z;
  return xyz_sign > 0 ? f + xyz : f - xyz;
}

}  // namespace skeinlab
