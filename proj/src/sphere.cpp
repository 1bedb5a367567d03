#include "skeinlab/sphere.hpp"

#include <stdexcept>

namespace skeinlab {

SpherePoint vec_to_mat(const Vec4& v) {
  GaussRat i = GaussRat::i();
  return {v[0] + i * v[1], v[2] + i * v[3], -v[2] + i * v[3], v[0] - i * v[1]};
}

Vec4 mat_to_vec(const SpherePoint& m) {
  GaussRat half{Rat(Int(1), Int(2))};
  GaussRat mhalf_i = GaussRat(Rat(0), Rat(Int(-1), Int(2)));  // 1/(2i)
  return {half * (m.a + m.d), mhalf_i * (m.a - m.d), half * (m.b - m.c),
          mhalf_i * (m.b + m.c)};
}

GaussRat pairing(const SpherePoint& u, const SpherePoint& v) {
  return (u.inv_unimodular() * v).trace() / GaussRat(Int(2));
}

SpherePoint reflect(const SpherePoint& u, const SpherePoint& v) {
  return (u.inv_unimodular() * v).trace() * u - v;
}

SphereConfig normalize(const SphereConfig& c) {
  if (c.points.empty()) throw std::invalid_argument("normalize: empty configuration");
  SphereConfig out;
  out.normalized = true;
  SpherePoint g = c.points.back().inv_unimodular();
  for (const SpherePoint& u : c.points) out.points.push_back(u * g);
  return out;
}

SphereConfig braid_act(const SphereConfig& c, int i) {
  const int r = static_cast<int>(c.r());
  if (i < 1 || i >= r) throw std::invalid_argument("braid_act: index out of range");
  SphereConfig out = c;
  SpherePoint ui = c.points[i - 1], uj = c.points[i];
  out.points[i - 1] = reflect(ui, uj);
  out.points[i] = ui;
  if (c.normalized && i == r - 1) return normalize(out);
  return out;
}

SphereConfig rep_to_sphere(const std::vector<SpherePoint>& rep) {
  SphereConfig c;
  c.normalized = true;
  SpherePoint suffix = Mat2<GaussRat>::identity();
  c.points.assign(rep.size() + 1, suffix);
  for (int j = static_cast<int>(rep.size()) - 1; j >= 0; --j) {
    suffix = rep[j] * suffix;
    c.points[j] = suffix;
  }
  return c;
}

std::vector<SpherePoint> sphere_to_rep(const SphereConfig& c) {
  SphereConfig n = c.normalized ? c : normalize(c);
  std::vector<SpherePoint> rep;
  for (size_t j = 0; j + 1 < n.points.size(); ++j)
    rep.push_back(n.points[j] * n.points[j + 1].inv_unimodular());
  return rep;
}

namespace {

Mat4<GaussRat> kron(const Mat2<GaussRat>& p, const Mat2<GaussRat>& q) {
  auto pe = [&p](int i, int j) {
    const GaussRat* rows[2][2] = {{&p.a, &p.b}, {&p.c, &p.d}};
    return *rows[i][j];
  };
  auto qe = [&q](int i, int j) {
    const GaussRat* rows[2][2] = {{&q.a, &q.b}, {&q.c, &q.d}};
    return *rows[i][j];
  };
  Mat4<GaussRat> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m.e[i][j] = pe(i / 2, j / 2) * qe(i % 2, j % 2);
  return m;
}

}  // namespace

const std::array<Mat4<GaussRat>, 4>& gamma_matrices() {
  static const std::array<Mat4<GaussRat>, 4> gammas = [] {
    GaussRat zero, one{Int(1)}, i = GaussRat::i();
    Mat2<GaussRat> id = Mat2<GaussRat>::identity();
    Mat2<GaussRat> sx{zero, one, one, zero};
    Mat2<GaussRat> sy{zero, -i, i, zero};
    Mat2<GaussRat> sz{one, zero, zero, -one};
    // gamma_1 = sx x I, gamma_2 = sy x I, gamma_3 = sz x sx, gamma_4 = sz x sy:
    // entries stay in {0, +-1, +-i}, and gamma_k gamma_l + gamma_l gamma_k
    // = 2 delta_kl (asserted in tests).
    return std::array<Mat4<GaussRat>, 4>{kron(sx, id), kron(sy, id), kron(sz, sx),
                                         kron(sz, sy)};
  }();
  return gammas;
}

Mat4<GaussRat> gamma_of(const Vec4& v) {
  const auto& g = gamma_matrices();
  Mat4<GaussRat> acc = v[0] * g[0] + v[1] * g[1] + v[2] * g[2] + v[3] * g[3];
  return acc;
}

Mat4<GaussRat> coxeter_product(const SphereConfig& c) {
  Mat4<GaussRat> acc = Mat4<GaussRat>::identity();
  for (const SpherePoint& u : c.points) acc = acc * gamma_of(mat_to_vec(u));
  return acc;
}

std::array<GaussRat, 5> coxeter_invariant(const SphereConfig& c) {
  return char_poly(coxeter_product(c));
}

std::vector<int> central_to_sphere(const std::vector<int>& a) {
  for (int v : a)
    if (v != 1 && v != -1) throw std::invalid_argument("central_to_sphere: signs must be +-1");
  std::vector<int> b(a.size() + 1, 1);
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) b[j] = a[j] * b[j + 1];
  return b;
}

bool boundary_preserved_by_signs(const std::vector<int>& a, int n) {
  const int r = static_cast<int>(a.size()) + 1;
  if (n != 1 && n != 2)
    throw std::invalid_argument("boundary_preserved_by_signs: n must be 1 or 2");
  if (r % 2 != (n == 1 ? 1 : 0) || r < n + 2)
    throw std::invalid_argument("boundary_preserved_by_signs: parity of r must match n");
  for (int v : a)
    if (v != 1 && v != -1)
      throw std::invalid_argument("boundary_preserved_by_signs: signs must be +-1");
  if (n == 1) return true;
  // Both n = 2 boundary words scale by the odd-index product: the even
  // signs occur twice in (A_1...A_{r-1})^-1 (A_2 A_4 ... A_{r-2}) and cancel.
  int odd = 1;
  for (int i = 1; i <= r - 1; i += 2) odd *= a[i - 1];
  return odd == 1;
}

namespace {

// Columns are the vec forms; returns indices of the first rank-4 subset in
// order, or an empty vector when the span is smaller.
std::vector<int> first_independent_quadruple(const SphereConfig& c) {
  std::vector<Vec4> basis;
  std::vector<int> picked;
  for (size_t idx = 0; idx < c.points.size() && picked.size() < 4; ++idx) {
    Vec4 v = mat_to_vec(c.points[idx]);
    // reduce v against the chosen basis (Gaussian elimination over C(i))
    std::vector<Vec4> echelon = basis;
    echelon.push_back(v);
    // rank check
    size_t rows = echelon.size();
    size_t rank = 0;
    for (size_t col = 0; col < 4 && rank < rows; ++col) {
      size_t pivot = rank;
      while (pivot < rows && echelon[pivot][col].is_zero()) ++pivot;
      if (pivot == rows) continue;
      std::swap(echelon[rank], echelon[pivot]);
      GaussRat inv = GaussRat(Int(1)) / echelon[rank][col];
      for (size_t j = col; j < 4; ++j) echelon[rank][j] = echelon[rank][j] * inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == rank || echelon[i][col].is_zero()) continue;
        GaussRat f = echelon[i][col];
        for (size_t j = col; j < 4; ++j)
          echelon[i][j] = echelon[i][j] - f * echelon[rank][j];
      }
      ++rank;
    }
    if (rank == basis.size() + 1) {
      basis.push_back(v);
      picked.push_back(static_cast<int>(idx));
    }
  }
  return picked.size() == 4 ? picked : std::vector<int>{};
}

GaussRat det4_of_vectors(const SphereConfig& c, const std::vector<int>& idx) {
  Mat4<GaussRat> m;
  for (int col = 0; col < 4; ++col) {
    Vec4 v = mat_to_vec(c.points[idx[col]]);
    for (int row = 0; row < 4; ++row) m.e[row][col] = v[row];
  }
  // 4x4 determinant by cofactor expansion over the exact field.
  auto det3 = [&m](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m.e[r0][c0] * (m.e[r1][c1] * m.e[r2][c2] - m.e[r1][c2] * m.e[r2][c1]) -
           m.e[r0][c1] * (m.e[r1][c0] * m.e[r2][c2] - m.e[r1][c2] * m.e[r2][c0]) +
           m.e[r0][c2] * (m.e[r1][c0] * m.e[r2][c1] - m.e[r1][c1] * m.e[r2][c0]);
  };
  GaussRat det;
  int sign = 1;
  for (int row = 0; row < 4; ++row) {
    int rs[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != row) rs[k++] = i;
    GaussRat term = m.e[row][0] * det3(rs[0], rs[1], rs[2], 1, 2, 3);
    det = (sign > 0) ? det + term : det - term;
    sign = -sign;
  }
  return det;
}

}  // namespace

ModuliEqual moduli_equal(const SphereConfig& c, const SphereConfig& d) {
  if (c.r() != d.r()) throw std::invalid_argument("moduli_equal: size mismatch");
  for (size_t i = 0; i < c.r(); ++i)
    for (size_t j = 0; j < c.r(); ++j)
      if (pairing(c.points[i], c.points[j]) != pairing(d.points[i], d.points[j]))
        return ModuliEqual::NotEqual;
  std::vector<int> qc = first_independent_quadruple(c);
  std::vector<int> qd = first_independent_quadruple(d);
  if (qc.empty() || qd.empty()) return ModuliEqual::Degenerate;
  if (qc != qd) return ModuliEqual::NotEqual;  // equal Grams make this unreachable
  return det4_of_vectors(c, qc) == det4_of_vectors(d, qd) ? ModuliEqual::Equal
                                                          : ModuliEqual::NotEqual;
}

}  // namespace skeinlab
