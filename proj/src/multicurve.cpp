#include "skeinlab/multicurve.hpp"

#include <mutex>
#include <stdexcept>

#include "skeinlab/skein.hpp"

namespace skeinlab {

MultiPoly basis_element(const BasisKey& key) {
  MultiPoly p = MultiPoly::constant(kTraceVars, Int(1));
  if (key.slope) p *= slope_trace(*key.slope).pow(key.k);
  if (key.m > 0) p *= kappa().pow(key.m);
  return p;
}

namespace {

// Per-degree reduction table: leading monomial -> (key, expanded element).
// The candidate set of degree <= D is in bijection with the monomials of
// degree <= D via grlex leading terms; build asserts that and decomposition
// fails loudly if a monomial is ever uncovered.
struct BasisTable {
  int deg = -1;
  long height = 0;
  std::map<Expt, std::pair<BasisKey, MultiPoly>, GrlexLess> by_leading;
  std::vector<BasisKey> keys;
};

BasisTable build_table(int deg, long height) {
  BasisTable table;
  table.deg = deg;
  table.height = height;

  std::vector<std::pair<BasisKey, MultiPoly>> elements;
  elements.push_back({BasisKey{std::nullopt, 0, 0}, basis_element({})});
  for (int m = 1; 3 * m <= deg; ++m)
    elements.push_back({BasisKey{std::nullopt, 0, m}, kappa().pow(m)});
  for (const Slope& s : slopes_up_to_height(height)) {
    MultiPoly t = slope_trace(s);
    int d = t.degree();
    if (d <= 0 || d > deg) continue;
    for (int k = 1; k * d <= deg; ++k) {
      MultiPoly tk = t.pow(k);
      for (int m = 0; k * d + 3 * m <= deg; ++m)
        elements.push_back({BasisKey{s, k, m}, m == 0 ? tk : tk * kappa().pow(m)});
    }
  }

  for (auto& [key, poly] : elements) {
    auto [lead, coeff] = poly.leading();
    if (!(coeff == 1 || coeff == -1))
      throw std::runtime_error("multicurve basis: non-unit leading coefficient");
    if (!table.by_leading.emplace(lead, std::make_pair(key, poly)).second)
      throw std::runtime_error("multicurve basis: leading monomial collision");
    table.keys.push_back(key);
  }
  return table;
}

const BasisTable& table_for_degree(int deg) {
  static std::map<int, BasisTable> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(deg);
  if (it == cache.end()) it = cache.emplace(deg, build_table(deg, deg)).first;
  return it->second;
}

MultiPoly aligned_to_xyz(const MultiPoly& f) {
  if (f.vars() == kTraceVars) return f;
  for (const auto& v : f.vars())
    if (v != "x" && v != "y" && v != "z")
      throw std::invalid_argument("multicurve_decompose: polynomial not in (x,y,z)");
  MultiPoly g(kTraceVars), h = f;
  align(g, h);
  return h;
}

std::optional<BasisDecomposition> reduce_against(const BasisTable& table, MultiPoly g) {
  BasisDecomposition dec;
  while (!g.is_zero()) {
    auto [lead, coeff] = g.leading();
    auto it = table.by_leading.find(lead);
    if (it == table.by_leading.end()) return std::nullopt;
    const auto& [key, poly] = it->second;
    Int unit = poly.leading().second;  // +1 or -1
    Int q = coeff * unit;              // exact since |unit| = 1
    dec.terms[key] += q;
    g -= poly * q;
  }
  for (auto it = dec.terms.begin(); it != dec.terms.end();)
    it = it->second == 0 ? dec.terms.erase(it) : std::next(it);
  return dec;
}

}  // namespace

std::vector<BasisKey> basis_candidates(int deg) {
  if (deg < 0) return {};
  return table_for_degree(deg).keys;
}

BasisDecomposition multicurve_decompose(const MultiPoly& f) {
  MultiPoly g = aligned_to_xyz(f);
  if (g.is_zero()) return {};
  int deg = g.degree();
  auto dec = reduce_against(table_for_degree(deg), g);
  if (!dec) {
    // Raise the slope enumeration depth once, then fail loudly.
    BasisTable wider = build_table(deg, deg + 2);
    dec = reduce_against(wider, g);
    if (!dec) throw std::runtime_error("basis search exhausted");
  }
  return *dec;
}

MultiPoly recombine(const BasisDecomposition& dec) {
  MultiPoly acc(kTraceVars);
  for (const auto& [key, c] : dec.terms) acc += basis_element(key) * c;
  return acc;
}

std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> rows,
                                          std::vector<Rat> rhs) {
  if (rows.size() != rhs.size())
    throw std::invalid_argument("rat_solve: shape mismatch");
  size_t m = rows.size(), n = m == 0 ? 0 : rows[0].size();
  std::vector<size_t> pivot_row(n, SIZE_MAX);
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rat inv = Rat(1) / rows[r][c];
    for (size_t j = c; j < n; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (size_t i = r; i < m; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;  // inconsistent
  for (size_t c = 0; c < n; ++c)
    if (pivot_row[c] == SIZE_MAX)
      throw std::runtime_error("rat_solve: solution not unique (rank deficient)");
  std::vector<Rat> sol(n);
  for (size_t c = 0; c < n; ++c) sol[c] = rhs[pivot_row[c]];
  return sol;
}

int rat_rank(std::vector<std::vector<Rat>> rows) {
  size_t m = rows.size(), n = m == 0 ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    Rat inv = Rat(1) / rows[r][c];
    for (size_t j = c; j < n; ++j) rows[r][j] *= inv;
    for (size_t i = r + 1; i < m; ++i) {
      if (rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace skeinlab
