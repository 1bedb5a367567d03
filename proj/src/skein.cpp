#include "skeinlab/skein.hpp"

#include <mutex>

namespace skeinlab {

namespace {

MultiPoly xyz_constant(long c) { return MultiPoly::constant(kTraceVars, Int(c)); }

MultiPoly gen_trace(int g) {
  return MultiPoly::variable(kTraceVars, g == 1 ? "x" : "y");
}

std::vector<int> rotate_to_end(const std::vector<int>& l, size_t pos) {
  // Rotation putting index pos last; traces are invariant under rotation.
  std::vector<int> r(l.begin() + pos + 1, l.end());
  r.insert(r.end(), l.begin(), l.begin() + pos + 1);
  return r;
}

MultiPoly reduce_cyclic(const std::vector<int>& letters);

MultiPoly reduce_inner(const std::vector<int>& l) {
  const size_t n = l.size();
  if (n == 0) return xyz_constant(2);
  if (n == 1) return gen_trace(std::abs(l[0]));

  // Remove a negative letter: tr(u g^-1) = tr(u) tr(g) - tr(u g). The first
  // term is shorter, the second has one negative letter fewer.
  for (size_t i = 0; i < n; ++i) {
    if (l[i] < 0) {
      std::vector<int> rot = rotate_to_end(l, i);
      int g = -rot.back();
      std::vector<int> u(rot.begin(), rot.end() - 1);
      std::vector<int> ug = u;
      ug.push_back(g);
      return reduce_cyclic(u) * gen_trace(g) - reduce_cyclic(ug);
    }
  }

  // Positive word: collapse a cyclically adjacent square,
  // tr(u g g) = tr(u g) tr(g) - tr(u).
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    if (l[i] == l[j]) {
      std::vector<int> rot = rotate_to_end(l, j);
      int g = rot.back();
      std::vector<int> ug(rot.begin(), rot.end() - 1);
      std::vector<int> u(ug.begin(), ug.end() - 1);
      return reduce_cyclic(ug) * gen_trace(g) - reduce_cyclic(u);
    }
  }

  // Cyclically square-free positive word over two generators: (g1 g2)^k.
  // tr(P^k) = tr(P) tr(P^{k-1}) - tr(P^{k-2}).
  size_t k = n / 2;
  if (k == 1) return MultiPoly::variable(kTraceVars, "z");
  std::vector<int> p1, p2;
  for (size_t i = 0; i + 2 < n; ++i) p1.push_back(l[i]);
  for (size_t i = 0; i + 4 < n; ++i) p2.push_back(l[i]);
  return MultiPoly::variable(kTraceVars, "z") * reduce_cyclic(p1) - reduce_cyclic(p2);
}

std::map<std::vector<int>, MultiPoly>& trace_memo() {
  static std::map<std::vector<int>, MultiPoly> memo;
  return memo;
}
std::mutex trace_mutex;

MultiPoly reduce_cyclic(const std::vector<int>& letters) {
  Word w = cyclically_reduce(free_reduce(letters));
  std::vector<int> key = cyclic_inversion_key(w);
  {
    std::lock_guard<std::mutex> lock(trace_mutex);
    auto it = trace_memo().find(key);
    if (it != trace_memo().end()) return it->second;
  }
  MultiPoly result = reduce_inner(key);
  std::lock_guard<std::mutex> lock(trace_mutex);
  trace_memo().emplace(key, result);
  return result;
}

}  // namespace

MultiPoly trace_reduce(const SurfaceSig& sig, const Word& w) {
  sig.validate();
  if (sig.rank() != 2)
    throw std::invalid_argument("trace_reduce: rank-2 surfaces only");
  for (int l : w.letters())
    if (std::abs(l) > 2)
      throw std::invalid_argument("trace_reduce: letter out of rank 2");
  return reduce_cyclic(w.letters());
}

MultiPoly slope_trace(const Slope& s) {
  static std::map<Slope, MultiPoly> memo;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
  }
  MultiPoly t = trace_reduce(SurfaceSig{1, 1}, slope_word(s));
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(s, t);
  return t;
}

const MultiPoly& kappa() {
  static const MultiPoly k = [] {
    return trace_reduce(SurfaceSig{1, 1}, boundary_word(SurfaceSig{1, 1}, 1));
  }();
  return k;
}

}  // namespace skeinlab
