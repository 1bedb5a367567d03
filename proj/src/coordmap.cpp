#include "skeinlab/coordmap.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "skeinlab/fiber.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {

CoordMap::CoordMap(std::vector<std::string> vars, std::vector<MultiPoly> fwd,
                   std::vector<MultiPoly> inv)
    : vars_(std::move(vars)), fwd_(std::move(fwd)), inv_(std::move(inv)) {
  if (fwd_.size() != vars_.size() || inv_.size() != vars_.size())
    throw std::invalid_argument("CoordMap: image count mismatch");
}

const MultiPoly& CoordMap::image(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw std::invalid_argument("CoordMap: unknown variable " + var);
  return fwd_[it - vars_.begin()];
}

const MultiPoly& CoordMap::inverse_image(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw std::invalid_argument("CoordMap: unknown variable " + var);
  return inv_[it - vars_.begin()];
}

std::map<std::string, MultiPoly> CoordMap::as_map(
    const std::vector<MultiPoly>& images) const {
  std::map<std::string, MultiPoly> m;
  for (size_t i = 0; i < vars_.size(); ++i) m.emplace(vars_[i], images[i]);
  return m;
}

MultiPoly CoordMap::apply(const MultiPoly& f) const { return f.substituted(as_map(fwd_)); }

MultiPoly CoordMap::apply_inverse(const MultiPoly& f) const {
  return f.substituted(as_map(inv_));
}

CoordMap compose(const CoordMap& a, const CoordMap& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("compose: coordinate mismatch");
  std::vector<MultiPoly> fwd, inv;
  for (size_t i = 0; i < a.vars_.size(); ++i) {
    fwd.push_back(a.apply(b.fwd_[i]));
    inv.push_back(b.apply_inverse(a.inv_[i]));
  }
  return CoordMap(a.vars_, std::move(fwd), std::move(inv));
}

bool operator==(const CoordMap& a, const CoordMap& b) {
  return a.vars_ == b.vars_ && a.fwd_ == b.fwd_ && a.inv_ == b.inv_;
}

std::string CoordMap::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) out << ", ";
    out << vars_[i] << " -> " << fwd_[i].str();
  }
  return out.str();
}

CoordMap identity_map(const std::vector<std::string>& vars) {
  std::vector<MultiPoly> images;
  for (const auto& v : vars) images.push_back(MultiPoly::variable(vars, v));
  return CoordMap(vars, images, images);
}

CoordSystem coord_system(const SurfaceSig& sig) {
  if (sig == SurfaceSig{1, 1}) {
    return {sig, kTraceVars, {Word({1}), Word({2}), Word({1, 2})}};
  }
  if (sig == SurfaceSig{0, 4}) {
    return {sig,
            {"x", "y", "z", "p1", "p2", "p3", "p4"},
            {Word({1, 2}), Word({2, 3}), Word({1, 3}), Word({1}), Word({2}),
             Word({3}), boundary_word(sig, 4)}};
  }
  throw std::invalid_argument("coord_system: unsupported surface");
}

std::vector<MultiPoly> boundary_polys(const SurfaceSig& sig) {
  if (sig == SurfaceSig{1, 1}) return {kappa()};
  if (sig == SurfaceSig{0, 4}) {
    CoordSystem cs = coord_system(sig);
    std::vector<MultiPoly> out;
    for (const char* p : {"p1", "p2", "p3", "p4"})
      out.push_back(MultiPoly::variable(cs.vars, p));
    return out;
  }
  throw std::invalid_argument("boundary_polys: unsupported surface");
}

namespace {

MultiPoly xyz_var(const char* n) { return MultiPoly::variable(kTraceVars, n); }

CoordMap from_xyz_images(MultiPoly fx, MultiPoly fy, MultiPoly fz, MultiPoly ix,
                         MultiPoly iy, MultiPoly iz) {
  return CoordMap(kTraceVars, {std::move(fx), std::move(fy), std::move(fz)},
                  {std::move(ix), std::move(iy), std::move(iz)});
}

}  // namespace

CoordMap mcg_generator(char name) {
  MultiPoly x = xyz_var("x"), y = xyz_var("y"), z = xyz_var("z");
  switch (name) {
    case 'R':
      return from_xyz_images(y, x, z, y, x, z);
    case 'T':
      // (x,y,z) -> (x, xy-z, y); inverse (x,y,z) -> (x, z, xz-y)
      return from_xyz_images(x, x * y - z, y, x, z, x * z - y);
    case 'U':
      return from_xyz_images(x, y, x * y - z, x, y, x * y - z);
    default:
      throw std::invalid_argument(std::string("mcg_generator: unknown name '") + name + "'");
  }
}

CoordMap vieta(char axis) {
  MultiPoly x = xyz_var("x"), y = xyz_var("y"), z = xyz_var("z");
  switch (axis) {
    case 'x':
      return from_xyz_images(y * z - x, y, z, y * z - x, y, z);
    case 'y':
      return from_xyz_images(x, x * z - y, z, x, x * z - y, z);
    case 'z':
      return from_xyz_images(x, y, x * y - z, x, y, x * y - z);
    default:
      throw std::invalid_argument("vieta: axis must be x, y or z");
  }
}

CoordMap vieta_fiber(char axis, int xyz_sign) {
  auto v = [](const char* n) { return MultiPoly::variable(kFiberVars, n); };
  std::vector<MultiPoly> images;
  for (const auto& var : kFiberVars) images.push_back(MultiPoly::variable(kFiberVars, var.c_str()));
  MultiPoly s = MultiPoly::constant(kFiberVars, Int(xyz_sign));
  size_t idx;
  MultiPoly other;
  switch (axis) {
    case 'x':
      idx = 0;
      other = v("A") - s * v("y") * v("z") - v("x");
      break;
    case 'y':
      idx = 1;
      other = v("B") - s * v("x") * v("z") - v("y");
      break;
    case 'z':
      idx = 2;
      other = v("C") - s * v("x") * v("y") - v("z");
      break;
    default:
      throw std::invalid_argument("vieta_fiber: axis must be x, y or z");
  }
  images[idx] = other;
  return CoordMap(kFiberVars, images, images);
}

CoordMap coordinate_permutation(const std::array<int, 3>& perm) {
  std::vector<MultiPoly> fwd(3), inv(3);
  for (int i = 0; i < 3; ++i) {
    fwd[i] = xyz_var(kTraceVars[perm[i]].c_str());
    inv[perm[i]] = xyz_var(kTraceVars[i].c_str());
  }
  return CoordMap(kTraceVars, fwd, inv);
}

CoordMap coordinate_signs(const std::vector<std::string>& vars,
                          const std::vector<int>& signs) {
  if (vars.size() != signs.size())
    throw std::invalid_argument("coordinate_signs: arity mismatch");
  std::vector<MultiPoly> images;
  for (size_t i = 0; i < vars.size(); ++i)
    images.push_back(MultiPoly::variable(vars, vars[i]) * Int(signs[i]));
  return CoordMap(vars, images, images);
}

int SignVector::of_word(const Word& w) const {
  int s = 1;
  for (int l : w.letters()) {
    auto it = values.find(std::abs(l));
    if (it == values.end()) throw std::invalid_argument("SignVector: generator unset");
    s *= it->second;
  }
  return s;
}

std::string SignVector::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, v] : values) {
    if (!first) out << ",";
    first = false;
    out << static_cast<char>('a' + g - 1) << ":" << (v > 0 ? "+1" : "-1");
  }
  return out.str();
}

CoordMap sign_action(const SurfaceSig& sig, const SignVector& eps) {
  CoordSystem cs = coord_system(sig);
  for (int g = 1; g <= sig.rank(); ++g)
    if (!eps.values.count(g))
      throw std::invalid_argument("sign_action: sign vector must cover all generators");
  std::vector<int> signs;
  for (const Word& w : cs.words) signs.push_back(eps.of_word(w));
  return coordinate_signs(cs.vars, signs);
}

RelAutCheck is_relative_automorphism(const CoordMap& m,
                                     const std::vector<MultiPoly>& boundary) {
  for (const auto& var : m.vars()) {
    MultiPoly v = MultiPoly::variable(m.vars(), var);
    if (m.apply(m.inverse_image(var)) != v)
      return {false, "inverse candidate fails on " + var + " (m o m^-1)"};
    if (m.apply_inverse(m.image(var)) != v)
      return {false, "inverse candidate fails on " + var + " (m^-1 o m)"};
  }
  for (size_t i = 0; i < boundary.size(); ++i) {
    if (m.apply(boundary[i]) != boundary[i])
      return {false, "boundary trace " + std::to_string(i + 1) + " not fixed"};
  }
  return {true, ""};
}

SignVector conjugate_sign(const CoordMap& g, const SignVector& eps,
                          const SurfaceSig& sig) {
  CoordMap conj = compose(compose(g, sign_action(sig, eps)), g.inverse_map());
  int rank = sig.rank();
  for (uint32_t bits = 0; bits < (1u << rank); ++bits) {
    SignVector cand;
    for (int i = 0; i < rank; ++i)
      cand.values[i + 1] = (bits >> i) & 1 ? -1 : 1;
    CoordMap sc = sign_action(sig, cand);
    bool match = true;
    for (const auto& var : conj.vars())
      if (conj.image(var) != sc.image(var)) {
        match = false;
        break;
      }
    if (match) return cand;
  }
  throw std::runtime_error("not a sign action");
}

CoordMap induced_by_word_images(const SurfaceSig& sig,
                                const std::map<int, Word>& psi,
                                const std::map<int, Word>& psi_inverse) {
  CoordSystem cs = coord_system(sig);
  if (sig.rank() != 2)
    throw std::invalid_argument("induced_by_word_images: rank-2 surfaces only");
  std::vector<MultiPoly> fwd, inv;
  for (const Word& w : cs.words) {
    fwd.push_back(trace_reduce(sig, substituted_word(w, psi)));
    inv.push_back(trace_reduce(sig, substituted_word(w, psi_inverse)));
  }
  return CoordMap(cs.vars, fwd, inv);
}

std::optional<Slope> slope_image(const CoordMap& g, const Slope& s, long search_height) {
  MultiPoly img = g.apply(slope_trace(s));
  for (const Slope& u : slopes_up_to_height(search_height))
    if (slope_trace(u) == img) return u;
  return std::nullopt;
}

}  // namespace skeinlab
