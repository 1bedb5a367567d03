#include "skeinlab/lamination.hpp"

#include <sstream>
#include <stdexcept>

#include "skeinlab/skein.hpp"

namespace skeinlab {

void Lamination::validate() const {
  if (slope_weights.size() > 1)
    throw std::invalid_argument(
        "Lamination: distinct slopes intersect; at most one may carry weight");
  for (const auto& [s, w] : slope_weights) {
    if (!slope_is_canonical(s.p, s.q))
      throw std::invalid_argument("Lamination: non-canonical slope");
    if (!(w > Rat(0))) throw std::invalid_argument("Lamination: weights must be positive");
  }
  if (boundary_weight < Rat(0))
    throw std::invalid_argument("Lamination: negative boundary weight");
}

Lamination Lamination::scaled(const Rat& c) const {
  Lamination out = *this;
  for (auto& [s, w] : out.slope_weights) w *= c;
  out.boundary_weight *= c;
  return out;
}

std::string Lamination::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, w] : slope_weights) {
    if (!first) out << ",";
    first = false;
    out << s.str() << ":" << w.str();
  }
  if (!boundary_weight.is_zero()) {
    if (!first) out << ",";
    out << "boundary:" << boundary_weight.str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Lamination parse_lamination(const std::string& s) {
  Lamination lam;
  if (s == "0" || s.empty()) return lam;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto colon = part.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("parse_lamination: expected slope:weight");
    std::string head = part.substr(0, colon);
    Rat w = Rat::parse(part.substr(colon + 1));
    if (head == "boundary")
      lam.boundary_weight = w;
    else
      lam.slope_weights[parse_slope(head)] = w;
  }
  lam.validate();
  return lam;
}

std::optional<Rat> valuate_decomposed(const Lamination& lam,
                                      const BasisDecomposition& dec) {
  lam.validate();
  if (dec.terms.empty()) return std::nullopt;  // -infinity
  Rat best;
  bool first = true;
  for (const auto& [key, c] : dec.terms) {
    (void)c;
    Rat v(0);  // kappa powers and constants valuate to zero
    if (key.slope) {
      for (const auto& [delta, w] : lam.slope_weights)
        v += Rat(Int(key.k)) * w * Rat(Int(intersection(delta, *key.slope)));
    }
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::optional<Rat> valuate(const Lamination& lam, const MultiPoly& f) {
  return valuate_decomposed(lam, multicurve_decompose(f));
}

bool thurston_check(const Lamination& lam, const Word& w) {
  lam.validate();
  if (lam.slope_weights.size() != 1)
    throw std::invalid_argument("thurston_check: single weighted slope required");
  const auto& [delta, weight] = *lam.slope_weights.begin();

  MultiPoly f = trace_reduce(SurfaceSig{1, 1}, w);
  BasisDecomposition dec = multicurve_decompose(f);
  std::optional<Rat> direct = valuate_decomposed(lam, dec);

  Lamination unit;
  unit.slope_weights[delta] = Rat(1);
  std::optional<Rat> normalized = valuate_decomposed(unit, dec);

  if (direct.has_value() != normalized.has_value()) return false;
  if (direct && *direct != weight * *normalized) return false;

  // Simple-word cross check: when tr_w is a slope trace, the valuation is
  // exactly weight * i(delta, slope).
  std::vector<long> sums = exponent_sums(w, 2);
  if (sums[0] != 0 || sums[1] != 0) {
    long g = std::gcd(std::abs(sums[0]), std::abs(sums[1]));
    if (g > 0) {
      Slope cand = make_slope(sums[0], sums[1]);
      if (slope_trace(cand) == f && direct &&
          *direct != weight * Rat(Int(intersection(delta, cand))))
        return false;
    }
  }
  return true;
}

Rat translation_length(const Rat& v) {
  Rat twice = Rat(2) * v;
  return twice > Rat(0) ? twice : Rat(0);
}

bool farey_adjacent(const Slope& s, const Slope& u, const SurfaceSig& sig) {
  if (!(sig == SurfaceSig{1, 1}) && !(sig == SurfaceSig{0, 4}))
    throw std::invalid_argument("farey_adjacent: unsupported surface");
  return intersection(s, u) == 1;
}

LaurentRep::LaurentRep(SurfaceSig s, std::map<int, Mat2<LaurentPoly>> imgs)
    : sig(s), images(std::move(imgs)) {
  sig.validate();
  for (const auto& [g, m] : images) {
    if (g < 1 || g > sig.rank())
      throw std::invalid_argument("LaurentRep: generator out of rank");
    if (!(m.det() == LaurentPoly(Int(1))))
      throw std::invalid_argument("LaurentRep: image must have det 1");
  }
  MatrixRep<LaurentPoly> rep(sig, images);
  for (int i = 1; i <= sig.punctures; ++i) {
    LaurentPoly bt = evaluate_trace(rep, boundary_word(sig, i));
    if (!bt.is_constant())
      throw std::invalid_argument(
          "LaurentRep: boundary trace must be t-constant (relative condition)");
  }
}

std::optional<long> laurent_valuate(const LaurentRep& rep, const MultiPoly& f) {
  if (!(rep.sig == SurfaceSig{1, 1}))
    throw std::invalid_argument("laurent_valuate: once-punctured torus only");
  MatrixRep<LaurentPoly> mrep(rep.sig, rep.images);
  std::map<std::string, LaurentPoly> values;
  values["x"] = evaluate_trace(mrep, Word({1}));
  values["y"] = evaluate_trace(mrep, Word({2}));
  values["z"] = evaluate_trace(mrep, Word({1, 2}));
  return f.evaluate<LaurentPoly>(values).degree();
}

DominationReport dominate(const LaurentRep& rep, long height, int samples, Rng& rng) {
  DominationReport report;
  report.height = height;
  report.samples = samples;

  std::vector<Slope> net = slopes_up_to_height(height);
  std::map<Slope, std::optional<long>> values;
  for (const Slope& s : net) values[s] = laurent_valuate(rep, slope_trace(s));

  // Candidate slopes must valuate to zero on their own trace; weights come
  // from the first slope they intersect.
  std::vector<Lamination> candidates;
  bool all_zero = true;
  for (const auto& [s, v] : values) all_zero &= (v && *v == 0);
  if (all_zero) {
    candidates.push_back(Lamination{});  // zero lamination
  } else {
    for (const Slope& delta : net) {
      if (!values[delta] || *values[delta] != 0) continue;
      for (const Slope& s : net) {
        long i = intersection(delta, s);
        if (i == 0 || !values[s]) continue;
        if (*values[s] <= 0) break;
        Lamination lam;
        lam.slope_weights[delta] = Rat(Int(*values[s]), Int(i));
        candidates.push_back(lam);
        break;
      }
    }
  }

  for (const Lamination& lam : candidates) {
    bool ok = true;
    std::vector<std::string> lines;
    for (const Slope& s : net) {
      std::optional<Rat> vl = valuate(lam, slope_trace(s));
      std::optional<long> v = values[s];
      bool eq = v.has_value() && vl.has_value() && Rat(Int(*v)) == *vl;
      std::ostringstream line;
      line << s.str() << ": v=" << (v ? std::to_string(*v) : "-inf")
           << " v_lam=" << (vl ? vl->str() : "-inf");
      lines.push_back(line.str());
      if (!eq) ok = false;
    }
    if (ok) {
      report.fitted = true;
      report.lamination = lam;
      report.slope_values = std::move(lines);
      break;
    }
  }
  if (!report.fitted) {
    report.note = "no weighted-slope dominator at height " + std::to_string(height);
    return report;
  }

  for (int i = 0; i < samples; ++i) {
    MultiPoly f = random_poly(rng, kTraceVars, 4, 9, 6);
    if (f.is_zero()) continue;
    std::optional<long> v = laurent_valuate(rep, f);
    std::optional<Rat> vl = valuate(report.lamination, f);
    ++report.inequality_checked;
    if (!v) {
      ++report.kernel_skips;  // -infinity <= anything
      continue;
    }
    if (!vl || Rat(Int(*v)) > *vl)
      throw std::runtime_error("dominate: inequality v <= v_lambda violated on " + f.str());
  }
  return report;
}

}  // namespace skeinlab
