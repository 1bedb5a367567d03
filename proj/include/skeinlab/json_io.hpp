// Canonical JSON encodings of the exact types. Bit-exact form: objects are
// emitted with alphabetically sorted keys and no whitespace; polynomial
// terms are listed leading-first (descending grlex).
#pragma once

#include <variant>

#include <json.hpp>

#include "skeinlab/lamination.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/multicurve.hpp"
#include "skeinlab/multipoly.hpp"
#include "skeinlab/rat.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/sphere.hpp"

namespace skeinlab {

using json = nlohmann::json;

json to_json(const Rat& r);               // "p/q"
json to_json(const GaussRat& g);          // "p/q+r/si"
json to_json(const LaurentPoly& p);       // {"t":{"<exp>":"p/q"}}
json to_json(const MultiPoly& p);         // {"terms":[{"c":int,"e":[...]}],"vars":[...]}
json to_json(const BasisDecomposition& d);
template <class R>
json to_json(const Mat2<R>& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}),
                      json::array({to_json(m.c), to_json(m.d)})});
}
json to_json(const SphereConfig& c);

Rat rat_from_json(const json& j);
GaussRat gauss_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
MultiPoly multipoly_from_json(const json& j);
template <class R, class FromJson>
Mat2<R> mat2_from_json(const json& j, FromJson from) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("mat2: expected 2x2 array");
  return {from(j[0][0]), from(j[0][1]), from(j[1][0]), from(j[1][1])};
}
SphereConfig sphere_config_from_json(const json& j);

// Matrix representations carry their ring:
// {"images":{"a":[[..]],...},"ring":"rat"|"gauss"|"laurent","surface":"g,n"}.
using AnyRep =
    std::variant<MatrixRep<Rat>, MatrixRep<GaussRat>, MatrixRep<LaurentPoly>>;
AnyRep rep_from_json(const json& j);
LaurentRep laurent_rep_from_json(const json& j);

SurfaceSig parse_surface(const std::string& s);  // "g,n"

std::string dump_canonical(const json& j);

}  // namespace skeinlab
