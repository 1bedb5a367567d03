#include "skeinlab/json_io.hpp"

namespace skeinlab {

json to_json(const Rat& r) { return r.str(); }
json to_json(const GaussRat& g) { return g.str(); }

json to_json(const LaurentPoly& p) {
  json t = json::object();
  for (const auto& [e, v] : p.coeffs()) t[std::to_string(e)] = v.str();
  return json{{"t", t}};
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  const auto& m = p.terms();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (!it->second.fits_slong_p())
      throw std::runtime_error("to_json: coefficient exceeds the integer field");
    terms.push_back(json{{"c", it->second.get_si()}, {"e", it->first}});
  }
  return json{{"terms", terms}, {"vars", p.vars()}};
}

json to_json(const BasisDecomposition& d) {
  json terms = json::array();
  for (const auto& [key, c] : d.terms) {
    if (!c.fits_slong_p())
      throw std::runtime_error("to_json: coefficient exceeds the integer field");
    json entry{{"k", key.k}, {"m", key.m}, {"c", c.get_si()}};
    entry["slope"] = key.slope ? json(key.slope->str()) : json(nullptr);
    terms.push_back(entry);
  }
  return json{{"terms", terms}};
}

json to_json(const SphereConfig& c) {
  json pts = json::array();
  for (const auto& u : c.points) pts.push_back(to_json(u));
  return json{{"points", pts}, {"r", c.points.size()}};
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rat: expected string");
  return Rat::parse(j.get<std::string>());
}

GaussRat gauss_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("gauss: expected string");
  return GaussRat::parse(j.get<std::string>());
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("t"))
    throw std::invalid_argument("laurent: expected {\"t\":{...}}");
  LaurentPoly p;
  for (const auto& [e, v] : j.at("t").items())
    p += LaurentPoly::t_power(std::stol(e), Rat::parse(v.get<std::string>()));
  return p;
}

MultiPoly multipoly_from_json(const json& j) {
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& term : j.at("terms"))
    p.add_term(term.at("e").get<Expt>(), Int(term.at("c").get<long>()));
  return p;
}

SphereConfig sphere_config_from_json(const json& j) {
  SphereConfig c;
  for (const auto& pt : j.at("points"))
    c.points.push_back(mat2_from_json<GaussRat>(pt, gauss_from_json));
  if (j.contains("r") && j.at("r").get<size_t>() != c.points.size())
    throw std::invalid_argument("sphere config: r does not match points");
  if (!c.points.empty() && c.points.back() == Mat2<GaussRat>::identity())
    c.normalized = true;
  for (const auto& u : c.points)
    if (!(u.det() == GaussRat(Int(1))))
      throw std::invalid_argument("sphere config: points must have det 1");
  return c;
}

SurfaceSig parse_surface(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("surface: expected \"g,n\"");
  SurfaceSig sig{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  sig.validate();
  return sig;
}

namespace {

template <class R, class FromJson>
MatrixRep<R> rep_from_images(const json& j, SurfaceSig sig, FromJson from) {
  std::map<int, Mat2<R>> images;
  for (const auto& [name, mat] : j.at("images").items()) {
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
      throw std::invalid_argument("rep: generator names are single lowercase letters");
    images.emplace(name[0] - 'a' + 1, mat2_from_json<R>(mat, from));
  }
  return MatrixRep<R>(sig, std::move(images));
}

}  // namespace

AnyRep rep_from_json(const json& j) {
  SurfaceSig sig = parse_surface(j.at("surface").get<std::string>());
  std::string ring = j.value("ring", "rat");
  if (ring == "rat") return rep_from_images<Rat>(j, sig, rat_from_json);
  if (ring == "gauss") return rep_from_images<GaussRat>(j, sig, gauss_from_json);
  if (ring == "laurent") return rep_from_images<LaurentPoly>(j, sig, laurent_from_json);
  throw std::invalid_argument("rep: ring must be rat, gauss or laurent");
}

LaurentRep laurent_rep_from_json(const json& j) {
  SurfaceSig sig = parse_surface(j.at("surface").get<std::string>());
  std::map<int, Mat2<LaurentPoly>> images;
  for (const auto& [name, mat] : j.at("images").items())
    images.emplace(name[0] - 'a' + 1, mat2_from_json<LaurentPoly>(mat, laurent_from_json));
  return LaurentRep(sig, std::move(images));
}

std::string dump_canonical(const json& j) { return j.dump(); }

}  // namespace skeinlab
