#include <sstream>

#include "skeinlab/laurent.hpp"
#include "skeinlab/multipoly.hpp"
#include "skeinlab/rat.hpp"

namespace skeinlab {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s), Int(1));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
  }
}

GaussRat GaussRat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("GaussRat::parse: empty string");
  if (s.back() != 'i') return GaussRat(Rat::parse(s));
  std::string body = s.substr(0, s.size() - 1);
  // The separator is the first sign following a digit; numerator signs of the
  // real part sit at position 0 or right after '/'.
  size_t sep = std::string::npos;
  for (size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') && std::isdigit(body[i - 1])) {
      sep = i;
      break;
    }
  }
  if (sep == std::string::npos)
    throw std::invalid_argument("GaussRat::parse: bad value '" + s + "'");
  Rat re = Rat::parse(body.substr(0, sep));
  Rat im = Rat::parse(body.substr(sep + 1));
  if (body[sep] == '-') im = -im;
  return GaussRat(re, im);
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    if (!first) out << (v.sign() < 0 ? " - " : " + ");
    else if (v.sign() < 0) out << "-";
    first = false;
    Rat av = v.abs();
    bool unit = (av == Rat(1));
    if (e == 0 || !unit) out << (av.is_integer() ? av.num().get_str() : av.str());
    if (e != 0) {
      if (!unit) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Int& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Expt(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  Expt e(p.vars_.size(), 0);
  for (size_t i = 0; i < p.vars_.size(); ++i) {
    if (p.vars_[i] == name) {
      e[i] = 1;
      p.add_term(e, Int(1));
      return p;
    }
  }
  throw std::invalid_argument("MultiPoly::variable: unknown variable " + name);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Int MultiPoly::constant_value() const {
  auto it = terms_.find(Expt(vars_.size(), 0));
  return it == terms_.end() ? Int(0) : it->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.rbegin()->first) d += e;  // grlex max carries max degree
  return d;
}

void MultiPoly::add_term(const Expt& e, const Int& c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("MultiPoly::add_term: exponent arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void align(MultiPoly& f, MultiPoly& g) {
  if (f.vars_ == g.vars_) return;
  std::vector<std::string> merged = f.vars_;
  for (const auto& v : g.vars_)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  auto remap = [&merged](const MultiPoly& p) {
    MultiPoly q(merged);
    std::vector<size_t> idx(p.vars_.size());
    for (size_t i = 0; i < p.vars_.size(); ++i)
      idx[i] = std::find(merged.begin(), merged.end(), p.vars_[i]) - merged.begin();
    for (const auto& [e, c] : p.terms_) {
      Expt ne(merged.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[idx[i]] = e[i];
      q.add_term(ne, c);
    }
    return q;
  };
  MultiPoly nf = remap(f), ng = remap(g);
  f = std::move(nf);
  g = std::move(ng);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  MultiPoly rhs = o;
  align(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  MultiPoly rhs = o;
  align(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly lhs = *this, rhs = o;
  align(lhs, rhs);
  MultiPoly r(lhs.vars_);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      Expt e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly x = a, y = b;
  align(x, y);
  return x.terms_ == y.terms_;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly r = MultiPoly::constant(vars_, Int(1));
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

MultiPoly MultiPoly::substituted(const std::map<std::string, MultiPoly>& images) const {
  // Target variable list: own variables not substituted, then image variables.
  std::vector<std::string> target;
  for (const auto& v : vars_)
    if (!images.count(v)) target.push_back(v);
  for (const auto& [v, img] : images) {
    (void)v;
    for (const auto& w : img.vars())
      if (std::find(target.begin(), target.end(), w) == target.end())
        target.push_back(w);
  }
  MultiPoly acc(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = images.find(vars_[i]);
      MultiPoly base = (it != images.end())
                           ? it->second
                           : MultiPoly::variable(target, vars_[i]);
      term *= base.pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ac = ::abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    bool any_var = false;
    for (int x : e) any_var |= (x != 0);
    if (!any_var || ac != 1) out << ac.get_str();
    bool lead = !any_var || ac != 1;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (lead) out << "*";
      lead = true;
      out << vars_[i];
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

}  // namespace skeinlab
