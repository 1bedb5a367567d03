// Multivariate polynomials over the integers with a graded lexicographic
// term order fixed by the variable list. Elements of the character algebra
// live here; coefficients are exact mpz integers.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeinlab/rat.hpp"

namespace skeinlab {

using Expt = std::vector<int>;

// Graded lex: higher total degree wins; ties broken lexicographically with
// earlier variables weighing more.
struct GrlexLess {
  bool operator()(const Expt& a, const Expt& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
  }
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Int& c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Expt, Int, GrlexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_value() const;  // coefficient of the unit monomial
  // Total degree; -1 for the zero polynomial.
  int degree() const;

  void add_term(const Expt& e, const Int& c);

  // Leading term under grlex (largest). Precondition: nonzero.
  std::pair<Expt, Int> leading() const { return *terms_.rbegin(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator*(const Int& c) const;
  MultiPoly operator-() const { return *this * Int(-1); }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int k) const;

  // Replace variables by polynomials; unmapped variables persist.
  MultiPoly substituted(const std::map<std::string, MultiPoly>& images) const;

  // Evaluate in a ring R constructible from Int (Rat, GaussRat, LaurentPoly).
  // All variables with nonzero exponent must be given a value.
  template <class R>
  R evaluate(const std::map<std::string, R>& values) const {
    R acc = R(Int(0));
    for (const auto& [e, c] : terms_) {
      R term = R(c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = values.find(vars_[i]);
        if (it == values.end())
          throw std::invalid_argument("MultiPoly::evaluate: no value for " + vars_[i]);
        for (int k = 0; k < e[i]; ++k) term *= it->second;
      }
      acc += term;
    }
    return acc;
  }

  // Human-readable form, e.g. "x^2*y - 3".
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<Expt, Int, GrlexLess> terms_;

  friend void align(MultiPoly& f, MultiPoly& g);
};

// Rewrite both polynomials over the union of their variable lists
// (f's order first, then g's new variables).
void align(MultiPoly& f, MultiPoly& g);

}  // namespace skeinlab
