// Univariate Laurent polynomials in t over Rat. The zero polynomial is the
// empty map; no zero coefficients are ever stored.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "skeinlab/rat.hpp"

namespace skeinlab {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long n) { set(0, Rat(n)); }        // NOLINT
  LaurentPoly(const Int& n) { set(0, Rat(n)); }  // NOLINT
  LaurentPoly(const Rat& r) { set(0, r); }       // NOLINT

  static LaurentPoly t_power(long e, const Rat& coeff = Rat(1)) {
    LaurentPoly p;
    p.set(e, coeff);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
  }

  // Max exponent with nonzero coefficient; nullopt stands for -infinity.
  std::optional<long> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.rbegin()->first;
  }
  std::optional<long> low_degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
  }

  Rat coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
  }
  const std::map<long, Rat>& coeffs() const { return c_; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) set(e, coeff(e) + v);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) set(e, coeff(e) - v);
    return *this;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
      for (const auto& [e2, v2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.set(e, -v);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  void set(long e, const Rat& v) {
    if (v.is_zero())
      c_.erase(e);
    else
      c_[e] = v;
  }

  std::map<long, Rat> c_;
};

}  // namespace skeinlab
