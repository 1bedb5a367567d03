// Exact rational arithmetic over GMP. Values are always reduced with a
// positive denominator; every operation returns canonical form.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skeinlab {

using Int = mpz_class;

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}                 // NOLINT: implicit by design
  Rat(const Int& n) : v_(n) {}           // NOLINT
  Rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { Rat r; r.v_ = -v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }

  // Canonical string "p/q" (always with the slash, q >= 1).
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  // Accepts "p" and "p/q".
  static Rat parse(const std::string& s);

 private:
  mpq_class v_;
};

// Gaussian rational a + bi, componentwise canonical.
struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(long n) : re(n) {}             // NOLINT
  GaussRat(const Int& n) : re(n) {}       // NOLINT
  GaussRat(Rat r) : re(std::move(r)) {}   // NOLINT
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussRat conj() const { return GaussRat(re, -im); }
  Rat norm() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::invalid_argument("GaussRat: division by zero");
    Rat n = o.norm();
    GaussRat c = o.conj();
    *this *= c;
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re, -im); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // Canonical string "p/q+r/si" or "p/q-r/si" (|im| after the sign).
  std::string str() const {
    return re.str() + (im.sign() < 0 ? "-" : "+") + im.abs().str() + "i";
  }
  static GaussRat parse(const std::string& s);
};

}  // namespace skeinlab
