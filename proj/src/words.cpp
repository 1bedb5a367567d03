#include "skeinlab/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skeinlab {

void SurfaceSig::validate() const {
  if (punctures < 1 || genus < 0 || 2 * genus + punctures < 3)
    throw std::invalid_argument("SurfaceSig: need n >= 1 and chi < 0");
}

Word::Word(std::vector<int> reduced_letters) : letters_(std::move(reduced_letters)) {
  for (size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] == -letters_[i + 1])
      throw std::invalid_argument("Word: letters not freely reduced");
  for (int l : letters_)
    if (l == 0) throw std::invalid_argument("Word: zero letter");
}

Word free_reduce(const std::vector<int>& raw) {
  Word w;
  for (int l : raw) {
    if (l == 0) throw std::invalid_argument("free_reduce: zero letter");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return Word(std::move(inv));
}

Word Word::operator*(const Word& o) const {
  std::vector<int> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return free_reduce(cat);
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

std::string Word::str() const {
  std::string s;
  for (int l : letters_) {
    int g = std::abs(l);
    if (g > 26) throw std::runtime_error("Word::str: rank beyond letters");
    s += static_cast<char>((l > 0 ? 'a' : 'A') + g - 1);
  }
  return s;
}

Word parse_word(const std::string& s, int rank) {
  std::vector<int> letters;
  for (char ch : s) {
    int l;
    if (ch >= 'a' && ch <= 'z')
      l = ch - 'a' + 1;
    else if (ch >= 'A' && ch <= 'Z')
      l = -(ch - 'A' + 1);
    else
      throw std::invalid_argument(std::string("parse_word: bad character '") + ch + "'");
    if (std::abs(l) > rank)
      throw std::invalid_argument(std::string("parse_word: generator '") + ch +
                                  "' out of rank " + std::to_string(rank));
    letters.push_back(l);
  }
  return free_reduce(letters);
}

Word cyclically_reduce(const Word& w) {
  std::vector<int> l = w.letters();
  size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<int>(l.begin() + lo, l.begin() + hi));
}

std::vector<int> cyclic_inversion_key(const Word& w) {
  Word cr = cyclically_reduce(w);
  if (cr.empty()) return {};
  auto neg_count = [](const std::vector<int>& v) {
    int c = 0;
    for (int l : v) c += (l < 0);
    return c;
  };
  auto best_rotation = [](const std::vector<int>& v) {
    std::vector<int> best;
    for (size_t r = 0; r < v.size(); ++r) {
      std::vector<int> rot(v.begin() + r, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + r);
      if (best.empty() || rot < best) best = std::move(rot);
    }
    return best;
  };
  // Prefer the representative with fewer inverse letters so that the
  // rewriting measure (length, negatives) never grows under canonicalization.
  std::vector<int> fwd = cr.letters(), inv = cr.inverse().letters();
  int nf = neg_count(fwd), ni = neg_count(inv);
  if (nf != ni) return best_rotation(nf < ni ? fwd : inv);
  return std::min(best_rotation(fwd), best_rotation(inv));
}

std::vector<long> exponent_sums(const Word& w, int rank) {
  std::vector<long> sums(rank, 0);
  for (int l : w.letters()) {
    int g = std::abs(l);
    if (g > rank) throw std::invalid_argument("exponent_sums: letter out of rank");
    sums[g - 1] += l > 0 ? 1 : -1;
  }
  return sums;
}

Word substituted_word(const Word& w, const std::map<int, Word>& images) {
  Word r;
  for (int l : w.letters()) {
    auto it = images.find(std::abs(l));
    if (it == images.end())
      throw std::invalid_argument("substituted_word: no image for generator");
    r = r * (l > 0 ? it->second : it->second.inverse());
  }
  return r;
}

Word boundary_word(const SurfaceSig& sig, int index) {
  sig.validate();
  if (index < 1 || index > sig.punctures)
    throw std::invalid_argument("boundary_word: index out of range");
  if (index < sig.punctures) return Word({2 * sig.genus + index});
  Word w;
  for (int g = 1; g <= sig.genus; ++g) {
    Word a({2 * g - 1}), b({2 * g});
    w = w * a * b * a.inverse() * b.inverse();
  }
  for (int i = 1; i < sig.punctures; ++i) w = w * Word({2 * sig.genus + i});
  return w.inverse();
}

bool slope_is_canonical(long p, long q) {
  if (p == 0 && q == 0) return false;
  if (q < 0) return false;
  if (q == 0) return p == 1;
  return std::gcd(std::abs(p), q) == 1;
}

Slope make_slope(long p, long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("make_slope: (0,0)");
  long g = std::gcd(std::abs(p), std::abs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

Slope parse_slope(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("parse_slope: expected p/q");
  long p = std::stol(s.substr(0, slash));
  long q = std::stol(s.substr(slash + 1));
  if (!slope_is_canonical(p, q))
    throw std::invalid_argument("parse_slope: non-canonical slope " + s);
  return Slope{p, q};
}

Word slope_word(const Slope& s) {
  if (!slope_is_canonical(s.p, s.q))
    throw std::invalid_argument("slope_word: non-canonical slope");
  if (s.p < 0) {
    // Mirror tree: substitute a^-1 for a in the word of (-p, q).
    Word m = slope_word(Slope{-s.p, s.q});
    std::vector<int> letters;
    for (int l : m.letters()) letters.push_back(std::abs(l) == 1 ? -l : l);
    return free_reduce(letters);
  }
  if (s.q == 0) return Word({1});
  if (s.p == 0) return Word({2});
  // Stern-Brocot descent between L=(0,1) and R=(1,0); the mediant word is
  // W(R) * W(L).
  long lp = 0, lq = 1, rp = 1, rq = 0;
  Word wl({2}), wr({1});
  for (;;) {
    long mp = lp + rp, mq = lq + rq;
    Word wm = wr * wl;
    if (mp == s.p && mq == s.q) return wm;
    // target p/q vs mediant mp/mq
    if (s.p * mq - s.q * mp > 0) {
      lp = mp;
      lq = mq;
      wl = wm;
    } else {
      rp = mp;
      rq = mq;
      wr = wm;
    }
  }
}

long intersection(const Slope& a, const Slope& b) {
  return std::abs(a.p * b.q - a.q * b.p);
}

std::vector<Slope> slopes_up_to_height(long height) {
  std::vector<Slope> out;
  out.push_back(Slope{1, 0});
  for (long q = 1; q <= height; ++q)
    for (long p = -height; p <= height; ++p)
      if (slope_is_canonical(p, q)) out.push_back(Slope{p, q});
  return out;
}

}  // namespace skeinlab
