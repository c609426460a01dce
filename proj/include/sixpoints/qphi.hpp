#ifndef SIXPOINTS_QPHI_HPP
#define SIXPOINTS_QPHI_HPP

#include <string>

#include "sixpoints/rat.hpp"

namespace sixpoints {

// Element a + b*phi of Q(phi), phi^2 = phi + 1 (phi the golden section).
// Galois conjugation sends phi to 1 - phi.
class QPhi {
public:
  QPhi() = default;
  QPhi(Rat a, Rat b = Rat(0)) : a_(std::move(a)), b_(std::move(b)) {}
  QPhi(long a) : a_(a) {}

  static QPhi phi() { return QPhi(Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QPhi conj() const { return QPhi(a_ + b_, -b_); }

  QPhi operator-() const { return QPhi(-a_, -b_); }
  QPhi& operator+=(const QPhi& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QPhi& operator-=(const QPhi& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QPhi& operator*=(const QPhi& o) {
    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
    Rat bd = b_ * o.b_;
    Rat a = a_ * o.a_ + bd;
    Rat b = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  friend QPhi operator+(QPhi x, const QPhi& y) { x += y; return x; }
  friend QPhi operator-(QPhi x, const QPhi& y) { x -= y; return x; }
  friend QPhi operator*(QPhi x, const QPhi& y) { x *= y; return x; }

  friend bool operator==(const QPhi& x, const QPhi& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QPhi& x, const QPhi& y) { return !(x == y); }

  // Sign under the real embedding phi = (1+sqrt 5)/2. Exact: a + b phi =
  // (x + y sqrt 5)/2 with x = 2a+b, y = b; compare x against -y sqrt 5 by
  // squaring on the side where the signs disagree.
  int sgn() const {
    Rat x = a_ + a_ + b_;
    const Rat& y = b_;
    int sx = x.sgn(), sy = y.sgn();
    if (sx >= 0 && sy >= 0) return (sx == 0 && sy == 0) ? 0 : 1;
    if (sx <= 0 && sy <= 0) return -1;
    Rat d = x * x - Rat(5) * y * y;  // sign of x^2 - 5 y^2
    return sx > 0 ? d.sgn() : -d.sgn();
  }

  friend bool operator<(const QPhi& x, const QPhi& y) { return (x - y).sgn() < 0; }
  friend bool operator>(const QPhi& x, const QPhi& y) { return (x - y).sgn() > 0; }
  friend bool operator<=(const QPhi& x, const QPhi& y) { return (x - y).sgn() <= 0; }
  friend bool operator>=(const QPhi& x, const QPhi& y) { return (x - y).sgn() >= 0; }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    if (!s.empty() && b_.sgn() > 0) s += "+";
    s += b_.str() + "*phi";
    return s;
  }

private:
  Rat a_, b_;
};

}  // namespace sixpoints

#endif
