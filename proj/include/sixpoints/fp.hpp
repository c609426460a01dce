#ifndef SIXPOINTS_FP_HPP
#define SIXPOINTS_FP_HPP

#include <cstdint>
#include <stdexcept>

#include "sixpoints/rat.hpp"

namespace sixpoints {

// Prime field used for polynomial identity testing. The modulus is the
// Mersenne prime 2^61-1, fixed for the whole artifact.
class Fp {
public:
  static constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

  constexpr Fp() : v_(0) {}
  constexpr explicit Fp(std::uint64_t v) : v_(v % P) {}
  static constexpr Fp from_int(std::int64_t v) {
    return v >= 0 ? Fp(std::uint64_t(v)) : -Fp(std::uint64_t(-(v + 1)) + 1);
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  constexpr Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  constexpr Fp& operator*=(Fp o) {
    v_ = std::uint64_t((unsigned __int128)(v_)*o.v_ % P);
    return *this;
  }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp r = raw(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(P - 2);
  }

  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

private:
  static constexpr Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_;
};

// Reduction of a rational mod P. Throws when the denominator vanishes mod P.
inline Fp to_fp(const Rat& r) {
  mpz_class p_mpz(Fp::P);
  mpz_class n = r.num() % p_mpz;
  mpz_class d = r.den() % p_mpz;
  if (d == 0) throw std::domain_error("to_fp: denominator divisible by modulus");
  if (n < 0) n += p_mpz;
  Fp num(n.get_ui()), den(d.get_ui());
  return num / den;
}

}  // namespace sixpoints

#endif
