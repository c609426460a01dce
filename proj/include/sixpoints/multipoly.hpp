#ifndef SIXPOINTS_MULTIPOLY_HPP
#define SIXPOINTS_MULTIPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sixpoints/fp.hpp"
#include "sixpoints/rat.hpp"

namespace sixpoints {

constexpr int kMaxArity = 24;

// Dense fixed-arity exponent vector. Arities here never exceed 24 and
// individual exponents stay well below 255.
struct ExpVec {
  std::array<std::uint8_t, kMaxArity> e{};

  std::uint8_t operator[](int i) const { return e[size_t(i)]; }
  std::uint8_t& operator[](int i) { return e[size_t(i)]; }

  friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e == b.e; }

  int total_degree(int arity) const {
    int d = 0;
    for (int i = 0; i < arity; ++i) d += e[size_t(i)];
    return d;
  }

  // Graded lexicographic: total degree first, then lex on the exponents.
  static bool grlex_less(const ExpVec& a, const ExpVec& b, int arity) {
    int da = a.total_degree(arity), db = b.total_degree(arity);
    if (da != db) return da < db;
    for (int i = 0; i < arity; ++i)
      if (a.e[size_t(i)] != b.e[size_t(i)]) return a.e[size_t(i)] > b.e[size_t(i)];
    return false;
  }
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& k) const {
    // FNV-1a over the fixed 24 bytes
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : k.e) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

namespace detail {
inline bool coeff_is_zero(const Rat& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Fp& c) { return c.is_zero(); }
inline bool coeff_is_zero(long long c) { return c == 0; }
}  // namespace detail

// Sparse multivariate polynomial with exact coefficients. Terms live in a
// hash map keyed on exponent vectors; zero coefficients are never stored.
// Graded-lex ordering is imposed only when terms() is materialized.
template <class C>
class MultiPoly {
public:
  using TermMap = std::unordered_map<ExpVec, C, ExpVecHash>;

  explicit MultiPoly(int arity = 1) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity)
      throw std::invalid_argument("MultiPoly: arity out of range");
  }

  static MultiPoly constant(int arity, const C& c) {
    MultiPoly p(arity);
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(ExpVec{}, c);
    return p;
  }

  static MultiPoly var(int arity, int i, int exp = 1) {
    if (i < 0 || i >= arity) throw std::invalid_argument("MultiPoly: variable index");
    MultiPoly p(arity);
    if (exp < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    ExpVec k{};
    k[i] = std::uint8_t(exp);
    p.terms_.emplace(k, C(1));
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.total_degree(arity_));
    return d;
  }

  void add_term(const ExpVec& k, const C& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!detail::coeff_is_zero(c)) terms_.emplace(k, c);
    } else {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(arity_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        ExpVec k;
        for (int i = 0; i < a.arity_; ++i)
          k[i] = std::uint8_t(ka[i] + kb[i]);
        r.add_term(k, ca * cb);
      }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly& scale(const C& c) {
    if (detail::coeff_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly r = constant(arity_, C(1));
    MultiPoly b = *this;
    while (e) {
      if (e & 1) r *= b;
      if (e >>= 1) b *= b;
    }
    return r;
  }

  // Exact evaluation at a point of the coefficient domain.
  C eval(std::span<const C> point) const {
    if (int(point.size()) != arity_)
      throw std::invalid_argument("MultiPoly: evaluation point arity mismatch");
    C acc(0);
    for (const auto& [k, c] : terms_) {
      C t = c;
      for (int i = 0; i < arity_; ++i)
        for (int j = 0; j < k[i]; ++j) t *= point[size_t(i)];
      acc += t;
    }
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  const TermMap& term_map() const { return terms_; }

  // Terms in descending graded-lex order; the canonical serialization order.
  std::vector<std::pair<ExpVec, C>> terms() const {
    std::vector<std::pair<ExpVec, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& x, const auto& y) {
      return ExpVec::grlex_less(y.first, x.first, arity_);
    });
    return v;
  }

private:
  void check_arity(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  }

  int arity_;
  TermMap terms_;
};

using PolyQ = MultiPoly<Rat>;
using PolyFp = MultiPoly<Fp>;

// Coefficient-wise reduction mod the PIT prime.
inline PolyFp reduce_mod_p(const PolyQ& p) {
  PolyFp r(p.arity());
  for (const auto& [k, c] : p.term_map()) r.add_term(k, to_fp(c));
  return r;
}

// Evaluate a rational-coefficient polynomial at an Fp point.
inline Fp eval_mod_p(const PolyQ& p, std::span<const Fp> point) {
  if (int(point.size()) != p.arity())
    throw std::invalid_argument("eval_mod_p: arity mismatch");
  Fp acc;
  for (const auto& [k, c] : p.term_map()) {
    Fp t = to_fp(c);
    for (int i = 0; i < p.arity(); ++i)
      for (int j = 0; j < k[i]; ++j) t *= point[size_t(i)];
    acc += t;
  }
  return acc;
}

}  // namespace sixpoints

#endif
