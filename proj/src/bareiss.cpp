#include "sixpoints/det.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace sixpoints {

Rat det_exact(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_exact: matrix not square");
  if (n == 0) return Rat(1);

  // Clear denominators row by row; det(M) = det(A) / prod(row factors).
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].num() * (l / m[i][j].den());
    scale *= l;
  }

  // Bareiss sweep with row swaps on zero pivots.
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return Rat(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  mpz_class d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return Rat(d, scale);
}

}  // namespace sixpoints
