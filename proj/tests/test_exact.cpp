#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sixpoints/det.hpp"
#include "sixpoints/fp.hpp"
#include "sixpoints/multipoly.hpp"
#include "sixpoints/pit.hpp"
#include "sixpoints/qphi.hpp"
#include "sixpoints/rat.hpp"
#include "sixpoints/rng.hpp"

using namespace sixpoints;

namespace {

Rat random_rat(std::mt19937_64& gen) {
  long long num = uniform_int(gen, -50, 50);
  long long den = uniform_int(gen, 1, 20);
  return Rat(num, den);
}

QPhi random_qphi(std::mt19937_64& gen) { return QPhi(random_rat(gen), random_rat(gen)); }

PolyQ random_poly(std::mt19937_64& gen, int arity) {
  PolyQ p(arity);
  int terms = int(uniform_int(gen, 0, 5));
  for (int t = 0; t < terms; ++t) {
    ExpVec k{};
    for (int i = 0; i < arity; ++i) k[i] = std::uint8_t(uniform_int(gen, 0, 3));
    p.add_term(k, random_rat(gen));
  }
  return p;
}

// Direct cofactor expansion, the oracle for det_exact.
Rat det_cofactor(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rat acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Rat term = m[0][j] * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("Rat normalizes eagerly and parses num/den strings") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(2, -4).den() == 2);
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat::parse("22/7").str() == "22/7");
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("17").str() == "17");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("x"));
  CHECK_THROWS(Rat(1, 0));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("ring axioms hold on randomized rationals") {
  std::mt19937_64 gen(1);
  for (int k = 0; k < 200; ++k) {
    Rat a = random_rat(gen), b = random_rat(gen), c = random_rat(gen);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Rat(1) == a);
    CHECK(a + (-a) == Rat(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("Fp arithmetic over the Mersenne prime") {
  CHECK(Fp::P == 2305843009213693951ull);
  Fp a(123456789), b(Fp::P - 3);
  CHECK((a + b).value() == (123456789 - 3 + Fp::P) % Fp::P);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(Fp(2).pow(61).value() == 1);  // 2^61 = p + 1
  CHECK(Fp::from_int(-1).value() == Fp::P - 1);
  CHECK_THROWS(Fp(0).inverse());

  std::mt19937_64 gen(2);
  for (int k = 0; k < 200; ++k) {
    Fp x(uniform_below(gen, Fp::P)), y(uniform_below(gen, Fp::P)), z(uniform_below(gen, Fp::P));
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Fp(0));
  }
}

TEST_CASE("rationals embed in Fp unless the denominator vanishes") {
  CHECK(to_fp(Rat(1, 2)) * Fp(2) == Fp(1));
  CHECK(to_fp(Rat(-1)) == -Fp(1));
  mpz_class p_mpz(Fp::P);
  CHECK_THROWS(to_fp(Rat(mpz_class(1), p_mpz)));
}

TEST_CASE("QPhi satisfies phi^2 = phi + 1 and conjugation is an order-2 automorphism") {
  QPhi phi = QPhi::phi();
  CHECK(phi * phi == phi + QPhi(Rat(1)));
  CHECK(phi.conj() == QPhi(Rat(1)) - phi);

  std::mt19937_64 gen(3);
  for (int k = 0; k < 200; ++k) {
    QPhi a = random_qphi(gen), b = random_qphi(gen), c = random_qphi(gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.conj().conj() == a);
  }
  // fixes Q
  QPhi q(Rat(22, 7));
  CHECK(q.conj() == q);
}

TEST_CASE("QPhi ordering matches the real embedding of the golden section") {
  QPhi phi = QPhi::phi();
  CHECK(phi > QPhi(Rat(1)));
  CHECK(phi < QPhi(Rat(2)));
  CHECK(phi.conj() < QPhi(Rat(0)));               // 1 - phi < 0
  CHECK(QPhi(Rat(8, 5)) < phi);                   // 1.6 < 1.618...
  CHECK(phi < QPhi(Rat(13, 8)));                  // 1.618... < 1.625
  CHECK((phi * phi - phi - QPhi(Rat(1))).sgn() == 0);
}

TEST_CASE("MultiPoly basics: difference of squares, absorbing zero, pow") {
  PolyQ x1 = PolyQ::var(2, 0), x2 = PolyQ::var(2, 1);
  PolyQ prod = (x1 + x2) * (x1 - x2);
  PolyQ expect = x1 * x1 - x2 * x2;
  CHECK(prod == expect);

  PolyQ zero(2);
  CHECK((prod * zero).is_zero());
  CHECK(zero.term_count() == 0);

  CHECK(x1.pow(0) == PolyQ::constant(2, Rat(1)));
  CHECK(x1.pow(3) == x1 * x1 * x1);
  CHECK_THROWS(x1.pow(-1));
  CHECK_THROWS(x1 + PolyQ::var(3, 0));  // arity mismatch
}

TEST_CASE("MultiPoly evaluation is an algebra homomorphism") {
  PolyQ x1 = PolyQ::var(2, 0), x2 = PolyQ::var(2, 1);
  std::vector<Rat> point = {Rat(2), Rat(3)};
  CHECK((x1 * x2).eval(point) == Rat(6));

  PolyQ p = x1 * x2 + x2 * x2 + PolyQ::constant(2, Rat(5));
  std::vector<Rat> origin = {Rat(0), Rat(0)};
  CHECK(p.eval(origin) == Rat(5));  // constant term

  std::mt19937_64 gen(4);
  for (int k = 0; k < 50; ++k) {
    PolyQ a = random_poly(gen, 3), b = random_poly(gen, 3);
    std::vector<Rat> v = {random_rat(gen), random_rat(gen), random_rat(gen)};
    CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
    CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
  }
}

TEST_CASE("MultiPoly ring axioms on randomized inputs") {
  std::mt19937_64 gen(5);
  for (int k = 0; k < 40; ++k) {
    PolyQ a = random_poly(gen, 3), b = random_poly(gen, 3), c = random_poly(gen, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("graded-lex serialization order is canonical") {
  PolyQ x = PolyQ::var(2, 0), y = PolyQ::var(2, 1);
  PolyQ p = y + x * x + x * y + PolyQ::constant(2, Rat(7));
  auto terms = p.terms();
  REQUIRE(terms.size() == 4);
  // degree 2 first (x^2 before xy), then degree 1, then the constant
  CHECK(terms[0].first[0] == 2);
  CHECK(terms[1].first[0] == 1);
  CHECK(terms[1].first[1] == 1);
  CHECK(terms[2].first[1] == 1);
  CHECK(terms[3].first.total_degree(2) == 0);
}

TEST_CASE("det_exact: identity, equal rows, multilinearity against the cofactor oracle") {
  std::vector<std::vector<Rat>> id6(6, std::vector<Rat>(6));
  for (int i = 0; i < 6; ++i) id6[size_t(i)][size_t(i)] = Rat(1);
  CHECK(det_exact(id6) == Rat(1));

  auto two_rows = id6;
  two_rows[3] = two_rows[1];
  CHECK(det_exact(two_rows) == Rat(0));

  std::mt19937_64 gen(6);
  for (int k = 0; k < 60; ++k) {
    std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
    for (auto& row : m)
      for (auto& v : row) v = random_rat(gen);
    CHECK(det_exact(m) == det_cofactor(m));
  }
}

TEST_CASE("det_exact vanishes on the Veronese matrix of six conic points") {
  // t -> [1; t; t^2] lies on xz = y^2; quadric monomial rows are dependent.
  std::vector<std::vector<Rat>> m;
  for (long t : {-3, -1, 0, 2, 5, 9}) {
    Rat x(1), y(t), z(t * t);
    m.push_back({x * x, y * y, z * z, x * y, y * z, z * x});
  }
  CHECK(det_exact(m) == Rat(0));
}

TEST_CASE("pit_zero: trivial zero, nonzero witness, bit-reproducibility") {
  auto zero_fn = [](std::span<const Fp> p) { return p[0] - p[0]; };
  PitResult z = pit_zero(zero_fn, 2, 4, 8, 123);
  CHECK(z.zero);
  CHECK(z.trials == 8);
  CHECK(z.failure_probability_bound() < 1e-15);

  auto x1 = [](std::span<const Fp> p) { return p[0]; };
  PitResult nz1 = pit_zero(x1, 2, 4, 1, 7);
  PitResult nz2 = pit_zero(x1, 2, 4, 1, 7);
  REQUIRE_FALSE(nz1.zero);
  CHECK(nz1.witness == nz2.witness);  // same seed, same witness
  CHECK(nz1.witness_value == nz1.witness[0]);

  PitResult other_seed = pit_zero(x1, 2, 4, 1, 8);
  CHECK(other_seed.witness != nz1.witness);

  CHECK_THROWS(pit_zero(zero_fn, 2, 4, 0, 1));
}
