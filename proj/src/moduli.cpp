#include "sixpoints/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "sixpoints/det.hpp"
#include "sixpoints/frozen.hpp"
#include "sixpoints/rng.hpp"

namespace sixpoints::moduli {

namespace {

using mystic::Pentagon;
using mystic::Syntheme;
using mystic::TriangleColoring;

// ---- variable layouts ----
// P1: u_i -> i-1, v_i -> 5 + i       (arity 12)
// P2: x_i -> i-1, y_i -> 5+i, z_i -> 11+i   (arity 18)
// P3: w_i -> i-1, x_i -> 5+i, y_i -> 11+i, z_i -> 17+i   (arity 24)

int p1_u(int i) { return i - 1; }
int p1_v(int i) { return 5 + i; }

// Homogenized difference p_i - p_j on P1.
PolyQ bracket(int i, int j) {
  PolyQ p(12);
  ExpVec k1{};
  k1[p1_u(i)] = 1;
  k1[p1_v(j)] = 1;
  p.add_term(k1, Rat(1));
  ExpVec k2{};
  k2[p1_u(j)] = 1;
  k2[p1_v(i)] = 1;
  p.add_term(k2, Rat(-1));
  return p;
}

SixPolys build_segre_polys() {
  const auto& colorings = mystic::canonical_colorings();
  SixPolys out;
  for (auto& p : out) p = PolyQ(12);
  for (int t = 0; t < 20; ++t) {
    auto tri = mystic::triangle_vertices(t);
    ExpVec k{};
    for (int i = 1; i <= 6; ++i) {
      bool in_tri = i == tri[0] || i == tri[1] || i == tri[2];
      k[in_tri ? p1_u(i) : p1_v(i)] = 1;
    }
    for (int x = 0; x < 6; ++x) {
      bool black = colorings[size_t(x)].black >> t & 1;
      out[size_t(x)].add_term(k, Rat(black ? 1 : -1));
    }
  }
  return out;
}

SixPolys build_igusa_polys() {
  const auto& pentagons = mystic::enumerate_pentagons();
  SixPolys out;
  for (auto& p : out) p = PolyQ(12);
  static constexpr int kExps[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const Perm& g : mystic::s5_elements()) {
    int A = g(1), B = g(2), C = g(3), D = g(4), E = g(5);
    for (const auto& e : kExps) {
      int alpha = e[0], beta = e[1], gamma = e[2];
      // (p6 pA)^alpha (pB pC)^beta (pD pE)^gamma, homogenized to degree 2
      // in every point.
      ExpVec k{};
      int deg[7] = {};
      deg[6] = alpha;
      deg[A] = alpha;
      deg[B] = beta;
      deg[C] = beta;
      deg[D] = gamma;
      deg[E] = gamma;
      for (int i = 1; i <= 6; ++i) {
        k[p1_u(i)] = std::uint8_t(deg[i]);
        k[p1_v(i)] = std::uint8_t(2 - deg[i]);
      }
      for (int x = 0; x < 6; ++x) {
        bool same = pentagons[size_t(x)].white_has_edge(B, C) == pentagons[size_t(x)].white_has_edge(D, E);
        out[size_t(x)].add_term(k, Rat(same ? -1 : 2));
      }
    }
  }
  return out;
}

SixPolys build_p2_polys() {
  const auto& pentagons = mystic::enumerate_pentagons();
  const Rat scale = Rat::parse(frozen::kP2WScale);
  SixPolys out;
  for (auto& p : out) p = PolyQ(18);
  for (const Perm& g : mystic::s6_elements()) {
    int A = g(1), B = g(2), C = g(3), D = g(4), E = g(5), F = g(6);
    ExpVec k{};
    k[A - 1] += 1;
    k[B - 1] += 1;
    k[5 + C] += 1;
    k[5 + D] += 1;
    k[11 + E] += 1;
    k[11 + F] += 1;
    // the two pairs avoiding 6 are edges of K5; N depends on their colors
    std::array<std::array<int, 2>, 2> edges;
    int ne = 0;
    for (auto pr : {std::array<int, 2>{A, B}, {C, D}, {E, F}})
      if (pr[0] != 6 && pr[1] != 6) edges[size_t(ne++)] = pr;
    if (ne != 2) throw std::logic_error("p2: expected two pairs avoiding 6");
    for (int x = 0; x < 6; ++x) {
      bool same = pentagons[size_t(x)].white_has_edge(edges[0][0], edges[0][1]) ==
                  pentagons[size_t(x)].white_has_edge(edges[1][0], edges[1][1]);
      out[size_t(x)].add_term(k, Rat(same ? -1 : 2) * scale);
    }
  }
  return out;
}

struct P3Seed {
  Rat coef;
  int exps[6][4];  // [point][w,x,y,z]
};

const std::array<P3Seed, 9>& p3_seeds() {
  static const std::array<P3Seed, 9> seeds = {{
      {Rat(1, 2),
       {{0, 1, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}},
      {Rat(1),
       {{1, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 2}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 2, 0, 0}}},
      {Rat(-1, 2),
       {{0, 0, 0, 2}, {1, 0, 1, 0}, {2, 0, 0, 0}, {0, 0, 2, 0}, {0, 2, 0, 0}, {0, 1, 0, 1}}},
      {Rat(2),
       {{0, 0, 0, 2}, {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}}},
      {Rat(-1),
       {{1, 0, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}}},
      {Rat(-2, 3),
       {{0, 0, 2, 0}, {1, 0, 0, 1}, {0, 2, 0, 0}, {0, 0, 0, 2}, {1, 0, 1, 0}, {1, 1, 0, 0}}},
      {Rat(-1, 2),
       {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}}},
      {Rat(1, 6),
       {{0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}}},
      {Rat(1, 4),
       {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}, {0, 0, 1, 1}}},
  }};
  // Per-point degree-2 audit of the seed table.
  for (const auto& s : seeds)
    for (int i = 0; i < 6; ++i)
      if (s.exps[i][0] + s.exps[i][1] + s.exps[i][2] + s.exps[i][3] != 2)
        throw std::logic_error("p3 seed monomial is not of degree 2 in every point");
  return seeds;
}

// Orbit sum of the nine seeds under a point subgroup and signed S4 on the
// coordinate letters.
PolyQ p3_orbit_sum(const std::vector<const Perm*>& subgroup) {
  const auto& seeds = p3_seeds();
  const auto s4 = enumerate_group(4);
  PolyQ out(24);
  for (const Perm* gp : subgroup) {
    const Perm& g = *gp;
    for (const Perm& tau : s4) {
      int tsign = sign(tau);
      for (const auto& seed : seeds) {
        ExpVec k{};
        for (int i = 1; i <= 6; ++i)
          for (int c = 0; c < 4; ++c)
            k[(tau(c + 1) - 1) * 6 + (g(i) - 1)] += std::uint8_t(seed.exps[i - 1][c]);
        out.add_term(k, tsign > 0 ? seed.coef : -seed.coef);
      }
    }
  }
  return out;
}

PolyQ p3_translate(const PolyQ& p, const Perm& g) {
  PolyQ out(24);
  for (const auto& [k, c] : p.term_map()) {
    ExpVec nk{};
    for (int i = 1; i <= 6; ++i)
      for (int co = 0; co < 4; ++co) nk[co * 6 + (g(i) - 1)] += k[co * 6 + (i - 1)];
    out.add_term(nk, c);
  }
  return out;
}

SixPolys build_p3_polys(OrbitRule rule) {
  const auto& s6 = mystic::s6_elements();
  SixPolys out;
  if (rule == OrbitRule::R1) {
    // The seeds describe the coordinate of letter a; its orbit sum runs over
    // the point copy of S5 stabilizing a under the outer map. The remaining
    // letters are the outer-equivariant translates (well defined because the
    // base sum is invariant under its own stabilizer).
    std::vector<const Perm*> stab_a;
    for (const Perm& g : s6)
      if (mystic::outer_via_triangles(g)(1) == 1) stab_a.push_back(&g);
    if (stab_a.size() != 120) throw std::logic_error("p3: stabilizer of a should have order 120");
    PolyQ base = p3_orbit_sum(stab_a);
    for (int x = 0; x < 6; ++x) {
      const Perm* gx = nullptr;
      for (const Perm& g : s6)
        if (mystic::outer_via_triangles(g)(1) == x + 1) {
          gx = &g;
          break;
        }
      out[size_t(x)] = p3_translate(base, *gx);
    }
  } else {
    // Rejected candidate: the sum runs over the standard S5 fixing the point
    // 6, identically for every letter.
    std::vector<const Perm*> std_s5;
    for (const Perm& g : s6)
      if (g(6) == 6) std_s5.push_back(&g);
    PolyQ base = p3_orbit_sum(std_s5);
    for (int x = 0; x < 6; ++x) out[size_t(x)] = base;
  }
  return out;
}

std::vector<Rat> eval_tuple(const PointConfig& c) {
  c.validate();
  std::vector<Rat> vars(size_t(6 * (c.dim + 1)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j <= c.dim; ++j) vars[size_t(j * 6 + i)] = c.points[size_t(i)][size_t(j)];
  return vars;
}

InvariantVector eval_six(const SixPolys& polys, const PointConfig& c) {
  std::vector<Rat> vars = eval_tuple(c);
  InvariantVector out;
  for (int x = 0; x < 6; ++x) out.values[size_t(x)] = polys[size_t(x)].eval(vars);
  return out;
}

std::optional<Rat> poly_ratio(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Rat(0);
  const auto& [k0, c0] = *b.term_map().begin();
  auto it = a.term_map().find(k0);
  if (it == a.term_map().end()) return std::nullopt;
  Rat r = it->second / c0;
  PolyQ scaled = b;
  scaled.scale(r);
  if (scaled != a) return std::nullopt;
  return r;
}

// Substitute u_i -> t_i, v_i -> 1 in a P1 12-variable polynomial.
PolyQ project_p1_affine(const PolyQ& p) {
  PolyQ out(6);
  for (const auto& [k, c] : p.term_map()) {
    ExpVec nk{};
    for (int i = 0; i < 6; ++i) nk[i] = k[i];
    out.add_term(nk, c);
  }
  return out;
}

// Substitute x_i -> 1, y_i -> t_i, z_i -> t_i^2 in a P2 18-variable polynomial.
PolyQ project_p2_conic(const PolyQ& p) {
  PolyQ out(6);
  for (const auto& [k, c] : p.term_map()) {
    ExpVec nk{};
    for (int i = 0; i < 6; ++i) nk[i] = std::uint8_t(k[6 + i] + 2 * k[12 + i]);
    out.add_term(nk, c);
  }
  return out;
}

const std::array<std::array<int, 2>, 3>& kempe_z_rule(int x) {
  // Z_x from the pairs {x,y}, {x,z}, {y,z} with y < z the two least other
  // letters; mirrors the printed three-term inversion.
  static const auto rules = [] {
    std::array<std::array<std::array<int, 2>, 3>, 6> r{};
    for (int x = 0; x < 6; ++x) {
      int y = x == 0 ? 1 : 0;
      int z = x <= 1 ? 2 : 1;
      r[size_t(x)] = {{{x, y}, {x, z}, {y, z}}};
    }
    return r;
  }();
  return rules[size_t(x)];
}

}  // namespace

// ---- PointConfig ----

PointConfig PointConfig::from_affine_p1(const std::array<Rat, 6>& t) {
  PointConfig c;
  c.dim = 1;
  for (int i = 0; i < 6; ++i) c.points[size_t(i)] = {t[size_t(i)], Rat(1)};
  return c;
}

PointConfig PointConfig::conic_p2(const std::array<Rat, 6>& t) {
  PointConfig c;
  c.dim = 2;
  for (int i = 0; i < 6; ++i)
    c.points[size_t(i)] = {Rat(1), t[size_t(i)], t[size_t(i)] * t[size_t(i)]};
  return c;
}

PointConfig PointConfig::rnc_p3(const std::array<Rat, 6>& t) {
  PointConfig c;
  c.dim = 3;
  for (int i = 0; i < 6; ++i) {
    const Rat& x = t[size_t(i)];
    c.points[size_t(i)] = {Rat(1), x, x * x, x * x * x};
  }
  return c;
}

PointConfig PointConfig::permuted(const Perm& g) const {
  PointConfig c;
  c.dim = dim;
  Perm gi = inverse(g);
  for (int i = 1; i <= 6; ++i) c.points[size_t(i - 1)] = points[size_t(gi(i) - 1)];
  return c;
}

void PointConfig::validate() const {
  if (dim < 1 || dim > 3) throw std::invalid_argument("PointConfig: dim must be 1, 2 or 3");
  for (const auto& p : points) {
    if (int(p.size()) != dim + 1)
      throw std::invalid_argument("PointConfig: point has wrong coordinate count");
    bool nonzero = false;
    for (const Rat& c : p) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw std::invalid_argument("PointConfig: zero point");
  }
}

// ---- InvariantVector ----

Rat InvariantVector::sum() const {
  Rat s;
  for (const Rat& v : values) s += v;
  return s;
}

bool InvariantVector::is_zero() const {
  for (const Rat& v : values)
    if (!v.is_zero()) return false;
  return true;
}

InvariantVector InvariantVector::scaled(const Rat& c) const {
  InvariantVector out;
  for (int i = 0; i < 6; ++i) out.values[size_t(i)] = values[size_t(i)] * c;
  return out;
}

InvariantVector InvariantVector::letter_permuted(const Perm& letter_perm, bool negate) const {
  InvariantVector out;
  Perm inv = inverse(letter_perm);
  for (int x = 1; x <= 6; ++x) {
    Rat v = values[size_t(inv(x) - 1)];
    out.values[size_t(x - 1)] = negate ? -v : v;
  }
  return out;
}

std::optional<Rat> proportionality(const InvariantVector& a, const InvariantVector& b) {
  int pivot = -1;
  for (int i = 0; i < 6; ++i)
    if (!b.values[size_t(i)].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) return std::nullopt;
  Rat c = a.values[size_t(pivot)] / b.values[size_t(pivot)];
  for (int i = 0; i < 6; ++i)
    if (a.values[size_t(i)] != b.values[size_t(i)] * c) return std::nullopt;
  return c;
}

// ---- maps ----

const SixPolys& segre_polys() {
  static const SixPolys p = build_segre_polys();
  return p;
}

InvariantVector segre_map(const PointConfig& c) {
  if (c.dim != 1) throw std::invalid_argument("segre_map: points must lie in P1");
  return eval_six(segre_polys(), c);
}

const SixPolys& igusa_p1_polys() {
  static const SixPolys p = build_igusa_polys();
  return p;
}

InvariantVector igusa_p1_map(const PointConfig& c) {
  if (c.dim != 1) throw std::invalid_argument("igusa_p1_map: points must lie in P1");
  return eval_six(igusa_p1_polys(), c);
}

bool igusa_quartic_exact_zero() {
  // Integer coefficients throughout; the largest intermediate coefficient is
  // bounded by ~1e14, far inside long long range.
  std::array<MultiPoly<long long>, 6> w;
  for (int x = 0; x < 6; ++x) {
    MultiPoly<long long> p(12);
    for (const auto& [k, c] : igusa_p1_polys()[size_t(x)].term_map()) {
      if (c.den() != 1) throw std::logic_error("igusa polynomial has non-integer coefficient");
      p.add_term(k, c.num().get_si());
    }
    w[size_t(x)] = std::move(p);
  }
  MultiPoly<long long> sum_sq(12), sum_fourth(12);
  for (int x = 0; x < 6; ++x) {
    MultiPoly<long long> sq = w[size_t(x)] * w[size_t(x)];
    sum_sq += sq;
    sum_fourth += sq * sq;
  }
  MultiPoly<long long> quartic = sum_sq * sum_sq;
  sum_fourth.scale(4);
  quartic -= sum_fourth;
  return quartic.is_zero();
}

CrossRatioPoint sym_cross_ratio(const std::array<std::vector<Rat>, 4>& pts) {
  for (const auto& p : pts)
    if (p.size() != 2 || (p[0].is_zero() && p[1].is_zero()))
      throw std::invalid_argument("sym_cross_ratio: need four nonzero P1 points");
  auto d = [&](int i, int j) {
    return pts[size_t(i - 1)][0] * pts[size_t(j - 1)][1] -
           pts[size_t(j - 1)][0] * pts[size_t(i - 1)][1];
  };
  CrossRatioPoint out;
  out.xyz = {d(2, 3) * d(1, 4), d(1, 2) * d(3, 4), d(1, 3) * d(4, 2)};
  out.degenerate = out.xyz[0].is_zero() && out.xyz[1].is_zero() && out.xyz[2].is_zero();
  return out;
}

CrossRatioPoint cross_ratio_from_z(const InvariantVector& z,
                                   const std::array<std::array<int, 2>, 3>& pair_choice) {
  int seen = 0;
  for (const auto& pr : pair_choice)
    for (int letter : pr) {
      if (letter < 0 || letter > 5 || (seen >> letter & 1))
        throw std::invalid_argument("cross_ratio_from_z: pairs must partition the letters");
      seen |= 1 << letter;
    }
  CrossRatioPoint out;
  for (int k = 0; k < 3; ++k)
    out.xyz[size_t(k)] =
        z.values[size_t(pair_choice[size_t(k)][0])] + z.values[size_t(pair_choice[size_t(k)][1])];
  out.degenerate = out.xyz[0].is_zero() && out.xyz[1].is_zero() && out.xyz[2].is_zero();
  return out;
}

InvariantVector duality_map(const InvariantVector& in, DualityDirection dir) {
  InvariantVector out;
  if (dir == DualityDirection::StoI) {
    Rat sq;
    for (const Rat& z : in.values) sq += z * z;
    sq *= Rat(1, 6);
    for (int x = 0; x < 6; ++x) out.values[size_t(x)] = in.values[size_t(x)] * in.values[size_t(x)] - sq;
  } else {
    Rat sq, cb;
    for (const Rat& w : in.values) {
      sq += w * w;
      cb += w * w * w;
    }
    cb *= Rat(2, 3);
    for (int x = 0; x < 6; ++x) {
      const Rat& w = in.values[size_t(x)];
      out.values[size_t(x)] = sq * w - Rat(4) * w * w * w + cb;
    }
  }
  return out;
}

SixPolys duality_map_symbolic(const SixPolys& in, DualityDirection dir) {
  const int arity = in[0].arity();
  SixPolys out;
  if (dir == DualityDirection::StoI) {
    PolyQ sq(arity);
    for (const PolyQ& z : in) sq += z * z;
    sq.scale(Rat(1, 6));
    for (int x = 0; x < 6; ++x) out[size_t(x)] = in[size_t(x)] * in[size_t(x)] - sq;
  } else {
    PolyQ sq(arity), cb(arity);
    for (const PolyQ& w : in) {
      PolyQ ww = w * w;
      sq += ww;
      cb += ww * w;
    }
    cb.scale(Rat(2, 3));
    for (int x = 0; x < 6; ++x) {
      PolyQ w3 = in[size_t(x)] * in[size_t(x)] * in[size_t(x)];
      w3.scale(Rat(4));
      out[size_t(x)] = sq * in[size_t(x)] - w3 + cb;
    }
  }
  return out;
}

const SixPolys& p2_polys() {
  static const SixPolys p = build_p2_polys();
  return p;
}

Rat veronese_det(const PointConfig& c) {
  if (c.dim != 2) throw std::invalid_argument("veronese_det: points must lie in P2");
  c.validate();
  std::vector<std::vector<Rat>> m(6);
  for (int i = 0; i < 6; ++i) {
    const Rat& x = c.points[size_t(i)][0];
    const Rat& y = c.points[size_t(i)][1];
    const Rat& z = c.points[size_t(i)][2];
    m[size_t(i)] = {x * x, y * y, z * z, x * y, y * z, z * x};
  }
  return det_exact(m);
}

P2Result p2_map(const PointConfig& c) {
  if (c.dim != 2) throw std::invalid_argument("p2_map: points must lie in P2");
  P2Result r;
  r.w = eval_six(p2_polys(), c);
  r.v = veronese_det(c);
  return r;
}

const SixPolys& p3_polys(OrbitRule rule) {
  static const SixPolys r1 = build_p3_polys(OrbitRule::R1);
  static const SixPolys r2 = build_p3_polys(OrbitRule::R2);
  return rule == OrbitRule::R1 ? r1 : r2;
}

InvariantVector p3_map(const PointConfig& c, OrbitRule rule) {
  if (c.dim != 3) throw std::invalid_argument("p3_map: points must lie in P3");
  return eval_six(p3_polys(rule), c);
}

// ---- Kempe ----

Syntheme OrientedSyntheme::underlying() const {
  std::array<std::array<int, 2>, 3> p = arrows;
  return Syntheme::from_pairs(p);
}

std::string OrientedSyntheme::str() const {
  auto sorted = arrows;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return std::min(a[0], a[1]) < std::min(b[0], b[1]); });
  std::string s;
  for (int k = 0; k < 3; ++k) {
    if (k) s += ".";
    s += std::to_string(sorted[size_t(k)][0]) + std::to_string(sorted[size_t(k)][1]);
  }
  return s;
}

OrientedSyntheme OrientedSyntheme::parse(const std::string& s) {
  if (s.size() != 8 || s[2] != '.' || s[5] != '.')
    throw std::invalid_argument("OrientedSyntheme: expected 'AB.CD.EF'");
  OrientedSyntheme o;
  for (int k = 0; k < 3; ++k) {
    int tail = s[size_t(3 * k)] - '0', head = s[size_t(3 * k + 1)] - '0';
    o.arrows[size_t(k)] = {tail, head};
  }
  o.underlying();  // validates the partition
  return o;
}

const std::vector<KempeDictionaryEntry>& kempe_dictionary() {
  static const std::vector<KempeDictionaryEntry> dict = [] {
    std::vector<KempeDictionaryEntry> d;
    int idx = 0;
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y) {
        std::vector<int> img = {1, 2, 3, 4, 5, 6};
        std::swap(img[size_t(x)], img[size_t(y)]);
        Perm transposition = Perm::from_images(img);
        Syntheme target = Syntheme::from_perm(mystic::outer_via_cosets(transposition));
        OrientedSyntheme oriented = OrientedSyntheme::parse(frozen::kKempeOrientations[idx]);
        if (!(oriented.underlying() == target))
          throw std::logic_error("frozen Kempe orientation does not match the outer image of (" +
                                 std::string(1, mystic::letter_name(x)) +
                                 std::string(1, mystic::letter_name(y)) + ")");
        d.push_back({{x, y}, oriented});
        ++idx;
      }
    return d;
  }();
  return dict;
}

KempeVector kempe_z_to_x(const InvariantVector& z) {
  const Rat c = Rat::parse(frozen::kKempeConstant);
  KempeVector out;
  for (const auto& entry : kempe_dictionary()) {
    Rat v = (z.values[size_t(entry.letters[0])] + z.values[size_t(entry.letters[1])]) * Rat(1, 2) * c;
    out.values[entry.oriented.underlying()] = v;
  }
  return out;
}

KempeInversion kempe_x_to_z(const KempeVector& x) {
  const Rat c = Rat::parse(frozen::kKempeConstant);
  auto value_of_pair = [&](int a, int b) -> Rat {
    for (const auto& entry : kempe_dictionary())
      if ((entry.letters[0] == a && entry.letters[1] == b) ||
          (entry.letters[0] == b && entry.letters[1] == a)) {
        auto it = x.values.find(entry.oriented.underlying());
        if (it == x.values.end())
          throw std::invalid_argument("kempe_x_to_z: missing syntheme value");
        return it->second;
      }
    throw std::logic_error("kempe_x_to_z: unreachable letter pair");
  };
  KempeInversion out;
  for (int letter = 0; letter < 6; ++letter) {
    const auto& rule = kempe_z_rule(letter);
    Rat v = value_of_pair(rule[0][0], rule[0][1]) + value_of_pair(rule[1][0], rule[1][1]) -
            value_of_pair(rule[2][0], rule[2][1]);
    out.z.values[size_t(letter)] = v / c;
  }
  // The 15 values of a genuine Z-image must reproduce themselves.
  KempeVector check = kempe_z_to_x(out.z);
  out.consistent = check.values == x.values;
  return out;
}

Rat kempe_eval(const PointConfig& c, const OrientedSyntheme& s) {
  if (c.dim != 1) throw std::invalid_argument("kempe_eval: points must lie in P1");
  c.validate();
  Rat prod(1);
  for (const auto& arrow : s.arrows) {
    const auto& pa = c.points[size_t(arrow[0] - 1)];
    const auto& pb = c.points[size_t(arrow[1] - 1)];
    prod *= pb[0] * pa[1] - pa[0] * pb[1];  // p_head - p_tail, homogenized
  }
  return prod;
}

// ---- derivations ----

Rat derive_lambda_sto_i() {
  SixPolys w = duality_map_symbolic(segre_polys(), DualityDirection::StoI);
  std::optional<Rat> lambda;
  for (int x = 0; x < 6; ++x) {
    auto r = poly_ratio(w[size_t(x)], igusa_p1_polys()[size_t(x)]);
    if (!r) throw std::logic_error("StoI of the Segre image is not proportional to the Igusa map");
    if (lambda && *lambda != *r)
      throw std::logic_error("StoI/Igusa ratio differs between letters");
    lambda = r;
  }
  return *lambda;
}

std::optional<Rat> derive_p2_kappa_raw(std::uint64_t seed, int configs) {
  std::optional<Rat> kappa;
  for (int k = 0; k < configs; ++k) {
    PointConfig c = random_config(2, derive_seed(seed, 0x2b, std::uint64_t(k)));
    Rat v = veronese_det(c);
    if (v.is_zero()) continue;
    InvariantVector w = eval_six(p2_polys(), c);
    Rat s2, s4;
    for (const Rat& t : w.values) {
      Rat t2 = t * t;
      s2 += t2;
      s4 += t2 * t2;
    }
    Rat e = s2 * s2 - Rat(4) * s4;
    Rat kk = -e / (v * v);
    if (kappa && *kappa != kk) return std::nullopt;
    kappa = kk;
  }
  return kappa;
}

Rat derive_p2_conic_constant() {
  std::optional<Rat> constant;
  for (int x = 0; x < 6; ++x) {
    PolyQ lhs = project_p2_conic(p2_polys()[size_t(x)]);
    PolyQ rhs = project_p1_affine(igusa_p1_polys()[size_t(x)]);
    auto r = poly_ratio(lhs, rhs);
    if (!r) throw std::logic_error("p2 restricted to the conic is not proportional to igusa_p1");
    if (constant && *constant != *r)
      throw std::logic_error("p2/igusa conic ratio differs between letters");
    constant = r;
  }
  return *constant;
}

Rat derive_kempe_constant() {
  const auto& segre = segre_polys();
  std::optional<Rat> constant;
  for (const auto& entry : kempe_dictionary()) {
    // X = product of (p_head - p_tail); bracket(i, j) is p_i - p_j
    PolyQ x_poly = bracket(entry.oriented.arrows[0][1], entry.oriented.arrows[0][0]) *
             bracket(entry.oriented.arrows[1][1], entry.oriented.arrows[1][0]) *
             bracket(entry.oriented.arrows[2][1], entry.oriented.arrows[2][0]);
    PolyQ z_half = segre[size_t(entry.letters[0])] + segre[size_t(entry.letters[1])];
    z_half.scale(Rat(1, 2));
    auto r = poly_ratio(x_poly, z_half);
    if (!r) throw std::logic_error("Kempe X is not proportional to (Z_x+Z_y)/2 for pair " +
                                   std::string(1, mystic::letter_name(entry.letters[0])) +
                                   std::string(1, mystic::letter_name(entry.letters[1])));
    if (constant && *constant != *r)
      throw std::logic_error("Kempe constant differs between letter pairs");
    constant = r;
  }
  return *constant;
}

KempeDerivation derive_kempe_table() {
  const auto& segre = segre_polys();
  KempeDerivation out;
  bool have_constant = false;
  int idx = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y, ++idx) {
      std::vector<int> img = {1, 2, 3, 4, 5, 6};
      std::swap(img[size_t(x)], img[size_t(y)]);
      Syntheme target = Syntheme::from_perm(mystic::outer_via_cosets(Perm::from_images(img)));
      OrientedSyntheme oriented{target.pairs};  // ascending arrows as the base orientation
      PolyQ x_poly = bracket(oriented.arrows[0][1], oriented.arrows[0][0]) *
                     bracket(oriented.arrows[1][1], oriented.arrows[1][0]) *
                     bracket(oriented.arrows[2][1], oriented.arrows[2][0]);
      PolyQ z_half = segre[size_t(x)] + segre[size_t(y)];
      z_half.scale(Rat(1, 2));
      auto r = poly_ratio(x_poly, z_half);
      if (!r) throw std::logic_error("derive_kempe_table: X not proportional to (Z_x+Z_y)/2");
      if (!have_constant) {
        out.constant = *r;
        have_constant = true;
      } else if (*r == -out.constant) {
        std::swap(oriented.arrows[0][0], oriented.arrows[0][1]);
      } else if (*r != out.constant) {
        throw std::logic_error("derive_kempe_table: inconsistent constant");
      }
      out.orientations[size_t(idx)] = oriented.str();
    }
  return out;
}

CrossRatioWitness derive_cross_ratio_witness() {
  // Search over ordered 4-tuples of distinct points: the pair-sum triple of
  // the Segre image must agree projectively with the symmetric cross-ratio,
  // as a symbolic identity. Verified by cross-multiplication.
  const auto& segre = segre_polys();
  PolyQ s1 = segre[0] + segre[1];
  PolyQ s2 = segre[2] + segre[3];
  PolyQ s3 = segre[4] + segre[5];
  CrossRatioWitness w;
  std::array<int, 4> pts;
  for (pts[0] = 1; pts[0] <= 6; ++pts[0])
    for (pts[1] = 1; pts[1] <= 6; ++pts[1])
      for (pts[2] = 1; pts[2] <= 6; ++pts[2])
        for (pts[3] = 1; pts[3] <= 6; ++pts[3]) {
          if (pts[0] == pts[1] || pts[0] == pts[2] || pts[0] == pts[3] || pts[1] == pts[2] ||
              pts[1] == pts[3] || pts[2] == pts[3])
            continue;
          PolyQ x = bracket(pts[1], pts[2]) * bracket(pts[0], pts[3]);
          PolyQ y = bracket(pts[0], pts[1]) * bracket(pts[2], pts[3]);
          PolyQ z = bracket(pts[0], pts[2]) * bracket(pts[3], pts[1]);
          if (s1 * y == s2 * x && s2 * z == s3 * y) {
            w.point_indices = pts;
            w.found = true;
            return w;
          }
        }
  return w;
}

// ---- sampling ----

std::array<Rat, 6> random_affine_tuple(std::uint64_t seed, bool distinct) {
  std::mt19937_64 gen(seed);
  std::array<Rat, 6> t;
  for (int i = 0; i < 6; ++i) {
    for (;;) {
      long long v = uniform_int(gen, -10000, 10000);
      Rat r(v);
      bool clash = false;
      if (distinct)
        for (int j = 0; j < i; ++j) clash = clash || t[size_t(j)] == r;
      if (!clash) {
        t[size_t(i)] = r;
        break;
      }
    }
  }
  return t;
}

PointConfig random_config(int dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  PointConfig c;
  c.dim = dim;
  for (int i = 0; i < 6; ++i) {
    auto& p = c.points[size_t(i)];
    p.resize(size_t(dim + 1));
    for (;;) {
      bool nonzero = false;
      for (auto& coord : p) {
        coord = Rat(uniform_int(gen, -10000, 10000));
        nonzero = nonzero || !coord.is_zero();
      }
      if (nonzero) break;
    }
  }
  return c;
}

}  // namespace sixpoints::moduli
