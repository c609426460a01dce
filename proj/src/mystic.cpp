#include "sixpoints/mystic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace sixpoints::mystic {

namespace {

// Figure-derived letter dictionary: the white 5-cycle of each pentagon.
// Frozen; the golden test pins it and every letter-sensitive identity
// downstream depends on it.
constexpr std::array<std::array<int, 5>, 6> kWhiteCycles = {{
    {1, 2, 3, 4, 5},  // a
    {1, 3, 4, 2, 5},  // b
    {1, 2, 4, 5, 3},  // c
    {1, 4, 2, 3, 5},  // d
    {1, 2, 5, 3, 4},  // e
    {1, 3, 2, 5, 4},  // f
}};

constexpr std::uint32_t kAllTriangles = 0xFFFFFu;

std::uint16_t cycle_edge_mask(const std::array<int, 5>& cyc) {
  std::uint16_t m = 0;
  for (int k = 0; k < 5; ++k) m |= std::uint16_t(1) << edge_index(cyc[size_t(k)], cyc[size_t((k + 1) % 5)]);
  return m;
}

// Recover the canonical vertex sequence of a 5-cycle edge mask on {1..5}.
std::array<int, 5> cycle_from_mask(std::uint16_t mask) {
  std::array<std::array<int, 2>, 6> nbr{};  // per vertex: two neighbors
  std::array<int, 6> deg{};
  for (int e = 0; e < 10; ++e) {
    if (!(mask >> e & 1)) continue;
    auto [i, j] = edge_vertices(e);
    if (deg[size_t(i)] >= 2 || deg[size_t(j)] >= 2)
      throw std::logic_error("cycle_from_mask: vertex degree exceeds 2");
    nbr[size_t(i)][size_t(deg[size_t(i)]++)] = j;
    nbr[size_t(j)][size_t(deg[size_t(j)]++)] = i;
  }
  for (int v = 1; v <= 5; ++v)
    if (deg[size_t(v)] != 2) throw std::logic_error("cycle_from_mask: not a 5-cycle");
  std::array<int, 5> seq{};
  seq[0] = 1;
  seq[1] = std::min(nbr[1][0], nbr[1][1]);
  for (int k = 2; k < 5; ++k) {
    int prev = seq[size_t(k - 2)], cur = seq[size_t(k - 1)];
    seq[size_t(k)] = nbr[size_t(cur)][0] == prev ? nbr[size_t(cur)][1] : nbr[size_t(cur)][0];
  }
  if (nbr[size_t(seq[4])][0] != 1 && nbr[size_t(seq[4])][1] != 1)
    throw std::logic_error("cycle_from_mask: not a single 5-cycle");
  return seq;
}

std::uint16_t apply_perm_edges(const Perm& g, std::uint16_t mask) {
  std::uint16_t r = 0;
  for (int e = 0; e < 10; ++e)
    if (mask >> e & 1) {
      auto [i, j] = edge_vertices(e);
      r |= std::uint16_t(1) << edge_index(g(i), g(j));
    }
  return r;
}

std::uint32_t apply_perm_triangles(const Perm& g, std::uint32_t mask) {
  std::uint32_t r = 0;
  for (int t = 0; t < 20; ++t)
    if (mask >> t & 1) {
      auto v = triangle_vertices(t);
      r |= std::uint32_t(1) << triangle_index(g(v[0]), g(v[1]), g(v[2]));
    }
  return r;
}

std::uint32_t encode_perm(const Perm& g) {
  std::uint32_t k = 0;
  for (int i = g.n(); i >= 1; --i) k = k * 8 + std::uint32_t(g(i));
  return k;
}

struct Tables {
  std::array<Pentagon, 6> pentagons;
  std::array<TriangleColoring, 6> colorings;

  std::vector<Perm> s5, s6;
  std::unordered_map<std::uint32_t, int> s5_index, s6_index;

  // Signed letter actions, indexed by group element.
  std::vector<SignedLetterAction> i_action;   // S5 on pentagons
  std::vector<SignedLetterAction> t_action;   // S6 on colorings
  std::vector<int> t_inverse;                 // s6 idx of T^{-1}(letter elt)

  // Coset route: final letter->points table and the alignment permutation.
  std::vector<Perm> f_action;
  Perm alignment;

  std::array<Pentad, 6> pentads;
  std::vector<IcosLabeling> icosahedra;
  std::array<std::uint32_t, 10> axis_face_triples{};  // faces of the model, as axis sets
};

int lookup(const std::unordered_map<std::uint32_t, int>& m, const Perm& g) {
  auto it = m.find(encode_perm(g));
  if (it == m.end()) throw std::invalid_argument("permutation outside enumerated group");
  return it->second;
}

SignedLetterAction letter_action_on_colorings(const Tables& tb, const Perm& g6) {
  SignedLetterAction act;
  std::vector<int> img(6);
  for (int x = 0; x < 6; ++x) {
    std::uint32_t b = apply_perm_triangles(g6, tb.colorings[size_t(x)].black);
    int y = -1;
    bool swap = false;
    for (int cand = 0; cand < 6; ++cand) {
      if (tb.colorings[size_t(cand)].black == b) { y = cand; break; }
      if (tb.colorings[size_t(cand)].black == (~b & kAllTriangles)) { y = cand; swap = true; break; }
    }
    if (y < 0) throw std::logic_error("coloring action: image is not a canonical coloring");
    img[size_t(x)] = y + 1;
    if (swap) act.swap_mask |= std::uint8_t(1) << x;
  }
  act.letters = Perm::from_images(img);
  return act;
}

SignedLetterAction letter_action_on_pentagons(const Tables& tb, const Perm& g5) {
  SignedLetterAction act;
  std::vector<int> img(6);
  for (int x = 0; x < 6; ++x) {
    std::uint16_t w = apply_perm_edges(g5, tb.pentagons[size_t(x)].white_mask);
    int y = -1;
    bool swap = false;
    for (int cand = 0; cand < 6; ++cand) {
      if (tb.pentagons[size_t(cand)].white_mask == w) { y = cand; break; }
      if (tb.pentagons[size_t(cand)].black_mask == w) { y = cand; swap = true; break; }
    }
    if (y < 0) throw std::logic_error("pentagon action: image is not a canonical pentagon");
    img[size_t(x)] = y + 1;
    if (swap) act.swap_mask |= std::uint8_t(1) << x;
  }
  act.letters = Perm::from_images(img);
  return act;
}

// Icosahedron model over Q(phi): axis representatives; vertex 2k is the
// representative of axis k, vertex 2k+1 its antipode.
std::array<std::array<QPhi, 3>, 6> axis_reps() {
  QPhi one(Rat(1)), phi = QPhi::phi(), zero;
  return {{{one, phi, zero},
           {one, -phi, zero},
           {zero, one, phi},
           {zero, one, -phi},
           {phi, zero, one},
           {-phi, zero, one}}};
}

std::vector<std::array<QPhi, 3>> model_vertices(bool conjugated) {
  std::vector<std::array<QPhi, 3>> v;
  for (const auto& rep : axis_reps()) {
    std::array<QPhi, 3> r = rep, n;
    if (conjugated)
      for (auto& c : r) c = c.conj();
    for (int i = 0; i < 3; ++i) n[size_t(i)] = -r[size_t(i)];
    v.push_back(r);
    v.push_back(n);
  }
  return v;
}

QPhi dist2(const std::array<QPhi, 3>& a, const std::array<QPhi, 3>& b) {
  QPhi s;
  for (int i = 0; i < 3; ++i) {
    QPhi d = a[size_t(i)] - b[size_t(i)];
    s += d * d;
  }
  return s;
}

// Face triples (as axis-index sets) of the convex body spanned by the given
// 12 vertices: triangles whose sides all realize the minimal distance.
std::vector<std::array<int, 3>> face_axis_triples(const std::vector<std::array<QPhi, 3>>& verts,
                                                  int* face_count) {
  const int n = int(verts.size());
  QPhi min_d2;
  bool have = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QPhi d = dist2(verts[size_t(i)], verts[size_t(j)]);
      if (!have || d < min_d2) { min_d2 = d; have = true; }
    }
  std::vector<std::vector<bool>> adj(size_t(n), std::vector<bool>(size_t(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist2(verts[size_t(i)], verts[size_t(j)]) == min_d2) adj[size_t(i)][size_t(j)] = adj[size_t(j)][size_t(i)] = true;
  std::vector<std::array<int, 3>> triples;
  int faces = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (adj[size_t(i)][size_t(j)] && adj[size_t(i)][size_t(k)] && adj[size_t(j)][size_t(k)]) {
          ++faces;
          std::array<int, 3> ax = {i / 2, j / 2, k / 2};
          std::sort(ax.begin(), ax.end());
          if (ax[0] == ax[1] || ax[1] == ax[2])
            throw std::logic_error("icosahedron face uses an axis twice");
          if (std::find(triples.begin(), triples.end(), ax) == triples.end()) triples.push_back(ax);
        }
  std::sort(triples.begin(), triples.end());
  if (face_count) *face_count = faces;
  return triples;
}

std::uint32_t triples_mask_for_labeling(const std::array<std::uint32_t, 10>& axis_triples_packed,
                                        const std::array<int, 6>& label_of_axis) {
  std::uint32_t mask = 0;
  for (std::uint32_t packed : axis_triples_packed) {
    int a = int(packed & 7), b = int(packed >> 3 & 7), c = int(packed >> 6 & 7);
    mask |= std::uint32_t(1) << triangle_index(label_of_axis[size_t(a)], label_of_axis[size_t(b)],
                                               label_of_axis[size_t(c)]);
  }
  return mask;
}

int pentagon_letter_of_triples(const Tables& tb, std::uint32_t triples) {
  // Edges {x,y} with {x,y,6} a face triple form one color class of a pentagon.
  std::uint16_t mask = 0;
  for (int t = 0; t < 20; ++t) {
    if (!(triples >> t & 1)) continue;
    auto v = triangle_vertices(t);
    if (v[2] != 6) continue;  // triples are sorted; 6 is last if present
    mask |= std::uint16_t(1) << edge_index(v[0], v[1]);
  }
  for (int x = 0; x < 6; ++x)
    if (tb.pentagons[size_t(x)].white_mask == mask || tb.pentagons[size_t(x)].black_mask == mask)
      return x;
  throw std::logic_error("icosahedron cycle around 6 is not a pentagon class");
}

void build_icosahedra(Tables& tb) {
  int faces = 0;
  auto verts = model_vertices(false);
  auto triples = face_axis_triples(verts, &faces);
  if (verts.size() != 12 || faces != 20 || triples.size() != 10)
    throw std::logic_error("icosahedron model combinatorics are off");
  for (std::size_t i = 0; i < 10; ++i)
    tb.axis_face_triples[i] =
        std::uint32_t(triples[i][0]) | std::uint32_t(triples[i][1]) << 3 | std::uint32_t(triples[i][2]) << 6;

  // Symmetries act on the six axes; the induced group has order 60 (the
  // central inversion acts trivially on axes). Quotient the 720 labelings.
  std::vector<Perm> aut;
  for (const Perm& g : enumerate_group(6)) {
    bool ok = true;
    for (const auto& t : triples) {
      std::array<int, 3> u = {g(t[0] + 1) - 1, g(t[1] + 1) - 1, g(t[2] + 1) - 1};
      std::sort(u.begin(), u.end());
      if (!std::binary_search(triples.begin(), triples.end(), u)) { ok = false; break; }
    }
    if (ok) aut.push_back(g);
  }
  if (aut.size() != 60) throw std::logic_error("icosahedral axis symmetry group should have order 60");

  std::vector<std::uint32_t> masks;
  for (const Perm& lab : enumerate_group(6)) {
    std::array<int, 6> label_of_axis{};
    for (int k = 0; k < 6; ++k) label_of_axis[size_t(k)] = lab(k + 1);
    masks.push_back(triples_mask_for_labeling(tb.axis_face_triples, label_of_axis));
  }
  std::vector<std::uint32_t> distinct = masks;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() != 12) throw std::logic_error("expected 12 icosahedral labelings");
  // Orbit sanity: each class must be hit once per symmetry.
  for (std::uint32_t m : distinct)
    if (std::count(masks.begin(), masks.end(), m) != 60)
      throw std::logic_error("labeling orbit has unexpected size");

  tb.icosahedra.resize(12);
  for (int i = 0; i < 12; ++i) {
    IcosLabeling& l = tb.icosahedra[size_t(i)];
    l.triples = distinct[size_t(i)];
    if (std::popcount(l.triples) != 10) throw std::logic_error("labeling must carry 10 triples");
    l.pentagon_letter = pentagon_letter_of_triples(tb, l.triples);
  }
  for (int i = 0; i < 12; ++i) {
    std::uint32_t comp = ~tb.icosahedra[size_t(i)].triples & kAllTriangles;
    auto it = std::find_if(tb.icosahedra.begin(), tb.icosahedra.end(),
                           [&](const IcosLabeling& o) { return o.triples == comp; });
    if (it == tb.icosahedra.end()) throw std::logic_error("labeling has no opposite");
    tb.icosahedra[size_t(i)].opposite = int(it - tb.icosahedra.begin());
  }
}

void build_cosets(Tables& tb) {
  // i(S5) as a subgroup of the letter S6.
  std::vector<Perm> subgroup;
  subgroup.reserve(120);
  for (const auto& act : tb.i_action) subgroup.push_back(act.letters);

  std::vector<int> coset_id(720, -1);
  std::vector<int> rep;
  for (int gi = 0; gi < 720; ++gi) {
    if (coset_id[size_t(gi)] >= 0) continue;
    int c = int(rep.size());
    rep.push_back(gi);
    for (const Perm& h : subgroup)
      coset_id[size_t(lookup(tb.s6_index, compose(tb.s6[size_t(gi)], h)))] = c;
  }
  if (rep.size() != 6) throw std::logic_error("expected 6 cosets of i(S5)");

  // Base action on cosets numbered in discovery (= smallest member) order.
  std::vector<Perm> base(720);
  for (int gi = 0; gi < 720; ++gi) {
    std::vector<int> img(6);
    for (int c = 0; c < 6; ++c)
      img[size_t(c)] = coset_id[size_t(lookup(tb.s6_index, compose(tb.s6[size_t(gi)], tb.s6[size_t(rep[size_t(c)])])))] + 1;
    base[size_t(gi)] = Perm::from_images(img);
  }

  // Align the numbering so that the coset route inverts the triangle route.
  // Exactly one relabeling works; its existence is part of what is verified.
  Perm gen_a = compose(tb.s6[0], parse_cycles("(a b)", 6));  // s6[0] is identity
  Perm gen_b = parse_cycles("(a b c d e f)", 6);
  auto target = [&](const Perm& letter_elt) {
    return tb.s6[size_t(tb.t_inverse[size_t(lookup(tb.s6_index, letter_elt))])];
  };
  Perm want_a = target(gen_a), want_b = target(gen_b);
  const Perm& act_a = base[size_t(lookup(tb.s6_index, gen_a))];
  const Perm& act_b = base[size_t(lookup(tb.s6_index, gen_b))];
  std::vector<Perm> found;
  for (const Perm& d : tb.s6) {
    Perm di = inverse(d);
    if (compose(d, compose(act_a, di)) == want_a && compose(d, compose(act_b, di)) == want_b)
      found.push_back(d);
  }
  if (found.size() != 1)
    throw std::logic_error("coset numbering alignment is not unique: " + std::to_string(found.size()));
  tb.alignment = found[0];

  Perm ai = inverse(tb.alignment);
  tb.f_action.resize(720);
  for (int gi = 0; gi < 720; ++gi)
    tb.f_action[size_t(gi)] = compose(tb.alignment, compose(base[size_t(gi)], ai));
}

Pentad pentad_from_pentagon_impl(const Pentagon& p) {
  std::array<Syntheme, 5> syn;
  int out = 0;
  for (int e = 0; e < 10; ++e) {
    if (!(p.white_mask >> e & 1)) continue;
    auto [a, b] = edge_vertices(e);
    int partner = -1;
    for (int e2 = 0; e2 < 10; ++e2) {
      if (!(p.black_mask >> e2 & 1)) continue;
      auto [c, d] = edge_vertices(e2);
      if (c != a && c != b && d != a && d != b) {
        if (partner >= 0) throw std::logic_error("white edge with two disjoint black edges");
        partner = e2;
      }
    }
    if (partner < 0) throw std::logic_error("white edge with no disjoint black edge");
    auto [c, d] = edge_vertices(partner);
    int rest = 1 + 2 + 3 + 4 + 5 - a - b - c - d;
    syn[size_t(out++)] = Syntheme::from_pairs({{{a, b}, {c, d}, {rest, 6}}});
  }
  std::sort(syn.begin(), syn.end());
  return Pentad{syn};
}

const Tables& tables() {
  static const Tables tb = [] {
    Tables t;
    // Pentagons from the frozen dictionary.
    std::vector<std::uint16_t> all_masks;
    for (int x = 0; x < 6; ++x) {
      Pentagon& p = t.pentagons[size_t(x)];
      p.letter = x;
      p.white_cycle = kWhiteCycles[size_t(x)];
      p.white_mask = cycle_edge_mask(p.white_cycle);
      p.black_mask = std::uint16_t(~p.white_mask & 0x3FF);
      cycle_from_mask(p.black_mask);  // validates the complement is a 5-cycle
      all_masks.push_back(p.white_mask);
      all_masks.push_back(p.black_mask);
    }
    std::sort(all_masks.begin(), all_masks.end());
    if (std::unique(all_masks.begin(), all_masks.end()) != all_masks.end())
      throw std::logic_error("letter dictionary does not cover 12 distinct 5-cycles");

    for (int x = 0; x < 6; ++x) t.colorings[size_t(x)] = pentagon_to_triangles(t.pentagons[size_t(x)]);

    t.s5 = enumerate_group(5);
    t.s6 = enumerate_group(6);
    for (int i = 0; i < int(t.s5.size()); ++i) t.s5_index.emplace(encode_perm(t.s5[size_t(i)]), i);
    for (int i = 0; i < int(t.s6.size()); ++i) t.s6_index.emplace(encode_perm(t.s6[size_t(i)]), i);

    t.i_action.reserve(120);
    for (const Perm& g : t.s5) t.i_action.push_back(letter_action_on_pentagons(t, g));
    t.t_action.reserve(720);
    for (const Perm& g : t.s6) t.t_action.push_back(letter_action_on_colorings(t, g));

    t.t_inverse.assign(720, -1);
    for (int gi = 0; gi < 720; ++gi) {
      int li = lookup(t.s6_index, t.t_action[size_t(gi)].letters);
      if (t.t_inverse[size_t(li)] != -1) throw std::logic_error("triangle action is not injective");
      t.t_inverse[size_t(li)] = gi;
    }

    build_cosets(t);

    for (int x = 0; x < 6; ++x) t.pentads[size_t(x)] = pentad_from_pentagon_impl(t.pentagons[size_t(x)]);

    build_icosahedra(t);
    return t;
  }();
  return tb;
}

}  // namespace

int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 5 || i == j) throw std::invalid_argument("edge_index: bad K5 edge");
  static constexpr int base[5] = {0, 0, 4, 7, 9};  // offsets for i=1..4
  return base[size_t(i)] + (j - i - 1) + (i == 1 ? 0 : 0);
}

std::pair<int, int> edge_vertices(int idx) {
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (edge_index(i, j) == idx) return {i, j};
  throw std::invalid_argument("edge_vertices: bad index");
}

int triangle_index(int a, int b, int c) {
  std::array<int, 3> v = {a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] < 1 || v[2] > 6 || v[0] == v[1] || v[1] == v[2])
    throw std::invalid_argument("triangle_index: bad triangle");
  int idx = 0;
  for (int x = 1; x <= 6; ++x)
    for (int y = x + 1; y <= 6; ++y)
      for (int z = y + 1; z <= 6; ++z) {
        if (x == v[0] && y == v[1] && z == v[2]) return idx;
        ++idx;
      }
  throw std::logic_error("triangle_index: unreachable");
}

std::array<int, 3> triangle_vertices(int idx) {
  int k = 0;
  for (int x = 1; x <= 6; ++x)
    for (int y = x + 1; y <= 6; ++y)
      for (int z = y + 1; z <= 6; ++z)
        if (k++ == idx) return {x, y, z};
  throw std::invalid_argument("triangle_vertices: bad index");
}

Pentagon Pentagon::swapped() const {
  Pentagon p;
  p.letter = letter;
  p.white_mask = black_mask;
  p.black_mask = white_mask;
  p.white_cycle = cycle_from_mask(p.white_mask);
  return p;
}

Syntheme Syntheme::from_pairs(std::array<std::array<int, 2>, 3> p) {
  int seen = 0;
  for (auto& pr : p) {
    if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
    for (int v : pr) {
      if (v < 1 || v > 6 || (seen >> v & 1))
        throw std::invalid_argument("Syntheme: pairs must partition {1..6}");
      seen |= 1 << v;
    }
  }
  std::sort(p.begin(), p.end());
  return Syntheme{p};
}

Perm Syntheme::as_perm() const {
  std::vector<int> img(6);
  for (const auto& pr : pairs) {
    img[size_t(pr[0] - 1)] = pr[1];
    img[size_t(pr[1] - 1)] = pr[0];
  }
  return Perm::from_images(img);
}

Syntheme Syntheme::from_perm(const Perm& g) {
  if (g.n() != 6 || cycle_type(g) != CycleType{2, 2, 2})
    throw std::invalid_argument("Syntheme::from_perm: need cycle type {2,2,2}");
  std::array<std::array<int, 2>, 3> p{};
  int out = 0;
  for (int i = 1; i <= 6; ++i)
    if (g(i) > i) p[size_t(out++)] = {i, g(i)};
  return from_pairs(p);
}

std::string Syntheme::str() const {
  std::string s;
  for (int k = 0; k < 3; ++k) {
    if (k) s += "/";
    s += std::to_string(pairs[size_t(k)][0]) + std::to_string(pairs[size_t(k)][1]);
  }
  return s;
}

const std::array<Pentagon, 6>& enumerate_pentagons() { return tables().pentagons; }
const std::array<TriangleColoring, 6>& canonical_colorings() { return tables().colorings; }

std::vector<std::uint32_t> enumerate_triangle_colorings_brute() {
  // Complementary triangles get opposite colors by construction; choose the
  // color of one triangle per complementary pair (2^10 candidates) and keep
  // the colorings where every 4-subset sees two triangles of each color.
  std::array<std::array<int, 2>, 10> pairs{};
  int np = 0;
  std::array<bool, 20> done{};
  for (int tdx = 0; tdx < 20; ++tdx) {
    if (done[size_t(tdx)]) continue;
    auto v = triangle_vertices(tdx);
    int rest[3], r = 0;
    for (int x = 1; x <= 6; ++x)
      if (x != v[0] && x != v[1] && x != v[2]) rest[r++] = x;
    int cdx = triangle_index(rest[0], rest[1], rest[2]);
    done[size_t(tdx)] = done[size_t(cdx)] = true;
    pairs[size_t(np++)] = {tdx, cdx};
  }

  std::vector<std::array<int, 4>> tetra_triangles;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d)
          tetra_triangles.push_back({triangle_index(a, b, c), triangle_index(a, b, d),
                                     triangle_index(a, c, d), triangle_index(b, c, d)});

  std::vector<std::uint32_t> classes;
  for (int bits = 0; bits < 1024; ++bits) {
    std::uint32_t black = 0;
    for (int k = 0; k < 10; ++k)
      black |= std::uint32_t(1) << pairs[size_t(k)][size_t(bits >> k & 1)];
    bool ok = true;
    for (const auto& tt : tetra_triangles) {
      int nb = 0;
      for (int tdx : tt) nb += black >> tdx & 1;
      if (nb != 2) { ok = false; break; }
    }
    if (!ok) continue;
    std::uint32_t rep = std::min(black, ~black & kAllTriangles);
    if (std::find(classes.begin(), classes.end(), rep) == classes.end()) classes.push_back(rep);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<Syntheme> enumerate_synthemes() {
  std::vector<Syntheme> out;
  for (int b = 2; b <= 6; ++b) {
    int rest[4], r = 0;
    for (int x = 2; x <= 6; ++x)
      if (x != b) rest[r++] = x;
    // three matchings of the remaining four
    static constexpr int m[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& mm : m)
      out.push_back(Syntheme::from_pairs(
          {{{1, b}, {rest[mm[0]], rest[mm[1]]}, {rest[mm[2]], rest[mm[3]]}}}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pentad> enumerate_all_pentads_brute() {
  auto syn = enumerate_synthemes();
  auto pair_mask = [](const Syntheme& s) {
    int m = 0;
    for (const auto& pr : s.pairs) m |= 1 << (pr[0] * 6 + pr[1]);
    return m;
  };
  std::vector<int> masks;
  for (const auto& s : syn) masks.push_back(pair_mask(s));

  std::vector<Pentad> out;
  std::array<int, 5> pick{};
  auto rec = [&](auto&& self, int from, int depth, long long covered) -> void {
    if (depth == 5) {
      std::array<Syntheme, 5> ps;
      for (int k = 0; k < 5; ++k) ps[size_t(k)] = syn[size_t(pick[size_t(k)])];
      std::sort(ps.begin(), ps.end());
      out.push_back(Pentad{ps});
      return;
    }
    for (int i = from; i < 15; ++i) {
      if (covered & masks[size_t(i)]) continue;
      pick[size_t(depth)] = i;
      self(self, i + 1, depth + 1, covered | masks[size_t(i)]);
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<IcosLabeling>& enumerate_icosahedra() { return tables().icosahedra; }

Perm s5_action_on_pentagons(const Perm& g5) { return s5_action_signed(g5).letters; }

SignedLetterAction s5_action_signed(const Perm& g5) {
  const Tables& tb = tables();
  return tb.i_action[size_t(lookup(tb.s5_index, g5))];
}

SignedLetterAction s6_action_signed(const Perm& g6) {
  const Tables& tb = tables();
  return tb.t_action[size_t(lookup(tb.s6_index, g6))];
}

Perm outer_via_triangles(const Perm& g6) { return s6_action_signed(g6).letters; }

Perm outer_via_cosets(const Perm& letter_g) {
  const Tables& tb = tables();
  return tb.f_action[size_t(lookup(tb.s6_index, letter_g))];
}

const Perm& coset_numbering_alignment() { return tables().alignment; }

TriangleColoring pentagon_to_triangles(const Pentagon& p) {
  TriangleColoring c;
  for (int t = 0; t < 20; ++t) {
    auto v = triangle_vertices(t);
    bool black;
    if (v[2] == 6) {
      // triangle 6AB is colored like edge AB
      black = !p.white_has_edge(v[0], v[1]);
    } else {
      // triangle CDE is colored opposite to the complementary edge AB
      int a = -1, b = -1;
      for (int x = 1; x <= 5; ++x)
        if (x != v[0] && x != v[1] && x != v[2]) (a < 0 ? a : b) = x;
      black = p.white_has_edge(a, b);
    }
    if (black) c.black |= std::uint32_t(1) << t;
  }
  return c;
}

Pentad pentad_of_pentagon(const Pentagon& p) { return pentad_from_pentagon_impl(p); }

int icosahedron_to_pentagon(const IcosLabeling& l) {
  return pentagon_letter_of_triples(tables(), l.triples);
}

GoldenReport golden_conjugation_check() {
  GoldenReport rep;
  auto orig = model_vertices(false);
  auto conj = model_vertices(true);
  rep.vertex_count = int(orig.size());
  int f1 = 0, f2 = 0;
  auto t1 = face_axis_triples(orig, &f1);
  auto t2 = face_axis_triples(conj, &f2);
  rep.face_count = f1;
  if (f2 != f1 || t1.size() != 10 || t2.size() != 10) return rep;
  // Fixed antipodal labeling: axis k carries label k+1 in both bodies.
  std::array<int, 6> ident = {1, 2, 3, 4, 5, 6};
  std::array<std::uint32_t, 10> p1{}, p2{};
  for (std::size_t i = 0; i < 10; ++i) {
    p1[i] = std::uint32_t(t1[i][0]) | std::uint32_t(t1[i][1]) << 3 | std::uint32_t(t1[i][2]) << 6;
    p2[i] = std::uint32_t(t2[i][0]) | std::uint32_t(t2[i][1]) << 3 | std::uint32_t(t2[i][2]) << 6;
  }
  rep.original_triples = triples_mask_for_labeling(p1, ident);
  rep.conjugated_triples = triples_mask_for_labeling(p2, ident);
  rep.conjugate_is_opposite = (rep.original_triples & rep.conjugated_triples) == 0 &&
                              std::popcount(rep.original_triples) == 10 &&
                              std::popcount(rep.conjugated_triples) == 10;
  return rep;
}

int stabilizer_order_check() {
  const Tables& tb = tables();
  int count = 0;
  for (const auto& act : tb.i_action)
    if (act.letters(1) == 1) ++count;
  return count;
}

char letter_name(int letter) {
  if (letter < 0 || letter > 5) throw std::invalid_argument("letter_name: out of range");
  return char('a' + letter);
}

int letter_from_name(char c) {
  if (c < 'a' || c > 'f') throw std::invalid_argument("letter_from_name: expected a..f");
  return c - 'a';
}

std::string white_cycle_str(const Pentagon& p) {
  std::string s;
  for (int v : p.white_cycle) s += std::to_string(v);
  return s;
}

const std::vector<Perm>& s6_elements() { return tables().s6; }
const std::vector<Perm>& s5_elements() { return tables().s5; }
int s6_index(const Perm& g) { return lookup(tables().s6_index, g); }

}  // namespace sixpoints::mystic
