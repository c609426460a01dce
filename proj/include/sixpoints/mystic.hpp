#ifndef SIXPOINTS_MYSTIC_HPP
#define SIXPOINTS_MYSTIC_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sixpoints/perm.hpp"
#include "sixpoints/qphi.hpp"

namespace sixpoints::mystic {

// ---- fixed indexings ----

// Edges of K5: pairs 1<=i<j<=5 in lexicographic order, 10 of them.
int edge_index(int i, int j);
std::pair<int, int> edge_vertices(int idx);

// Triangles on {1..6}: 3-subsets in lexicographic order, 20 of them.
int triangle_index(int a, int b, int c);
std::array<int, 3> triangle_vertices(int idx);

// ---- combinatorial avatars ----

// A 2-coloring of the edges of K5 whose color classes are both 5-cycles.
// White/black follow the canonical coloring (frozen letter dictionary);
// swapped() is the global color involution.
struct Pentagon {
  int letter = -1;                   // 0..5 for a..f, -1 for unlabeled/swapped
  std::array<int, 5> white_cycle{};  // vertex sequence, starts at 1
  std::uint16_t white_mask = 0;      // edge-index bitmask
  std::uint16_t black_mask = 0;

  Pentagon swapped() const;
  bool white_has_edge(int i, int j) const { return white_mask >> edge_index(i, j) & 1; }
};

// A 2-coloring of the 20 triangles on {1..6}; bit set = black.
struct TriangleColoring {
  std::uint32_t black = 0;

  bool is_black(int a, int b, int c) const { return black >> triangle_index(a, b, c) & 1; }
  std::uint32_t white() const { return ~black & 0xFFFFFu; }
  friend bool operator==(TriangleColoring x, TriangleColoring y) { return x.black == y.black; }
};

// A perfect matching of {1..6}: three disjoint pairs, stored sorted.
struct Syntheme {
  std::array<std::array<int, 2>, 3> pairs{};

  static Syntheme from_pairs(std::array<std::array<int, 2>, 3> p);
  // The triple transposition with this matching as its 2-cycles.
  Perm as_perm() const;
  static Syntheme from_perm(const Perm& g);  // requires cycle type {2,2,2}
  std::string str() const;                   // "12/35/46"

  friend bool operator==(const Syntheme& x, const Syntheme& y) { return x.pairs == y.pairs; }
  friend bool operator<(const Syntheme& x, const Syntheme& y) { return x.pairs < y.pairs; }
};

// Five synthemes jointly covering all 15 pairs exactly once.
struct Pentad {
  std::array<Syntheme, 5> synthemes{};  // sorted

  friend bool operator==(const Pentad& x, const Pentad& y) { return x.synthemes == y.synthemes; }
  friend bool operator<(const Pentad& x, const Pentad& y) { return x.synthemes < y.synthemes; }
};

// An icosahedron vertex labeling (antipodal vertices equal), recorded by its
// ten face triples as a 20-bit mask over the triangle indexing.
struct IcosLabeling {
  std::uint32_t triples = 0;
  int opposite = -1;        // index of the labeling sharing no triple
  int pentagon_letter = -1; // via the cyclic order around label 6
};

// ---- enumerations (each independently brute-forced where the spec asks) ----

const std::array<Pentagon, 6>& enumerate_pentagons();
const std::array<TriangleColoring, 6>& canonical_colorings();  // letter-indexed
std::vector<std::uint32_t> enumerate_triangle_colorings_brute();  // unordered classes
std::vector<Syntheme> enumerate_synthemes();
std::vector<Pentad> enumerate_all_pentads_brute();
const std::vector<IcosLabeling>& enumerate_icosahedra();

// ---- the four constructions ----

// Letter permutation induced by g in S5 permuting pentagon vertices.
Perm s5_action_on_pentagons(const Perm& g5);

// Signed actions: the letter permutation together with, per source letter,
// whether the canonical white class lands on the image's black class.
struct SignedLetterAction {
  Perm letters;
  std::uint8_t swap_mask = 0;  // bit x: white of letter x maps to black of image
};
SignedLetterAction s5_action_signed(const Perm& g5);
SignedLetterAction s6_action_signed(const Perm& g6);

// The S6-action on triangle colorings: points -> letters (the outer map).
Perm outer_via_triangles(const Perm& g6);

// The action on the six cosets of i(S5) in S_{a..f}: letters -> points.
// Inverse of outer_via_triangles once the coset numbering is aligned; the
// alignment permutation is computed once and exposed for the report.
Perm outer_via_cosets(const Perm& letter_g);
const Perm& coset_numbering_alignment();

TriangleColoring pentagon_to_triangles(const Pentagon& p);
Pentad pentad_of_pentagon(const Pentagon& p);

int icosahedron_to_pentagon(const IcosLabeling& l);

struct GoldenReport {
  int vertex_count = 0;
  int face_count = 0;
  bool conjugate_is_opposite = false;
  std::uint32_t original_triples = 0;
  std::uint32_t conjugated_triples = 0;
};
GoldenReport golden_conjugation_check();

int stabilizer_order_check();  // |{g in S5 : i(g) fixes letter a}|

// ---- letter dictionary ----

char letter_name(int letter);           // 0 -> 'a'
int letter_from_name(char c);           // 'a' -> 0
std::string white_cycle_str(const Pentagon& p);

// Group tables shared across modules (built once, immutable afterwards).
const std::vector<Perm>& s6_elements();
const std::vector<Perm>& s5_elements();
int s6_index(const Perm& g);

}  // namespace sixpoints::mystic

#endif
