#ifndef SIXPOINTS_MODULI_HPP
#define SIXPOINTS_MODULI_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sixpoints/multipoly.hpp"
#include "sixpoints/mystic.hpp"
#include "sixpoints/rat.hpp"

namespace sixpoints::moduli {

// Six ordered points in P^dim, homogeneous rational coordinates.
struct PointConfig {
  int dim = 1;  // 1, 2 or 3
  std::array<std::vector<Rat>, 6> points;

  static PointConfig from_affine_p1(const std::array<Rat, 6>& t);  // [t_i; 1]
  static PointConfig conic_p2(const std::array<Rat, 6>& t);        // [1; t; t^2]
  static PointConfig rnc_p3(const std::array<Rat, 6>& t);          // [1; t; t^2; t^3]
  // (g.c)_i = c_{g^{-1}(i)}
  PointConfig permuted(const Perm& g) const;
  void validate() const;
};

// Six letter-indexed invariant values; zero vector = GIT-unstable input.
struct InvariantVector {
  std::array<Rat, 6> values;

  Rat sum() const;
  bool is_zero() const;
  InvariantVector scaled(const Rat& c) const;
  // w_x = values[outer^{-1}(x)], optionally negated.
  InvariantVector letter_permuted(const Perm& letter_perm, bool negate = false) const;
  friend bool operator==(const InvariantVector& a, const InvariantVector& b) {
    return a.values == b.values;
  }
};

// True iff a = c*b for one scalar c (b nonzero); returns c.
std::optional<Rat> proportionality(const InvariantVector& a, const InvariantVector& b);

using SixPolys = std::array<PolyQ, 6>;

// ---- maps from point configurations ----

// P1 variable layout: u_1..u_6 -> 0..5, v_1..v_6 -> 6..11.
const SixPolys& segre_polys();
InvariantVector segre_map(const PointConfig& c);

const SixPolys& igusa_p1_polys();
InvariantVector igusa_p1_map(const PointConfig& c);

// Full symbolic expansion of (sum W^2)^2 - 4 sum W^4 over the integers;
// true iff it cancels to the zero polynomial. Slower than the Schwartz-Zippel
// route but unconditional.
bool igusa_quartic_exact_zero();

struct CrossRatioPoint {
  std::array<Rat, 3> xyz;
  bool degenerate = false;  // all three coordinates vanish
};
CrossRatioPoint sym_cross_ratio(const std::array<std::vector<Rat>, 4>& pts);
// Pair choice: three disjoint letter pairs partitioning a..f (0-based letters).
CrossRatioPoint cross_ratio_from_z(const InvariantVector& z,
                                   const std::array<std::array<int, 2>, 3>& pair_choice);

enum class DualityDirection { StoI, ItoS };
InvariantVector duality_map(const InvariantVector& in, DualityDirection dir);
SixPolys duality_map_symbolic(const SixPolys& in, DualityDirection dir);

// P2 variable layout (symbolic mode): x_1..x_6 -> 0..5, y -> 6..11, z -> 12..17.
struct P2Result {
  InvariantVector w;
  Rat v;  // conic determinant
};
P2Result p2_map(const PointConfig& c);
const SixPolys& p2_polys();  // built on first use
Rat veronese_det(const PointConfig& c);

enum class OrbitRule { R1, R2 };  // R1: stabilizer of the letter under the outer map
// P3 variable layout: w_1..w_6 -> 0..5, x -> 6..11, y -> 12..17, z -> 18..23.
const SixPolys& p3_polys(OrbitRule rule);
InvariantVector p3_map(const PointConfig& c, OrbitRule rule);

// ---- Kempe X-variables ----

// An oriented perfect matching: (p_B-p_A)(p_D-p_C)(p_F-p_E) for the stored
// pair order ((A,B),(C,D),(E,F)); flipping one pair negates the value.
struct OrientedSyntheme {
  std::array<std::array<int, 2>, 3> arrows;  // tail, head

  mystic::Syntheme underlying() const;
  std::string str() const;  // "13.26.45" = arrows 1->3, 2->6, 4->5
  static OrientedSyntheme parse(const std::string& s);
};

struct KempeVector {
  // Keyed by the underlying matching; values refer to the frozen orientation.
  std::map<mystic::Syntheme, Rat> values;
};

// Letter pair {x,y} -> matching of the outer image of the transposition (xy),
// with the frozen orientation making X = kempe_constant * (Z_x+Z_y)/2.
struct KempeDictionaryEntry {
  std::array<int, 2> letters;
  OrientedSyntheme oriented;
};
const std::vector<KempeDictionaryEntry>& kempe_dictionary();

KempeVector kempe_z_to_x(const InvariantVector& z);
struct KempeInversion {
  InvariantVector z;
  bool consistent = true;  // input satisfied the Z-image linear relations
};
KempeInversion kempe_x_to_z(const KempeVector& x);

// Direct evaluation of an oriented X-variable on a P1 configuration.
Rat kempe_eval(const PointConfig& c, const OrientedSyntheme& s);

// ---- derivations backing the frozen constants (used by golden tests) ----

Rat derive_lambda_sto_i();                      // StoI(segre) = lambda * igusa, symbolic
std::optional<Rat> derive_p2_kappa_raw(std::uint64_t seed, int configs);
Rat derive_p2_conic_constant();                 // symbolic, in affine t variables
Rat derive_kempe_constant();                    // symbolic, also checks all 15 orientations
struct KempeDerivation {
  Rat constant;
  std::array<std::string, 15> orientations;  // lexicographic letter-pair order
};
KempeDerivation derive_kempe_table();           // discovery; ignores the frozen table
struct CrossRatioWitness {
  std::array<int, 4> point_indices;  // 1-based points of the configuration
  bool found = false;
};
CrossRatioWitness derive_cross_ratio_witness();

// ---- seeded random sampling ----

std::array<Rat, 6> random_affine_tuple(std::uint64_t seed, bool distinct);
PointConfig random_config(int dim, std::uint64_t seed);

}  // namespace sixpoints::moduli

#endif
