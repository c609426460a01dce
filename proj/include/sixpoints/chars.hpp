#ifndef SIXPOINTS_CHARS_HPP
#define SIXPOINTS_CHARS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sixpoints/perm.hpp"
#include "sixpoints/rat.hpp"

namespace sixpoints::reps {

// Class function on S_n, keyed by cycle type. Representations are handled
// purely at this level; all sums run over the full enumerated group.
struct Character {
  int n = 0;
  std::map<CycleType, long long> values;

  long long at(const CycleType& t) const;
};

Character trivial_char(int n);
Character sign_char(int n);

// Character of a permutation action of S_n, value = fixed points of
// action(g), times sign(g) when sign_twist is set. The action map is checked
// to be a homomorphism (complete check via generators) and the result is
// checked to be class-constant.
Character perm_character(int n, const std::function<Perm(const Perm&)>& action,
                         bool sign_twist = false);

Character char_add(const Character& a, const Character& b);
Character char_sub(const Character& a, const Character& b);
Character char_tensor(const Character& a, const Character& b);
Rat inner_product(const Character& a, const Character& b);

// The six named 5-dimensional characters.
Character chi_b5();   // standard rep of S6
Character chi_b5p();  // B5 (x) sign
Character chi_o5();   // outer automorphism rep
Character chi_o5p();  // signed outer automorphism rep
Character chi_f5();   // S5 pentagon rep minus trivial
Character chi_f5p();  // F5 (x) sign

// Trace character of the 6-dimensional action on the twelve signed labels
// Z_a..Z_f, Z_abar..Z_fbar with Z_xbar = -Z_x (antisymmetric) or
// Z_xbar = Z_x (symmetric); group_n selects S5 (5-cycles) or S6 (colorings).
Character twelve_variable_character(bool antisymmetric, int group_n);

// Restriction along the standard inclusion S5 < S6 fixing the point 6.
Character restrict_to_s5(const Character& chi6);

struct RestrictionReport {
  bool o5_restricts_to_f5 = false;
  bool o5p_restricts_to_f5p = false;
  bool b5_restriction_differs = false;
  CycleType differing_class;
};
RestrictionReport restriction_check();

}  // namespace sixpoints::reps

#endif
