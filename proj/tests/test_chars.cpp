#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sixpoints/chars.hpp"
#include "sixpoints/mystic.hpp"

using namespace sixpoints;
using namespace sixpoints::reps;

TEST_CASE("pentagon permutation character: fixed points at the identity and at (1 2)") {
  Character chi = perm_character(5, [](const Perm& g) { return mystic::s5_action_on_pentagons(g); });
  CHECK(chi.at(CycleType{1, 1, 1, 1, 1}) == 6);
  // (1 2) acts as (a d)(b c)(e f): no fixed letters
  CHECK(chi.at(CycleType{2, 1, 1, 1}) == 0);
}

TEST_CASE("trivial action with sign twist gives the sign character") {
  Character chi = perm_character(6, [](const Perm&) { return Perm::identity(1); }, true);
  CHECK(chi.values == sign_char(6).values);
}

TEST_CASE("a non-homomorphism is rejected") {
  auto broken = [](const Perm& g) {
    // swaps two specific elements' images; not multiplicative
    return cycle_type(g) == CycleType{2, 1, 1, 1, 1} ? Perm::identity(5) : g;
  };
  CHECK_THROWS(perm_character(5, broken));
}

TEST_CASE("norms and orthogonality of the named characters") {
  CHECK(inner_product(chi_o5(), chi_o5()) == Rat(1));
  CHECK(inner_product(chi_o5p(), chi_o5p()) == Rat(1));
  CHECK(inner_product(chi_b5(), chi_b5()) == Rat(1));
  CHECK(inner_product(chi_f5(), chi_f5()) == Rat(1));
  CHECK(inner_product(chi_f5p(), chi_f5p()) == Rat(1));
  CHECK(inner_product(chi_o5(), chi_b5()).is_zero());
  CHECK(inner_product(chi_o5(), chi_o5p()).is_zero());
  CHECK(inner_product(trivial_char(6), trivial_char(6)) == Rat(1));
}

TEST_CASE("character arithmetic: tensoring with sign twice is the identity") {
  Character o5 = chi_o5();
  Character twice = char_tensor(char_tensor(o5, sign_char(6)), sign_char(6));
  CHECK(twice.values == o5.values);
  Character f5 = chi_f5();
  CHECK(char_tensor(char_tensor(f5, sign_char(5)), sign_char(5)).values == f5.values);
  CHECK_THROWS(char_add(chi_f5(), chi_o5()));  // group mismatch
}

TEST_CASE("twelve-variable construction reproduces the four identifications") {
  CHECK(twelve_variable_character(true, 6).at(CycleType(6, 1)) == 6);
  CHECK(twelve_variable_character(true, 6).values == char_add(chi_o5p(), sign_char(6)).values);
  CHECK(twelve_variable_character(false, 6).values == char_add(chi_o5(), trivial_char(6)).values);
  CHECK(twelve_variable_character(true, 5).values == char_add(chi_f5p(), sign_char(5)).values);
  CHECK(twelve_variable_character(false, 5).values == char_add(chi_f5(), trivial_char(5)).values);
}

TEST_CASE("restriction to S5: O5 -> F5, O5' -> F5', B5 differs at {2,1,1,1}") {
  auto rep = restriction_check();
  CHECK(rep.o5_restricts_to_f5);
  CHECK(rep.o5p_restricts_to_f5p);
  CHECK(rep.b5_restriction_differs);
  CHECK(rep.differing_class == CycleType{2, 1, 1, 1});
  CHECK(restrict_to_s5(chi_o5()).at(CycleType{1, 1, 1, 1, 1}) == 5);
}

TEST_CASE("the outer automorphism intertwines the standard and outer characters") {
  Character o5 = chi_o5(), b5 = chi_b5();
  for (const Perm& g : mystic::s6_elements())
    CHECK(o5.at(cycle_type(g)) == b5.at(cycle_type(mystic::outer_via_triangles(g))));
}

TEST_CASE("odd permutations swap colors on the signed labels") {
  for (const Perm& g : mystic::s6_elements()) {
    auto act = mystic::s6_action_signed(g);
    if (sign(g) < 0)
      CHECK(act.swap_mask != 0);
    else
      CHECK(act.swap_mask == 0);
  }
}

TEST_CASE("inner products are rational with denominator dividing the group order") {
  Rat ip = inner_product(chi_o5(), trivial_char(6));
  CHECK(ip.is_zero());
  Character perm6 = perm_character(6, [](const Perm& g) { return g; });
  // <perm rep, trivial> = number of orbits = 1
  CHECK(inner_product(perm6, trivial_char(6)) == Rat(1));
  CHECK(inner_product(perm6, perm6) == Rat(2));  // 2-transitive action
}
