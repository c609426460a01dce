#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "sixpoints/frozen.hpp"
#include "sixpoints/mystic.hpp"

using namespace sixpoints;
using namespace sixpoints::mystic;

TEST_CASE("the letter dictionary is frozen") {
  const auto& pent = enumerate_pentagons();
  for (int x = 0; x < 6; ++x)
    CHECK(white_cycle_str(pent[size_t(x)]) == frozen::kLetterDictionary[x]);
  CHECK(white_cycle_str(pent[0]) == "12345");
}

TEST_CASE("six pentagons partition the twelve 5-cycles into complementary pairs") {
  const auto& pent = enumerate_pentagons();
  std::set<std::uint16_t> masks;
  for (const Pentagon& p : pent) {
    CHECK(std::popcount(p.white_mask) == 5);
    CHECK(std::popcount(p.black_mask) == 5);
    CHECK((p.white_mask & p.black_mask) == 0);
    CHECK((p.white_mask | p.black_mask) == 0x3FF);
    masks.insert(p.white_mask);
    masks.insert(p.black_mask);
  }
  CHECK(masks.size() == 12);

  // every edge is white exactly three times
  for (int e = 0; e < 10; ++e) {
    int white = 0;
    for (const Pentagon& p : pent) white += p.white_mask >> e & 1;
    CHECK(white == 3);
  }
}

TEST_CASE("color swap is an involution keeping the letter") {
  const Pentagon& a = enumerate_pentagons()[0];
  Pentagon s = a.swapped();
  CHECK(s.white_mask == a.black_mask);
  CHECK(s.swapped().white_mask == a.white_mask);
  CHECK(s.letter == a.letter);
}

TEST_CASE("pentagon-to-triangles rule and its invariants") {
  const Pentagon& a = enumerate_pentagons()[0];
  TriangleColoring c = pentagon_to_triangles(a);

  // triangle {6,1,2} is colored like edge 12 of pentagon a, which is white
  CHECK_FALSE(c.is_black(6, 1, 2));
  // triangle {6,1,3} like edge 13, black in a
  CHECK(c.is_black(6, 1, 3));

  // (i) complementary triangles get opposite colors
  for (int t = 0; t < 20; ++t) {
    auto v = triangle_vertices(t);
    int rest[3], n = 0;
    for (int x = 1; x <= 6; ++x)
      if (x != v[0] && x != v[1] && x != v[2]) rest[n++] = x;
    CHECK(c.is_black(v[0], v[1], v[2]) != c.is_black(rest[0], rest[1], rest[2]));
  }
  CHECK(c.is_black(1, 2, 3) != c.is_black(4, 5, 6));

  // (ii) every tetrahedron has two triangles of each color
  for (int a4 = 1; a4 <= 6; ++a4)
    for (int b4 = a4 + 1; b4 <= 6; ++b4)
      for (int c4 = b4 + 1; c4 <= 6; ++c4)
        for (int d4 = c4 + 1; d4 <= 6; ++d4) {
          int black = int(c.is_black(a4, b4, c4)) + int(c.is_black(a4, b4, d4)) +
                      int(c.is_black(a4, c4, d4)) + int(c.is_black(b4, c4, d4));
          CHECK(black == 2);
        }
}

TEST_CASE("the six coloring images are distinct and exhaust the brute-force classes") {
  std::set<std::uint32_t> reps;
  for (const Pentagon& p : enumerate_pentagons()) {
    std::uint32_t black = pentagon_to_triangles(p).black;
    reps.insert(std::min(black, ~black & 0xFFFFFu));
  }
  CHECK(reps.size() == 6);
  auto brute = enumerate_triangle_colorings_brute();
  CHECK(std::set<std::uint32_t>(brute.begin(), brute.end()) == reps);
}

TEST_CASE("the S5 action on pentagons reproduces the printed identity") {
  CHECK(format_cycles(s5_action_on_pentagons(parse_cycles("(1 2)", 5)), true) ==
        "(a d)(b c)(e f)");
  CHECK(s5_action_on_pentagons(Perm::identity(5)).is_identity());
  CHECK_FALSE(s5_action_on_pentagons(parse_cycles("(1 2 3)", 5)).is_identity());
}

TEST_CASE("coset route: printed identity, identity, mutual inverse") {
  CHECK(format_cycles(outer_via_cosets(parse_cycles("(a d)(b c)(e f)", 6))) == "(1 2)");
  CHECK(outer_via_cosets(Perm::identity(6)).is_identity());
  for (const Perm& g : s6_elements()) {
    CHECK(outer_via_cosets(outer_via_triangles(g)) == g);
  }
  CHECK(format_cycles(coset_numbering_alignment()) == frozen::kCosetAlignment);
}

TEST_CASE("triangle route: printed transposition image and homomorphism on generators") {
  Perm img = outer_via_triangles(parse_cycles("(1 2)", 6));
  CHECK(cycle_type(img) == CycleType{2, 2, 2});  // fixed-point-free involution on letters
  CHECK(format_cycles(img, true) == "(a d)(b c)(e f)");

  Perm s = parse_cycles("(1 2)", 6), c = parse_cycles("(1 2 3 4 5 6)", 6);
  for (const Perm& g : s6_elements()) {
    CHECK(outer_via_triangles(compose(g, s)) ==
          compose(outer_via_triangles(g), outer_via_triangles(s)));
    CHECK(outer_via_triangles(compose(g, c)) ==
          compose(outer_via_triangles(g), outer_via_triangles(c)));
  }
}

TEST_CASE("round trip of a 6-cycle through both routes") {
  Perm c6 = parse_cycles("(1 2 3 4 5 6)", 6);
  Perm letters = outer_via_triangles(c6);
  CHECK(format_cycles(outer_via_cosets(letters)) == "(1 2 3 4 5 6)");
}

TEST_CASE("pentad of pentagon a, including the corrected first syntheme") {
  Pentad pa = pentad_of_pentagon(enumerate_pentagons()[0]);
  std::set<std::string> names;
  for (const Syntheme& s : pa.synthemes) names.insert(s.str());
  CHECK(names == std::set<std::string>{"12/35/46", "13/26/45", "14/23/56", "15/24/36",
                                       "16/25/34"});
  CHECK(pa.synthemes[0].str() == "12/35/46");
  CHECK(names.count("14/23/56") == 1);  // = 23/14/56
  CHECK(names.count("16/25/34") == 1);  // = 34/25/16
  CHECK(names.count("13/26/45") == 1);  // = 45/13/26
}

TEST_CASE("pentads: distinct, exhaustive, each syntheme used twice") {
  std::vector<Pentad> images;
  for (const Pentagon& p : enumerate_pentagons()) images.push_back(pentad_of_pentagon(p));
  std::set<Pentad> distinct(images.begin(), images.end());
  CHECK(distinct.size() == 6);
  auto brute = enumerate_all_pentads_brute();
  CHECK(std::set<Pentad>(brute.begin(), brute.end()) == distinct);

  for (const Syntheme& s : enumerate_synthemes()) {
    int uses = 0;
    for (const Pentad& p : images)
      for (const Syntheme& t : p.synthemes)
        if (t == s) ++uses;
    CHECK(uses == 2);
  }
}

TEST_CASE("synthemes: 15 matchings, perm round trip, validation") {
  auto syn = enumerate_synthemes();
  CHECK(syn.size() == 15);
  for (const Syntheme& s : syn) {
    Perm p = s.as_perm();
    CHECK(cycle_type(p) == CycleType{2, 2, 2});
    CHECK(Syntheme::from_perm(p) == s);
  }
  CHECK_THROWS(Syntheme::from_pairs({{{1, 2}, {2, 3}, {4, 5}}}));
  CHECK_THROWS(Syntheme::from_perm(parse_cycles("(1 2)", 6)));
}

TEST_CASE("icosahedral labelings: counts, triples, opposites, pentagon bijection") {
  const auto& icos = enumerate_icosahedra();
  REQUIRE(icos.size() == 12);
  std::set<int> letters;
  for (const IcosLabeling& l : icos) {
    CHECK(std::popcount(l.triples) == 10);
    CHECK(icos[size_t(l.opposite)].triples == (~l.triples & 0xFFFFFu));
    CHECK(icos[size_t(l.opposite)].opposite == int(&l - icos.data()));
    CHECK(icosahedron_to_pentagon(l) == l.pentagon_letter);
    letters.insert(l.pentagon_letter);
  }
  CHECK(letters.size() == 6);

  // opposite members carry complementary cycles around label 6, hence the
  // same pentagon
  for (const IcosLabeling& l : icos)
    CHECK(l.pentagon_letter == icos[size_t(l.opposite)].pentagon_letter);
}

TEST_CASE("golden-ratio conjugation sends the icosahedron to its opposite") {
  GoldenReport rep = golden_conjugation_check();
  CHECK(rep.vertex_count == 12);
  CHECK(rep.face_count == 20);
  CHECK(std::popcount(rep.original_triples) == 10);
  CHECK(rep.conjugate_is_opposite);
}

TEST_CASE("stabilizer of pentagon a inside S5") {
  CHECK(stabilizer_order_check() == 20);
  CHECK(s5_action_on_pentagons(parse_cycles("(1 2 3 4 5)", 5))(1) == 1);
}

TEST_CASE("letter names map both ways") {
  CHECK(letter_name(0) == 'a');
  CHECK(letter_name(5) == 'f');
  CHECK(letter_from_name('d') == 3);
  CHECK_THROWS(letter_from_name('g'));
  CHECK_THROWS(letter_name(6));
}
