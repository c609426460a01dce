#include "sixpoints/chars.hpp"

#include <stdexcept>

#include "sixpoints/mystic.hpp"

namespace sixpoints::reps {

namespace {

const std::vector<Perm>& group_elements(int n) {
  if (n == 5) return mystic::s5_elements();
  if (n == 6) return mystic::s6_elements();
  throw std::invalid_argument("characters: group must be S5 or S6");
}

// Class sizes, computed once per group by direct enumeration.
const std::map<CycleType, long long>& class_sizes(int n) {
  static const std::map<CycleType, long long> s5 = [] {
    std::map<CycleType, long long> m;
    for (const Perm& g : group_elements(5)) ++m[cycle_type(g)];
    return m;
  }();
  static const std::map<CycleType, long long> s6 = [] {
    std::map<CycleType, long long> m;
    for (const Perm& g : group_elements(6)) ++m[cycle_type(g)];
    return m;
  }();
  return n == 5 ? s5 : s6;
}

int fixed_points(const Perm& g) {
  int f = 0;
  for (int i = 1; i <= g.n(); ++i)
    if (g(i) == i) ++f;
  return f;
}

void check_same_group(const Character& a, const Character& b) {
  if (a.n != b.n) throw std::invalid_argument("characters: group mismatch");
}

std::vector<Perm> generators(int n) {
  std::vector<int> t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[size_t(i)] = c[size_t(i)] = i + 1;
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[size_t(i)] = i + 2 > n ? 1 : i + 2;
  return {Perm::from_images(t), Perm::from_images(c)};
}

}  // namespace

long long Character::at(const CycleType& t) const {
  auto it = values.find(t);
  if (it == values.end()) throw std::invalid_argument("character: unknown class " + cycle_type_str(t));
  return it->second;
}

Character trivial_char(int n) {
  Character c{n, {}};
  for (const auto& [t, sz] : class_sizes(n)) c.values[t] = 1;
  return c;
}

Character sign_char(int n) {
  Character c{n, {}};
  for (const auto& [t, sz] : class_sizes(n)) {
    int s = 1;
    for (int len : t)
      if (len % 2 == 0) s = -s;
    c.values[t] = s;
  }
  return c;
}

Character perm_character(int n, const std::function<Perm(const Perm&)>& action, bool sign_twist) {
  const auto& grp = group_elements(n);

  // phi(g s) = phi(g) phi(s) for every g and both generators s implies the
  // homomorphism property on all pairs, by induction on word length.
  for (const Perm& s : generators(n)) {
    Perm as = action(s);
    for (const Perm& g : grp)
      if (action(compose(g, s)) != compose(action(g), as))
        throw std::invalid_argument("perm_character: action is not a homomorphism");
  }

  Character c{n, {}};
  std::map<CycleType, bool> seen;
  for (const Perm& g : grp) {
    long long v = fixed_points(action(g));
    if (sign_twist) v *= sign(g);
    CycleType t = cycle_type(g);
    auto [it, inserted] = c.values.emplace(t, v);
    if (!inserted && it->second != v)
      throw std::invalid_argument("perm_character: value not constant on class " + cycle_type_str(t));
  }
  return c;
}

Character char_add(const Character& a, const Character& b) {
  check_same_group(a, b);
  Character c{a.n, a.values};
  for (auto& [t, v] : c.values) v += b.at(t);
  return c;
}

Character char_sub(const Character& a, const Character& b) {
  check_same_group(a, b);
  Character c{a.n, a.values};
  for (auto& [t, v] : c.values) v -= b.at(t);
  return c;
}

Character char_tensor(const Character& a, const Character& b) {
  check_same_group(a, b);
  Character c{a.n, a.values};
  for (auto& [t, v] : c.values) v *= b.at(t);
  return c;
}

Rat inner_product(const Character& a, const Character& b) {
  check_same_group(a, b);
  mpz_class sum = 0, order = 0;
  for (const auto& [t, sz] : class_sizes(a.n)) {
    sum += mpz_class(long(sz)) * long(a.at(t)) * long(b.at(t));
    order += long(sz);
  }
  return Rat(sum, order);
}

Character chi_b5() {
  Character perm = perm_character(6, [](const Perm& g) { return g; });
  return char_sub(perm, trivial_char(6));
}

Character chi_b5p() { return char_tensor(chi_b5(), sign_char(6)); }

Character chi_o5() {
  Character perm = perm_character(6, [](const Perm& g) { return mystic::outer_via_triangles(g); });
  return char_sub(perm, trivial_char(6));
}

Character chi_o5p() { return char_tensor(chi_o5(), sign_char(6)); }

Character chi_f5() {
  Character perm = perm_character(5, [](const Perm& g) { return mystic::s5_action_on_pentagons(g); });
  return char_sub(perm, trivial_char(5));
}

Character chi_f5p() { return char_tensor(chi_f5(), sign_char(5)); }

Character twelve_variable_character(bool antisymmetric, int group_n) {
  const auto& grp = group_elements(group_n);
  Character c{group_n, {}};
  for (const Perm& g : grp) {
    mystic::SignedLetterAction act =
        group_n == 5 ? mystic::s5_action_signed(g) : mystic::s6_action_signed(g);
    long long tr = 0;
    for (int x = 0; x < 6; ++x) {
      if (act.letters(x + 1) != x + 1) continue;
      bool swapped = act.swap_mask >> x & 1;
      tr += (antisymmetric && swapped) ? -1 : 1;
    }
    CycleType t = cycle_type(g);
    auto [it, inserted] = c.values.emplace(t, tr);
    if (!inserted && it->second != tr)
      throw std::logic_error("twelve-variable trace not constant on class " + cycle_type_str(t));
  }
  return c;
}

Character restrict_to_s5(const Character& chi6) {
  if (chi6.n != 6) throw std::invalid_argument("restrict_to_s5: need an S6 character");
  Character c{5, {}};
  for (const auto& [t, sz] : class_sizes(5)) {
    CycleType t6 = t;
    t6.push_back(1);
    std::sort(t6.rbegin(), t6.rend());
    c.values[t] = chi6.at(t6);
  }
  return c;
}

RestrictionReport restriction_check() {
  RestrictionReport rep;
  Character r_o5 = restrict_to_s5(chi_o5());
  Character r_o5p = restrict_to_s5(chi_o5p());
  Character r_b5 = restrict_to_s5(chi_b5());
  Character f5 = chi_f5(), f5p = chi_f5p();
  rep.o5_restricts_to_f5 = r_o5.values == f5.values;
  rep.o5p_restricts_to_f5p = r_o5p.values == f5p.values;
  for (const auto& [t, v] : r_b5.values)
    if (v != f5.at(t)) {
      rep.b5_restriction_differs = true;
      rep.differing_class = t;
      break;
    }
  return rep;
}

}  // namespace sixpoints::reps
