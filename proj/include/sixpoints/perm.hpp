#ifndef SIXPOINTS_PERM_HPP
#define SIXPOINTS_PERM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sixpoints {

// Parse failure with the offending byte offset in the input string.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

// A permutation of {1..n}, stored 0-based. Points are 1-based at every
// external interface; the letters a..f stand for 1..6 on the letter alphabet.
class Perm {
public:
  Perm() = default;
  static Perm identity(int n);
  // images[i] = image of point i+1, 1-based entries.
  static Perm from_images(const std::vector<int>& images);

  int n() const { return int(img_.size()); }
  // 1-based application.
  int operator()(int point) const { return img_[size_t(point - 1)] + 1; }
  bool is_identity() const;

  const std::vector<std::uint8_t>& raw() const { return img_; }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
  std::vector<std::uint8_t> img_;
};

// compose(g, h) applies h first: (g*h)(i) = g(h(i)).
Perm compose(const Perm& g, const Perm& h);
Perm inverse(const Perm& g);
int sign(const Perm& g);

// Multiset of cycle lengths, sorted descending; the conjugacy invariant.
using CycleType = std::vector<int>;
CycleType cycle_type(const Perm& g);
std::string cycle_type_str(const CycleType& t);

// Cycle grammar: perm := cycle* ; cycle := "(" point (sep point)* ")" ;
// sep := "," | whitespace ; point := integer 1..n | letter a..f.
// "()" and empty input are the identity. Cycles must be disjoint.
Perm parse_cycles(const std::string& text, int n);

// Disjoint cycles, smallest moved point first within each cycle, cycles
// sorted by smallest point; identity prints "()". letters=true prints the
// points as a..f.
std::string format_cycles(const Perm& g, bool letters = false);

// All n! permutations in lexicographic order of image tuples (identity first).
std::vector<Perm> enumerate_group(int n);

}  // namespace sixpoints

#endif
