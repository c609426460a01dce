#include "sixpoints/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sixpoints {

Perm Perm::identity(int n) {
  Perm p;
  p.img_.resize(size_t(n));
  std::iota(p.img_.begin(), p.img_.end(), std::uint8_t(0));
  return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p;
  const int n = int(images.size());
  p.img_.resize(size_t(n));
  std::vector<bool> seen(size_t(n), false);
  for (int i = 0; i < n; ++i) {
    int v = images[size_t(i)];
    if (v < 1 || v > n || seen[size_t(v - 1)])
      throw std::invalid_argument("Perm: images are not a permutation");
    seen[size_t(v - 1)] = true;
    p.img_[size_t(i)] = std::uint8_t(v - 1);
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[size_t(i)] != i) return false;
  return true;
}

Perm compose(const Perm& g, const Perm& h) {
  if (g.n() != h.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(size_t(g.n()));
  for (int i = 1; i <= g.n(); ++i) img[size_t(i - 1)] = g(h(i));
  return Perm::from_images(img);
}

Perm inverse(const Perm& g) {
  std::vector<int> img(size_t(g.n()));
  for (int i = 1; i <= g.n(); ++i) img[size_t(g(i) - 1)] = i;
  return Perm::from_images(img);
}

CycleType cycle_type(const Perm& g) {
  CycleType t;
  std::vector<bool> seen(size_t(g.n()), false);
  for (int i = 1; i <= g.n(); ++i) {
    if (seen[size_t(i - 1)]) continue;
    int len = 0, j = i;
    do {
      seen[size_t(j - 1)] = true;
      j = g(j);
      ++len;
    } while (j != i);
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

int sign(const Perm& g) {
  int s = 1;
  for (int len : cycle_type(g))
    if (len % 2 == 0) s = -s;
  return s;
}

std::string cycle_type_str(const CycleType& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + "}";
}

namespace {

bool is_sep(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

Perm parse_cycles(const std::string& text, int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("parse_cycles: unsupported n");
  std::vector<int> img(std::size_t{size_t(n)});
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(size_t(n), false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      int point;
      std::size_t at = i;
      char c = text[i];
      if (c >= 'a' && c <= 'f') {
        point = c - 'a' + 1;
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        point = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          point = point * 10 + (text[i] - '0');
          if (point > 99) throw ParseError("point out of range", at);
          ++i;
        }
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      if (point < 1 || point > n) throw ParseError("point out of range 1.." + std::to_string(n), at);
      if (used[size_t(point - 1)]) throw ParseError("repeated point " + std::to_string(point), at);
      used[size_t(point - 1)] = true;
      cycle.push_back(point);
      if (i < text.size() && !is_sep(text[i]) && text[i] != ')')
        throw ParseError("expected separator or ')'", i);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[size_t(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Perm::from_images(img);
}

std::string format_cycles(const Perm& g, bool letters) {
  auto point_str = [&](int p) {
    return letters ? std::string(1, char('a' + p - 1)) : std::to_string(p);
  };
  std::string out;
  std::vector<bool> seen(size_t(g.n()), false);
  for (int i = 1; i <= g.n(); ++i) {
    if (seen[size_t(i - 1)] || g(i) == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    do {
      seen[size_t(j - 1)] = true;
      if (!first) out += " ";
      out += point_str(j);
      first = false;
      j = g(j);
    } while (j != i);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Perm> enumerate_group(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_group: n must be 1..8");
  std::vector<int> img(std::size_t{size_t(n)});
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace sixpoints
