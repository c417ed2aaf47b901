#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "charvar/error.hpp"

namespace charvar {

// A letter of a free-group word: generator name ('a'..'z') and sign.
struct Letter {
  char gen;
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in a free group on single-letter generators.
class Word {
 public:
  Word() = default;

  static Word from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const Letter& l : letters) w.push(l);
    return w;
  }

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  int size() const { return static_cast<int>(ls_.size()); }

  // Appends with free reduction.
  void push(const Letter& l) {
    if (!ls_.empty() && ls_.back().gen == l.gen && ls_.back().sign == -l.sign)
      ls_.pop_back();
    else
      ls_.push_back(l);
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word r = a;
    for (const Letter& l : b.ls_) r.push(l);
    return r;
  }

  Word inverse() const {
    Word r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.push({it->gen, -it->sign});
    return r;
  }

  Word pow(int e) const {
    Word base = e >= 0 ? *this : inverse();
    Word r;
    for (int i = 0; i < std::abs(e); ++i) r = r * base;
    return r;
  }

  // Removes conjugation: g v g^-1 -> v.
  Word cyclically_reduced() const {
    std::vector<Letter> v = ls_;
    size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo].gen == v[hi - 1].gen && v[lo].sign == -v[hi - 1].sign) {
      ++lo;
      --hi;
    }
    Word r;
    r.ls_.assign(v.begin() + lo, v.begin() + hi);
    return r;
  }

  Word rotated(int k) const {
    Word r;
    const int n = size();
    if (n == 0) return r;
    for (int i = 0; i < n; ++i) r.ls_.push_back(ls_[(i + k) % n]);
    return r;
  }

  int exponent_sum(char gen) const {
    int s = 0;
    for (const Letter& l : ls_)
      if (l.gen == gen) s += l.sign;
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (const Letter& l : ls_)
      s += l.sign > 0 ? l.gen : static_cast<char>(l.gen - 'a' + 'A');
    return s;
  }

  // Lexicographically least string among all rotations of the cyclic
  // reduction and of its inverse; memoization key exploiting trace
  // invariances.
  std::string canonical_cyclic_key() const {
    const Word c = cyclically_reduced();
    const Word ci = c.inverse();
    std::string best = c.to_string();
    for (int k = 0; k < c.size(); ++k) {
      best = std::min(best, c.rotated(k).to_string());
      best = std::min(best, ci.rotated(k).to_string());
    }
    return best;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> ls_;
};

// Parses "abAB"-style words: lowercase letters are generators, uppercase
// their inverses. Every letter must be a declared generator.
inline Word parse_word(const std::string& s, const std::set<char>& generators) {
  Word w;
  for (char c : s) {
    const char low = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    if (low < 'a' || low > 'z')
      throw input_error(std::string("bad character '") + c + "' in word");
    if (!generators.count(low))
      throw input_error(std::string("undeclared generator '") + low + "'");
    w.push({low, (c >= 'a' && c <= 'z') ? +1 : -1});
  }
  return w;
}

inline std::set<char> gens_ab() { return {'a', 'b'}; }

inline Word word_ab(const std::string& s) { return parse_word(s, gens_ab()); }

struct BoundaryCurve {
  std::string name;
  Word word;
  int genus = 1;  // genus of the corresponding boundary surface
};

// Finite presentation with boundary-curve annotations.
struct Presentation {
  std::vector<char> generators;
  std::vector<Word> relators;
  std::vector<BoundaryCurve> boundary;

  std::set<char> generator_set() const {
    return std::set<char>(generators.begin(), generators.end());
  }
  bool is_free() const { return relators.empty(); }
};

// d = sum over boundary components of max(1, 3g - 3).
inline int expected_h1_dimension(const Presentation& p) {
  int d = 0;
  for (const auto& b : p.boundary) {
    if (b.genus < 1) throw input_error("boundary genus must be >= 1");
    d += std::max(1, 3 * b.genus - 3);
  }
  return d;
}

}  // namespace charvar
