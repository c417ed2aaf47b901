#pragma once

#include <random>

#include "charvar/rational.hpp"
#include "charvar/word.hpp"

namespace charvar {

// Deterministic sampling helpers; all draws go through uniform_below so the
// stream depends only on the seed.
struct Rng {
  explicit Rng(uint64_t seed) : gen(seed) {}

  uint64_t uniform_below(uint64_t n) { return gen() % n; }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(uniform_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniformly random freely reduced word of the given length over {a, b}.
  Word reduced_word(int length) {
    static const Letter alphabet[4] = {{'a', 1}, {'a', -1}, {'b', 1}, {'b', -1}};
    Word w;
    for (int i = 0; i < length; ++i) {
      for (;;) {
        const Letter l = alphabet[uniform_below(4)];
        if (!w.empty() && w.letters().back().gen == l.gen &&
            w.letters().back().sign == -l.sign)
          continue;
        w.push(l);
        break;
      }
    }
    return w;
  }

  Word reduced_word_up_to(int max_length) {
    return reduced_word(uniform_int(1, std::max(1, max_length)));
  }

  Rat small_rat() {
    const int num = uniform_int(-9, 9);
    const int den = uniform_int(1, 6);
    Rat r(num, den);
    r.canonicalize();  // mpq_class(int, int) does not reduce
    return r;
  }

  Rat small_nonzero_rat() {
    for (;;) {
      Rat r = small_rat();
      if (r != 0) return r;
    }
  }

  std::mt19937_64 gen;
};

}  // namespace charvar
