#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "charvar/mpoly.hpp"
#include "charvar/word.hpp"

namespace charvar {

// Trace polynomials in the skein algebra B(F2) = Q[x, y, z], with
// x = tr(a), y = tr(b), z = tr(ab). Reduction repeatedly applies the trace
// relation tr(UV) = tr(U)tr(V) - tr(UV^-1) together with cyclic and inverse
// invariance of traces.

namespace detail {

// t_0 = 2, t_1 = T, t_m = T t_{m-1} - t_{m-2}  (trace of an m-th power).
inline MPoly trace_power(const MPoly& t, int m) {
  MPoly t0 = MPoly::constant(Rat(2)), t1 = t;
  if (m == 0) return t0;
  for (int i = 1; i < m; ++i) {
    MPoly t2 = t * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

struct Syllable {
  char gen;
  int exp;
};

inline std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> s;
  for (const Letter& l : w.letters()) {
    if (!s.empty() && s.back().gen == l.gen) {
      s.back().exp += l.sign;
    } else {
      s.push_back({l.gen, l.sign});
    }
  }
  return s;
}

class TraceCache {
 public:
  bool lookup(const std::string& key, MPoly& out) const {
    std::lock_guard<std::mutex> g(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const std::string& key, const MPoly& value) {
    std::lock_guard<std::mutex> g(mu_);
    map_.emplace(key, value);
  }
  static TraceCache& instance() {
    static TraceCache c;
    return c;
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, MPoly> map_;
};

inline MPoly generator_trace(char g) {
  switch (g) {
    case 'a': return MPoly::variable("x");
    case 'b': return MPoly::variable("y");
    default: throw input_error(std::string("trace polynomials need words over {a, b}; got '") + g + "'");
  }
}

inline MPoly trace_impl(const Word& input) {
  const Word w = input.cyclically_reduced();
  if (w.empty()) return MPoly::constant(Rat(2));  // tr(1) = 2

  const std::string key = w.canonical_cyclic_key();
  MPoly cached;
  if (TraceCache::instance().lookup(key, cached)) return cached;

  // Rotate so a cyclic syllable starts at position 0.
  const auto& ls = w.letters();
  const int n = w.size();
  int start = 0;
  for (int i = 0; i < n; ++i) {
    if (ls[(i + n - 1) % n].gen != ls[i].gen) {
      start = i;
      break;
    }
  }
  const Word r = w.rotated(start);
  const std::vector<Syllable> syl = syllables(r);

  MPoly result;
  if (syl.size() == 1) {
    // Single generator power: Chebyshev-style recursion, tr is inverse-invariant.
    result = trace_power(generator_trace(syl[0].gen), std::abs(syl[0].exp));
  } else {
    // Find a syllable to split at: first with |exp| >= 2, else first negative.
    int split = -1;
    for (size_t i = 0; i < syl.size(); ++i)
      if (std::abs(syl[i].exp) >= 2) {
        split = static_cast<int>(i);
        break;
      }
    if (split < 0)
      for (size_t i = 0; i < syl.size(); ++i)
        if (syl[i].exp < 0) {
          split = static_cast<int>(i);
          break;
        }
    if (split >= 0) {
      int offset = 0;
      for (int i = 0; i < split; ++i) offset += std::abs(syl[i].exp);
      const Word v = r.rotated(offset);  // begins with the chosen syllable
      const char g = syl[split].gen;
      const int e = syl[split].exp;
      Word rest;
      {
        const auto& vl = v.letters();
        for (int i = std::abs(e); i < n; ++i) rest.push(vl[i]);
      }
      const Word gw = Word::from_letters({{g, +1}});
      const MPoly tg = generator_trace(g);
      if (std::abs(e) >= 2) {
        const int s = e > 0 ? 1 : -1;
        // tr(g^e R) = tr(g) tr(g^(e-s) R) - tr(g^(e-2s) R)
        result = tg * trace_impl(gw.pow(e - s) * rest) - trace_impl(gw.pow(e - 2 * s) * rest);
      } else {
        // e = -1: tr(g^-1 R) = tr(g) tr(R) - tr(g R)
        result = tg * trace_impl(rest) - trace_impl(gw * rest);
      }
    } else {
      // All syllables are single positive letters alternating in a and b:
      // the cyclic word is (ab)^m up to rotation.
      require_invariant(syl.size() % 2 == 0, "odd alternating cyclic word");
      result = trace_power(MPoly::variable("z"), static_cast<int>(syl.size()) / 2);
    }
  }
  TraceCache::instance().store(key, result);
  return result;
}

}  // namespace detail

// tr of the image of w under any SL2 representation with coordinates
// (x, y, z); an integer polynomial invariant under conjugation, inversion
// and cyclic permutation of w.
inline MPoly trace_polynomial(const Word& w) {
  for (const Letter& l : w.letters()) detail::generator_trace(l.gen);  // validate alphabet
  return detail::trace_impl(w);
}

inline MPoly trace_polynomial(const std::string& w) {
  return trace_polynomial(word_ab(w));
}

// The irreducibility discriminant
// Delta_{alpha,beta} = Y_a^2 + Y_b^2 + Y_ab^2 - Y_a Y_b Y_ab - 4.
inline MPoly delta(const Word& alpha, const Word& beta) {
  const MPoly ta = trace_polynomial(alpha);
  const MPoly tb = trace_polynomial(beta);
  const MPoly tab = trace_polynomial(alpha * beta);
  return ta * ta + tb * tb + tab * tab - ta * tb * tab - MPoly::constant(Rat(4));
}

inline MPoly delta(const std::string& alpha, const std::string& beta) {
  return delta(word_ab(alpha), word_ab(beta));
}

// A character is absolutely irreducible iff some commutator trace differs
// from 2, i.e. some Delta_{alpha,beta} does not vanish.
inline bool is_irreducible_at(const std::map<std::string, Rat>& phi,
                              const std::vector<std::pair<Word, Word>>& pairs) {
  for (const auto& [alpha, beta] : pairs)
    if (delta(alpha, beta).specialize(phi) != 0) return true;
  return false;
}

// Character of the reducible (diagonal) representation induced by the
// multiplicative character psi with psi(a), psi(b) given:
// Y_w maps to psi(w) + psi(w)^-1.
inline Rat reducible_character(const Rat& psi_a, const Rat& psi_b, const Word& w) {
  if (psi_a == 0 || psi_b == 0)
    throw input_error("multiplicative character values must be nonzero");
  const Rat v = rat_pow(psi_a, w.exponent_sum('a')) * rat_pow(psi_b, w.exponent_sum('b'));
  return v + Rat(1) / v;
}

// Tangent space at the trivial character: functions satisfying
// psi(gd) + psi(g^-1 d) = 2 psi(g) + 2 psi(d).
inline bool check_quadratic_tangent(const std::function<Rat(const Word&)>& psi,
                                    const std::vector<std::pair<Word, Word>>& pairs) {
  for (const auto& [g, d] : pairs) {
    if (psi(g * d) + psi(g.inverse() * d) != Rat(2) * psi(g) + Rat(2) * psi(d))
      return false;
  }
  return true;
}

}  // namespace charvar
