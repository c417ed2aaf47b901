#pragma once

#include <map>

#include "charvar/rational.hpp"
#include "charvar/word.hpp"

namespace charvar {

// Element of the rational group ring Q[F]; keys are freely reduced words.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  static GroupRingElem unit() { return of(Word{}, Rat(1)); }
  static GroupRingElem of(const Word& w, const Rat& c) {
    GroupRingElem e;
    e.add(w, c);
    return e;
  }

  const std::map<Word, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
  }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  std::map<Word, Rat> terms_;
};

// Fox free derivative: d(g)/dg = 1, d(g^-1)/dg = -g^-1, and the product rule
// d(uv)/dg = du/dg + u dv/dg.
inline GroupRingElem fox_derivative(const Word& w, char gen) {
  GroupRingElem r;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.sign > 0) {
        r.add(prefix, Rat(1));
      } else {
        Word p = prefix;
        p.push(l);
        r.add(p, Rat(-1));
      }
    }
    prefix.push(l);
  }
  return r;
}

}  // namespace charvar
