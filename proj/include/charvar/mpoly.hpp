#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charvar/error.hpp"
#include "charvar/rational.hpp"

namespace charvar {

using VarList = std::vector<std::string>;
using Vars = std::shared_ptr<const VarList>;

inline Vars make_vars(VarList names) {
  return std::make_shared<const VarList>(std::move(names));
}

// The coordinate ring context used throughout: Q[x, y, z].
inline const Vars& vars_xyz() {
  static const Vars v = make_vars({"x", "y", "z"});
  return v;
}

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Canonical internal term order: graded lexicographic, highest first.
struct GradedLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    const int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors, x slot first
  }
};

// Sparse multivariate polynomial over Q with a fixed, shared variable list.
class MPoly {
 public:
  using TermMap = std::map<Mono, Rat, GradedLexGreater>;

  MPoly() : vars_(vars_xyz()) {}
  explicit MPoly(Vars vars) : vars_(std::move(vars)) {}

  static MPoly constant(const Rat& c, const Vars& vars = vars_xyz()) {
    MPoly p(vars);
    if (c != 0) p.terms_.emplace(Mono(vars->size(), 0), c);
    return p;
  }
  static MPoly variable(const std::string& name, const Vars& vars = vars_xyz()) {
    MPoly p(vars);
    Mono m(vars->size(), 0);
    m[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
  }

  const Vars& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw structural_error("polynomial is not constant");
    return terms_.begin()->second;
  }
  int total_degree() const {
    return terms_.empty() ? -1 : mono_degree(terms_.begin()->first);
  }
  // Leading coefficient in the canonical (graded-lex) order.
  const Rat& leading_coeff() const {
    if (terms_.empty()) throw structural_error("leading coefficient of zero");
    return terms_.begin()->second;
  }
  const Mono& leading_mono() const {
    if (terms_.empty()) throw structural_error("leading monomial of zero");
    return terms_.begin()->first;
  }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_->size(); ++i)
      if ((*vars_)[i] == name) return static_cast<int>(i);
    throw structural_error("unknown variable '" + name + "'");
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_vars(b);
    MPoly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Mono m(ma.size());
        for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator*(const MPoly& a, const Rat& c) {
    MPoly r(a.vars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, cc * c);
    return r;
  }
  friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    a.check_same_vars(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int e) const {
    if (e < 0) throw structural_error("negative polynomial power");
    MPoly acc = constant(Rat(1), vars_);
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
  }

  // Exact evaluation; every variable occurring in the polynomial must be
  // assigned.
  Rat specialize(const std::map<std::string, Rat>& point) const {
    std::vector<bool> have(vars_->size(), false);
    std::vector<Rat> val(vars_->size());
    for (size_t i = 0; i < vars_->size(); ++i) {
      auto it = point.find((*vars_)[i]);
      if (it != point.end()) {
        have[i] = true;
        val[i] = it->second;
      }
    }
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!have[i])
          throw structural_error("no value supplied for variable '" + (*vars_)[i] + "'");
        t *= rat_pow(val[i], m[i]);
      }
      acc += t;
    }
    return acc;
  }

  // Formal partial derivative.
  MPoly derive(const std::string& var) const {
    const int vi = var_index(var);
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[vi] == 0) continue;
      Mono d = m;
      d[vi] -= 1;
      r.add_term(d, c * Rat(m[vi]));
    }
    return r;
  }

  // Canonical text form, e.g. "x^2 + y^2 + z^2 - x*y*z - 2".
  // Terms are ordered by sorted exponent profile (descending), ties broken
  // lexicographically with the first variable strongest.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Mono, Rat>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
      Mono sa = a->first, sb = b->first;
      std::sort(sa.rbegin(), sa.rend());
      std::sort(sb.rbegin(), sb.rend());
      if (sa != sb) return sa > sb;
      return a->first > b->first;
    });
    std::string out;
    for (size_t i = 0; i < ts.size(); ++i) {
      const Mono& m = ts[i]->first;
      Rat c = ts[i]->second;
      const bool neg = c < 0;
      if (i == 0) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (neg) c = -c;
      std::string monos;
      for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!monos.empty()) monos += "*";
        monos += (*vars_)[v];
        if (m[v] > 1) monos += "^" + std::to_string(m[v]);
      }
      if (monos.empty()) {
        out += rat_to_string(c);
      } else {
        if (c != 1) out += rat_to_string(c) + "*";
        out += monos;
      }
    }
    return out;
  }

  void check_same_vars(const MPoly& o) const {
    if (vars_ == o.vars_) return;
    if (*vars_ == *o.vars_) return;
    throw structural_error("mixed variable contexts");
  }

 private:
  Vars vars_;
  TermMap terms_;
};

inline MPoly operator-(const MPoly& a, const Rat& c) {
  return a - MPoly::constant(c, a.vars());
}
inline MPoly operator+(const MPoly& a, const Rat& c) {
  return a + MPoly::constant(c, a.vars());
}

}  // namespace charvar
