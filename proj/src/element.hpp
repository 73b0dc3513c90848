#pragma once

#include <map>

#include "group.hpp"
#include "scalar.hpp"

namespace gtpa {

// A finite linear combination of level-n basis words (length 2n, trivial
// product). Zero coefficients are never stored, so equality is structural
// and iteration order is deterministic.
struct Element {
  int level = 0;
  std::map<Word, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Element& a, const Element& b) {
    return a.level == b.level && a.terms == b.terms;
  }
};

inline void add_term(Element& e, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.terms.erase(it);
  }
}

inline Element& operator+=(Element& a, const Element& b) {
  for (const auto& [w, c] : b.terms) add_term(a, w, c);
  return a;
}

inline Element operator+(Element a, const Element& b) { return a += b; }

inline Element operator*(const Scalar& c, const Element& e) {
  Element out{e.level, {}};
  for (const auto& [w, t] : e.terms) add_term(out, w, c * t);
  return out;
}

inline Element operator-(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [w, c] : b.terms) add_term(out, w, -c);
  return out;
}

}  // namespace gtpa
