#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "liecheck/root_system.hpp"

namespace liecheck {

// Sequence of simple-reflection indices (1..rank), applied right to left.
// Group elements are compared through their action, never letter by letter.
struct WeylWord {
  std::vector<int> letters;

  size_t size() const { return letters.size(); }
  WeylWord inverse() const {
    WeylWord w;
    w.letters.assign(letters.rbegin(), letters.rend());
    return w;
  }
  WeylWord prepend(int s) const {
    WeylWord w;
    w.letters.push_back(s);
    w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    return w;
  }
  std::string str() const {
    if (letters.empty()) return "e";
    std::string out;
    for (int s : letters) out += "s" + std::to_string(s);
    return out;
  }
};

struct DescentSet {
  std::set<int> indices;  // 1-based simple indices, or positions in an
                          // explicit alternative simple system
  bool operator==(const DescentSet& o) const { return indices == o.indices; }
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices) {
      if (!first) out += ",";
      out += "s" + std::to_string(i);
      first = false;
    }
    return out + "}";
  }
};

inline void checkLetters(const RootSystemData& sys, const WeylWord& w) {
  for (int s : w.letters)
    if (s < 1 || s > sys.rank) throw std::invalid_argument("letter out of range");
}

// s_i: mu -> mu - <mu, a_i^vee> a_i; rightmost letter acts first.
inline Weight applyWord(const RootSystemData& sys, const WeylWord& w, const Weight& mu) {
  checkLetters(sys, w);
  Weight out = mu;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    Rat a = out.coeffs[i - 1];  // <mu, a_i^vee> is the i-th pi-coordinate
    if (a == 0) continue;
    for (int k = 0; k < sys.rank; ++k)
      out.coeffs[k] -= a * Rat(sys.cartan[k][i - 1]);
  }
  return out;
}

inline Root applyWordToRoot(const RootSystemData& sys, const WeylWord& w, const Root& beta) {
  checkLetters(sys, w);
  Root out = beta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = sys.reflectRoot(*it, out);
  return out;
}

// w . mu = w(mu + rho) - rho
inline Weight dotAction(const RootSystemData& sys, const WeylWord& w, const Weight& mu) {
  Weight shifted = mu;
  for (auto& c : shifted.coeffs) c += 1;
  Weight out = applyWord(sys, w, shifted);
  for (auto& c : out.coeffs) c -= 1;
  return out;
}

// Integer action matrix on the alpha basis: column j = w(alpha_j).
inline std::vector<std::vector<int>> actionMatrix(const RootSystemData& sys, const WeylWord& w) {
  std::vector<std::vector<int>> m(sys.rank, std::vector<int>(sys.rank));
  for (int j = 1; j <= sys.rank; ++j) {
    Root im = applyWordToRoot(sys, w, sys.simpleRoot(j));
    for (int i = 0; i < sys.rank; ++i) m[i][j - 1] = im.coeffs[i];
  }
  return m;
}

inline bool sameElement(const RootSystemData& sys, const WeylWord& a, const WeylWord& b) {
  return actionMatrix(sys, a) == actionMatrix(sys, b);
}

// #{beta in Phi+ : w(beta) in Phi-}
inline int lengthOf(const RootSystemData& sys, const WeylWord& w) {
  int len = 0;
  for (const Root& beta : sys.positiveRoots)
    if (sys.rootSign(applyWordToRoot(sys, w, beta)) < 0) ++len;
  return len;
}

// Left descents: s in L(w) iff w^{-1}(alpha_s) < 0 iff l(sw) < l(w).
inline DescentSet descentSet(const RootSystemData& sys, const WeylWord& w) {
  DescentSet d;
  WeylWord wi = w.inverse();
  for (int s = 1; s <= sys.rank; ++s)
    if (sys.rootSign(applyWordToRoot(sys, wi, sys.simpleRoot(s))) < 0) d.indices.insert(s);
  return d;
}

// Descents against an explicit simple system: {beta : w(beta) < 0}, reported
// as 1-based positions into simpleSystem. The basis must consist of roots
// with non-positive mutual Cartan integers.
inline DescentSet descentSet(const RootSystemData& sys, const WeylWord& w,
                             const std::vector<Root>& simpleSystem) {
  for (const Root& b : simpleSystem)
    if (!sys.isRoot(b)) throw std::invalid_argument("invalid simple system: not a root");
  for (size_t i = 0; i < simpleSystem.size(); ++i)
    for (size_t j = 0; j < simpleSystem.size(); ++j)
      if (i != j && rootPairing(sys, simpleSystem[i], simpleSystem[j]) > 0)
        throw std::invalid_argument("invalid simple system: positive Cartan integer");
  DescentSet d;
  for (size_t k = 0; k < simpleSystem.size(); ++k)
    if (sys.rootSign(applyWordToRoot(sys, w, simpleSystem[k])) < 0) d.indices.insert(int(k + 1));
  return d;
}

inline bool adjacentSimple(const RootSystemData& sys, int s, int t) {
  if (s == t) return false;
  return sys.cartan[s - 1][t - 1] * sys.cartan[t - 1][s - 1] == 1;
}

inline bool inDL(const RootSystemData& sys, const WeylWord& w, int s, int t) {
  DescentSet d = descentSet(sys, w);
  return int(d.indices.count(s)) + int(d.indices.count(t)) == 1;
}

// Kazhdan-Lusztig star operation on D_L(s,t) for adjacent s,t: the unique
// element of {sw, tw} that stays in D_L(s,t).
inline WeylWord starOp(const RootSystemData& sys, const WeylWord& w, int s, int t) {
  if (!adjacentSimple(sys, s, t))
    throw std::domain_error("star operation needs adjacent simple reflections");
  if (!inDL(sys, w, s, t))
    throw std::domain_error("word not in D_L(s" + std::to_string(s) + ",s" +
                            std::to_string(t) + ")");
  WeylWord sw = w.prepend(s), tw = w.prepend(t);
  bool swIn = inDL(sys, sw, s, t), twIn = inDL(sys, tw, s, t);
  if (swIn == twIn) throw std::logic_error("star operation failed to separate");
  return swIn ? sw : tw;
}

// Product of reflections about arbitrary roots (rightmost first); used for
// identities phrased in an alternative simple system. Acting on weights.
inline Weight applyReflections(const RootSystemData& sys, const std::vector<Root>& roots,
                               const Weight& mu) {
  Weight out = mu;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    Rat a = pairing(sys, out, *it);
    if (a == 0) continue;
    Weight alpha = fromAlphaBasis(sys, [&] {
      RatVec c(sys.rank);
      for (int k = 0; k < sys.rank; ++k) c[k] = it->coeffs[k];
      return c;
    }());
    for (int k = 0; k < sys.rank; ++k) out.coeffs[k] -= a * alpha.coeffs[k];
  }
  return out;
}

inline Root applyReflectionsToRoot(const RootSystemData& sys, const std::vector<Root>& roots,
                                   const Root& beta) {
  Root out = beta;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    Rat a = rootPairing(sys, out, *it);
    if (!isInteger(a)) throw std::logic_error("non-integral root pairing");
    long m = long(numerator(a));
    for (int k = 0; k < sys.rank; ++k) out.coeffs[k] -= int(m) * it->coeffs[k];
  }
  return out;
}

}  // namespace liecheck
