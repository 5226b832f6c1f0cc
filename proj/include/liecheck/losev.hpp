#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecheck/grading.hpp"
#include "liecheck/root_system.hpp"

namespace liecheck {

// Blackened nodes of the pinning; Phi_0^+ is derived on demand.
struct Pinning {
  std::set<int> I;  // 1-based simple indices

  bool contains(int i) const { return I.count(i) > 0; }
};

inline std::vector<Root> leviPositiveRoots(const RootSystemData& sys, const Pinning& pin) {
  std::vector<Root> out;
  for (const Root& beta : sys.positiveRoots) {
    bool supported = true;
    for (int i = 0; i < sys.rank; ++i)
      if (beta.coeffs[i] != 0 && !pin.contains(i + 1)) supported = false;
    if (supported) out.push_back(beta);
  }
  return out;
}

struct ConditionCResult {
  bool ok = true;
  RatVec residual;  // per-index difference, zero at pinned indices
};

// Condition (C): the alpha_i-coefficients of lambda+rho agree with those of
// rho_e for every i outside the pinning (the annihilator of t_e in t* is
// spanned by the pinned simple roots).
inline ConditionCResult conditionC_check(const RootSystemData& sys, const Pinning& pin,
                                         const CocharacterTau& tau, const Weight& lamRho) {
  ConditionCResult res;
  res.residual.assign(sys.rank, Rat(0));
  RatVec c = toAlphaBasis(sys, lamRho);
  std::vector<long> tr = twoRhoE(sys, tau);
  for (int i = 0; i < sys.rank; ++i) {
    if (pin.contains(i + 1)) continue;
    res.residual[i] = c[i] - Rat(tr[i], 2);
    if (res.residual[i] != 0) res.ok = false;
  }
  return res;
}

struct ConditionAResult {
  bool ok = true;
  std::optional<Root> witness;
};

// Condition (A), per-root form: <lambda+rho, beta^vee> is not a positive
// integer for any positive root beta of the pinned Levi.
inline ConditionAResult conditionA_check(const RootSystemData& sys, const Pinning& pin,
                                         const Weight& lamRho) {
  ConditionAResult res;
  for (const Root& beta : leviPositiveRoots(sys, pin)) {
    if (isPositiveInteger(pairing(sys, lamRho, beta))) {
      res.ok = false;
      res.witness = beta;
      return res;
    }
  }
  return res;
}

// Coordinates of gamma^vee over the simple coroots.
inline RatVec corootCoords(const RootSystemData& sys, const Root& gamma) {
  long nn2 = sys.innerProduct2(gamma, gamma);
  RatVec c(sys.rank);
  for (int i = 0; i < sys.rank; ++i)
    c[i] = Rat(long(gamma.coeffs[i]) * sys.gram2[i][i], nn2);
  return c;
}

struct IntegralSubsystem {
  std::vector<Root> positive;     // gamma in Phi+ with <lambda+rho, gamma^vee> integral
  std::vector<Root> simpleBasis;  // indecomposable positive elements
  std::string cartanType;         // e.g. "E7+A1", "A2+\xC3\x83""2"
  size_t size() const { return 2 * positive.size(); }
};

namespace detail {

struct ComponentLabel {
  std::string letter;
  int rank = 0;
  bool tilde = false;

  std::string str() const {
    // Tilde marks the short-root components; "\xC3\x83" is UTF-8 for A-tilde.
    return (tilde ? std::string("\xC3\x83") : letter) + std::to_string(rank);
  }
};

inline std::string classifyComponents(const RootSystemData& sys,
                                      const std::vector<Root>& basis) {
  int n = int(basis.size());
  if (n == 0) return "0";
  // Cartan data of the dual subsystem: pairings and coroot square lengths.
  std::vector<std::vector<int>> pairs(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat p = rootPairing(sys, basis[i], basis[j]);
      pairs[i][j] = int(numerator(p));  // Cartan integers are integral here
    }
  std::vector<Rat> dualNorm(n);
  Rat maxDualNorm = 0;
  bool multiLengthAmbient = (sys.series == Series::F4 || sys.series == Series::G2);
  for (int i = 0; i < n; ++i) dualNorm[i] = 4 / sys.normSq(basis[i]);
  if (multiLengthAmbient) {
    for (const Root& g : sys.positiveRoots) maxDualNorm = std::max(maxDualNorm, 4 / sys.normSq(g));
  }

  // Split into connected components.
  std::vector<int> comp(n, -1);
  int nComp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nComp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (u != v && comp[u] < 0 && pairs[v][u] != 0) {
          comp[u] = nComp;
          stack.push_back(u);
        }
    }
    ++nComp;
  }

  std::vector<ComponentLabel> labels;
  for (int c = 0; c < nComp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    int m = int(nodes.size());
    ComponentLabel lab;
    lab.rank = m;

    int maxEdge = 1;
    std::vector<int> degree(m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        int e = pairs[nodes[a]][nodes[b]] * pairs[nodes[b]][nodes[a]];
        if (e > 0) {
          ++degree[a];
          maxEdge = std::max(maxEdge, e);
        }
      }

    if (maxEdge == 3) {
      lab.letter = "G";
    } else if (maxEdge == 2) {
      int shortCount = 0, longCount = 0;
      Rat mx = 0;
      for (int a = 0; a < m; ++a) mx = std::max(mx, dualNorm[nodes[a]]);
      for (int a = 0; a < m; ++a) {
        if (dualNorm[nodes[a]] == mx) ++longCount;
        else ++shortCount;
      }
      if (m == 4 && shortCount == 2 && longCount == 2) {
        lab.letter = "F";
      } else if (m == 2) {
        lab.letter = "B";
      } else {
        lab.letter = (longCount == 1) ? "C" : "B";
      }
    } else {
      // Simply laced: classify by the branch structure.
      int branch = -1;
      for (int a = 0; a < m; ++a)
        if (degree[a] >= 3) branch = a;
      if (branch < 0) {
        lab.letter = "A";
      } else {
        // Arm lengths from the branch vertex.
        std::vector<int> arms;
        for (int b = 0; b < m; ++b) {
          if (b == branch || pairs[nodes[branch]][nodes[b]] == 0) continue;
          int len = 0, prev = branch, cur = b;
          while (true) {
            ++len;
            int next = -1;
            for (int v = 0; v < m; ++v)
              if (v != prev && v != cur && pairs[nodes[cur]][nodes[v]] != 0) next = v;
            if (next < 0) break;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) lab.letter = "D";
        else if (arms == std::vector<int>{1, 2, 2}) lab.letter = "E";
        else if (arms == std::vector<int>{1, 2, 3}) lab.letter = "E";
        else if (arms == std::vector<int>{1, 2, 4}) lab.letter = "E";
        else lab.letter = "X";
      }
      if (multiLengthAmbient && lab.letter == "A") {
        // Single-length component: tilde when short inside the dual system.
        lab.tilde = (dualNorm[nodes[0]] < maxDualNorm);
      }
    }
    labels.push_back(lab);
  }

  std::sort(labels.begin(), labels.end(), [](const ComponentLabel& a, const ComponentLabel& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.tilde != b.tilde) return !a.tilde;
    return a.letter < b.letter;
  });
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += "+";
    out += labels[i].str();
  }
  return out;
}

}  // namespace detail

// Phi_lambda = {gamma : <lambda+rho, gamma^vee> integral}; in F4/G2 the
// subsystem is regarded inside the dual root system, so indecomposability is
// tested on coroot coordinates.
inline IntegralSubsystem integralRootSystem(const RootSystemData& sys, const Weight& lamRho) {
  IntegralSubsystem out;
  std::set<RatVec> positiveCoroots;
  for (const Root& gamma : sys.positiveRoots)
    if (isInteger(pairing(sys, lamRho, gamma))) {
      out.positive.push_back(gamma);
      positiveCoroots.insert(corootCoords(sys, gamma));
    }
  for (const Root& gamma : out.positive) {
    RatVec cg = corootCoords(sys, gamma);
    bool decomposable = false;
    for (const RatVec& cd : positiveCoroots) {
      if (cd == cg) continue;
      RatVec rest(cg.size());
      for (size_t k = 0; k < cg.size(); ++k) rest[k] = cg[k] - cd[k];
      if (positiveCoroots.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simpleBasis.push_back(gamma);
  }
  out.cartanType = detail::classifyComponents(sys, out.simpleBasis);
  return out;
}

// Joseph's count: dim VA(I(lambda)) = 2(|Phi+| - |Phi_lambda^+|), valid when
// lambda+rho is strongly dominant and integral on Phi_lambda^+.
inline long josephDimension(const RootSystemData& sys, const Weight& lamRho) {
  long integralPositive = 0;
  for (const Root& gamma : sys.positiveRoots) {
    Rat p = pairing(sys, lamRho, gamma);
    if (!isInteger(p)) continue;
    if (p <= 0)
      throw std::domain_error("route error: weight not strongly dominant on Phi_lambda^+ (root " +
                              gamma.str() + ")");
    ++integralPositive;
  }
  return 2 * (long(sys.positiveRoots.size()) - integralPositive);
}

inline long lo2Dimension(long dimG, long dimGLambda, long dimOrbitInGLambda) {
  return dimG - dimGLambda + dimOrbitInGLambda;
}

// Barbasch-Vogan normal form: every simple pairing of h^vee/2 lies in {0,1}.
inline bool specialHalfCheck(const Weight& halfHvee) {
  for (const Rat& c : halfHvee.coeffs)
    if (c != 0 && c != 1) return false;
  return true;
}

}  // namespace liecheck
