#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/rational.hpp"

namespace liecheck {

enum class Series { E6, E7, E8, F4, G2, D };

inline std::string seriesName(Series s, int rank) {
  switch (s) {
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
    case Series::F4: return "F4";
    case Series::G2: return "G2";
    case Series::D: return "D" + std::to_string(rank);
  }
  return "?";
}

// Integer coefficient vector over the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  Root negated() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }
  std::string str() const {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(coeffs[i]);
    }
    return out;
  }
};

// Exact-rational coefficient vector over the fundamental-weight basis.
struct Weight {
  RatVec coeffs;

  bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
  std::string str() const { return vecStr(coeffs); }
};

struct RootSystemData {
  Series series;
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee> = 2(a_i|a_j)/(a_i|a_i)
  std::vector<std::vector<int>> cartan;
  // gram[i][j] = (a_i|a_j), normalised so long roots have square length 2
  // in the E series and per Planches VIII/IX in F4/G2, IV in D_n.
  std::vector<RatVec> gram;
  // gram2[i][j] = 2 (a_i|a_j); integral for every supported system.
  std::vector<std::vector<long>> gram2;
  std::vector<Root> positiveRoots;
  // invCartan = cartan^{-1}; column i holds the alpha-expansion of w_i.
  std::vector<RatVec> invCartan;
  // epsilonAlpha[j] = Bourbaki epsilon-coordinates of alpha_j (D_n, F4, G2).
  std::vector<RatVec> epsilonAlpha;

  std::map<std::vector<int>, int> positiveIndex;

  std::string name() const { return seriesName(series, rank); }

  bool isPositiveRoot(const std::vector<int>& c) const {
    return positiveIndex.count(c) > 0;
  }
  bool isRoot(const Root& r) const {
    return isPositiveRoot(r.coeffs) || isPositiveRoot(r.negated().coeffs);
  }
  // Sign of a root: +1 positive, -1 negative, throws otherwise.
  int rootSign(const Root& r) const {
    if (isPositiveRoot(r.coeffs)) return 1;
    if (isPositiveRoot(r.negated().coeffs)) return -1;
    throw std::domain_error("not a root: " + r.str());
  }

  Root simpleRoot(int i) const {  // i is 1-based (Bourbaki index)
    Root r;
    r.coeffs.assign(rank, 0);
    r.coeffs[i - 1] = 1;
    return r;
  }

  // 2 (beta|gamma), in integer arithmetic
  long innerProduct2(const Root& beta, const Root& gamma) const {
    long s = 0;
    for (int i = 0; i < rank; ++i) {
      if (!beta.coeffs[i]) continue;
      for (int j = 0; j < rank; ++j)
        if (gamma.coeffs[j]) s += long(beta.coeffs[i]) * gamma.coeffs[j] * gram2[i][j];
    }
    return s;
  }

  Rat normSq(const Root& r) const { return Rat(innerProduct2(r, r), 2); }

  // <beta, alpha_i^vee>, 1-based i.
  int cartanPairing(const Root& beta, int i) const {
    long s = 0;
    for (int j = 0; j < rank; ++j) s += long(cartan[i - 1][j]) * beta.coeffs[j];
    return int(s);
  }

  // s_i(beta) in the alpha basis, 1-based i.
  Root reflectRoot(int i, const Root& beta) const {
    Root r = beta;
    r.coeffs[i - 1] -= cartanPairing(beta, i);
    return r;
  }
};

namespace detail {

inline std::vector<std::pair<int, int>> simplyLacedEdges(Series s, int rank) {
  std::vector<std::pair<int, int>> e;
  if (s == Series::E6 || s == Series::E7 || s == Series::E8) {
    e = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int i = 5; i < rank; ++i) e.push_back({i, i + 1});
  } else if (s == Series::D) {
    for (int i = 1; i <= rank - 2; ++i) e.push_back({i, i + 1});
    e.push_back({rank - 2, rank});
  }
  return e;
}

inline std::vector<RatVec> makeGram(Series s, int rank) {
  std::vector<RatVec> B(rank, RatVec(rank, Rat(0)));
  if (s == Series::F4) {
    // Planche VIII: a1,a2 long (norm 2), a3,a4 short (norm 1).
    B[0][0] = 2; B[1][1] = 2; B[2][2] = 1; B[3][3] = 1;
    B[0][1] = B[1][0] = -1;
    B[1][2] = B[2][1] = -1;
    B[2][3] = B[3][2] = Rat(-1, 2);
  } else if (s == Series::G2) {
    // Planche IX: a1 short (norm 2), a2 long (norm 6).
    B[0][0] = 2; B[1][1] = 6;
    B[0][1] = B[1][0] = -3;
  } else {
    for (int i = 0; i < rank; ++i) B[i][i] = 2;
    for (auto [a, b] : simplyLacedEdges(s, rank)) B[a - 1][b - 1] = B[b - 1][a - 1] = -1;
  }
  return B;
}

inline std::vector<RatVec> makeEpsilonAlpha(Series s, int rank) {
  std::vector<RatVec> eps;
  if (s == Series::D) {
    // Planche IV: a_i = e_i - e_{i+1} (i < n), a_n = e_{n-1} + e_n.
    for (int i = 1; i <= rank; ++i) {
      RatVec v(rank, Rat(0));
      if (i < rank) {
        v[i - 1] = 1;
        v[i] = -1;
      } else {
        v[rank - 2] = 1;
        v[rank - 1] = 1;
      }
      eps.push_back(v);
    }
  } else if (s == Series::F4) {
    // Planche VIII: a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2.
    eps = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1},
           {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};
  } else if (s == Series::G2) {
    // Planche IX: a1 = e1-e2, a2 = -2e1+e2+e3.
    eps = {{1, -1, 0}, {-2, 1, 1}};
  }
  return eps;
}

inline std::vector<RatVec> invertMatrix(const std::vector<RatVec>& m) {
  int n = int(m.size());
  std::vector<RatVec> a(m), inv(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (int j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline size_t expectedPositiveCount(Series s, int rank) {
  switch (s) {
    case Series::E6: return 36;
    case Series::E7: return 63;
    case Series::E8: return 120;
    case Series::F4: return 24;
    case Series::G2: return 6;
    case Series::D: return size_t(rank) * (rank - 1);
  }
  return 0;
}

}  // namespace detail

// Constructs the root system with Bourbaki conventions. Positive roots are
// enumerated by closing the simple roots under root strings and stored in
// (height, lex) order so every report is reproducible.
inline RootSystemData buildRootSystem(Series series, int rank = 0) {
  switch (series) {
    case Series::E6: rank = 6; break;
    case Series::E7: rank = 7; break;
    case Series::E8: rank = 8; break;
    case Series::F4: rank = 4; break;
    case Series::G2: rank = 2; break;
    case Series::D:
      if (rank < 4 || rank > 8)
        throw std::invalid_argument("unsupported series/rank: D" + std::to_string(rank));
      break;
  }

  RootSystemData sys;
  sys.series = series;
  sys.rank = rank;
  sys.gram = detail::makeGram(series, rank);
  sys.gram2.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat twice = 2 * sys.gram[i][j];
      if (!isInteger(twice)) throw std::runtime_error("gram matrix not half-integral");
      sys.gram2[i][j] = long(numerator(twice));
    }

  sys.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat c = 2 * sys.gram[i][j] / sys.gram[i][i];
      if (!isInteger(c)) throw std::runtime_error("non-integral Cartan entry");
      sys.cartan[i][j] = int(numerator(c));
    }

  std::vector<RatVec> cartanRat(rank, RatVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartanRat[i][j] = sys.cartan[i][j];
  sys.invCartan = detail::invertMatrix(cartanRat);

  sys.epsilonAlpha = detail::makeEpsilonAlpha(series, rank);

  // Close the simple roots under addition along root strings.
  std::map<std::vector<int>, bool> known;
  std::vector<Root> frontier;
  for (int i = 1; i <= rank; ++i) {
    Root a = sys.simpleRoot(i);
    a.coeffs.resize(rank);
    known[a.coeffs] = true;
    frontier.push_back(a);
  }
  auto isKnown = [&](const Root& r) { return known.count(r.coeffs) > 0; };
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 1; i <= rank; ++i) {
        // p = length of the descending alpha_i-string below beta.
        Root down = beta;
        int p = 0;
        while (true) {
          down.coeffs[i - 1] -= 1;
          bool zero = std::all_of(down.coeffs.begin(), down.coeffs.end(),
                                  [](int c) { return c == 0; });
          if (zero || known.count(down.coeffs)) { ++p; continue; }
          break;
        }
        int q = p - sys.cartanPairing(beta, i);
        if (q >= 1) {
          Root up = beta;
          up.coeffs[i - 1] += 1;
          if (!isKnown(up)) {
            known[up.coeffs] = true;
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  for (auto& [c, _] : known) sys.positiveRoots.push_back(Root{c});
  std::sort(sys.positiveRoots.begin(), sys.positiveRoots.end(),
            [](const Root& a, const Root& b) {
              int ha = a.height(), hb = b.height();
              if (ha != hb) return ha < hb;
              return a.coeffs < b.coeffs;
            });
  for (size_t k = 0; k < sys.positiveRoots.size(); ++k)
    sys.positiveIndex[sys.positiveRoots[k].coeffs] = int(k);

  if (sys.positiveRoots.size() != detail::expectedPositiveCount(series, rank))
    throw std::runtime_error("positive root enumeration failed for " + sys.name());
  return sys;
}

// <mu, beta^vee> = 2(mu|beta)/(beta|beta), exact.
inline Rat pairing(const RootSystemData& sys, const Weight& mu, const Root& beta) {
  long nn2 = sys.innerProduct2(beta, beta);
  Rat s = 0;
  for (int j = 0; j < sys.rank; ++j)
    if (beta.coeffs[j] != 0)
      s += Rat(long(beta.coeffs[j]) * sys.gram2[j][j]) * mu.coeffs[j];
  return s / nn2;
}

// Cartan integer <beta, gamma^vee> for two roots.
inline Rat rootPairing(const RootSystemData& sys, const Root& beta, const Root& gamma) {
  return Rat(2 * sys.innerProduct2(beta, gamma), sys.innerProduct2(gamma, gamma));
}

// Coordinates of mu over the simple roots: mu = sum_i c_i alpha_i.
inline RatVec toAlphaBasis(const RootSystemData& sys, const Weight& mu) {
  RatVec c(sys.rank, Rat(0));
  for (int i = 0; i < sys.rank; ++i)
    for (int j = 0; j < sys.rank; ++j)
      c[i] += sys.invCartan[i][j] * mu.coeffs[j];
  return c;
}

inline Weight fromAlphaBasis(const RootSystemData& sys, const RatVec& c) {
  Weight mu;
  mu.coeffs.assign(sys.rank, Rat(0));
  for (int i = 0; i < sys.rank; ++i)
    for (int j = 0; j < sys.rank; ++j)
      mu.coeffs[i] += Rat(sys.cartan[i][j]) * c[j];
  return mu;
}

inline Weight rho(const RootSystemData& sys) {
  Weight r;
  r.coeffs.assign(sys.rank, Rat(1));
  return r;
}

inline Weight fundamentalWeight(const RootSystemData& sys, int i) {
  Weight w;
  w.coeffs.assign(sys.rank, Rat(0));
  w.coeffs[i - 1] = 1;
  return w;
}

// (mu|nu) under the system's normalisation.
inline Rat weightInnerProduct(const RootSystemData& sys, const Weight& mu, const Weight& nu) {
  RatVec cm = toAlphaBasis(sys, mu), cn = toAlphaBasis(sys, nu);
  Rat s = 0;
  for (int i = 0; i < sys.rank; ++i)
    for (int j = 0; j < sys.rank; ++j)
      if (cm[i] != 0 && cn[j] != 0) s += cm[i] * cn[j] * sys.gram[i][j];
  return s;
}

// Bourbaki epsilon-coordinates of a weight (D_n, F4, G2 only).
inline RatVec epsilonCoords(const RootSystemData& sys, const Weight& mu) {
  if (sys.epsilonAlpha.empty())
    throw std::domain_error("no epsilon chart for " + sys.name());
  RatVec c = toAlphaBasis(sys, mu);
  size_t dim = sys.epsilonAlpha[0].size();
  RatVec out(dim, Rat(0));
  for (int j = 0; j < sys.rank; ++j)
    for (size_t k = 0; k < dim; ++k) out[k] += c[j] * sys.epsilonAlpha[j][k];
  return out;
}

// Checks that simpleBasis forms a D_n simple system (Planche IV order, fork at
// the last two nodes) inside the ambient system; returns the n epsilon
// coordinates of mu relative to that subsystem.
inline RatVec subsystemEpsilonCoords(const RootSystemData& sys, const Weight& mu,
                                     const std::vector<Root>& simpleBasis) {
  int n = int(simpleBasis.size());
  if (n < 4) throw std::invalid_argument("invalid subsystem: rank < 4");
  RootSystemData dn = buildRootSystem(Series::D, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = rootPairing(sys, simpleBasis[j], simpleBasis[i]);
      if (!isInteger(c) || int(numerator(c)) != dn.cartan[i][j])
        throw std::invalid_argument("invalid subsystem: not a D" + std::to_string(n) +
                                    " simple system");
    }
  RatVec b(n);
  for (int i = 0; i < n; ++i) b[i] = pairing(sys, mu, simpleBasis[i]);
  // eps(mu) = sum_i b_i eps(w'_i) with the Planche IV fundamental weights.
  RatVec eps(n, Rat(0));
  for (int i = 1; i <= n; ++i) {
    RatVec w(n, Rat(0));
    if (i <= n - 2) {
      for (int k = 0; k < i; ++k) w[k] = 1;
    } else if (i == n - 1) {
      for (int k = 0; k < n; ++k) w[k] = Rat(1, 2);
      w[n - 1] = Rat(-1, 2);
    } else {
      for (int k = 0; k < n; ++k) w[k] = Rat(1, 2);
    }
    for (int k = 0; k < n; ++k) eps[k] += b[i - 1] * w[k];
  }
  return eps;
}

inline Series parseSeries(const std::string& s, int& rank) {
  if (s == "E6") { rank = 6; return Series::E6; }
  if (s == "E7") { rank = 7; return Series::E7; }
  if (s == "E8") { rank = 8; return Series::E8; }
  if (s == "F4") { rank = 4; return Series::F4; }
  if (s == "G2") { rank = 2; return Series::G2; }
  if (s.size() == 2 && s[0] == 'D') { rank = s[1] - '0'; return Series::D; }
  throw std::invalid_argument("unknown root system '" + s + "'");
}

}  // namespace liecheck
