#pragma once

#include <vector>

#include "liecheck/root_system.hpp"

namespace liecheck {

// values[i] = alpha_{i+1}(tau) in Bourbaki order.
struct CocharacterTau {
  std::vector<long> values;
};

inline long gradeRoot(const CocharacterTau& tau, const Root& beta) {
  long g = 0;
  for (size_t i = 0; i < beta.coeffs.size(); ++i) g += tau.values[i] * beta.coeffs[i];
  return g;
}

// {beta in Phi+ : beta(tau) = k}, in the system's deterministic root order.
inline std::vector<Root> gradedPositiveRoots(const RootSystemData& sys,
                                             const CocharacterTau& tau, long k) {
  std::vector<Root> out;
  for (const Root& beta : sys.positiveRoots)
    if (gradeRoot(tau, beta) == k) out.push_back(beta);
  return out;
}

// |Phi+(0)| + |Phi+(1)| = (dim g_e - rk g)/2
inline bool checkCountFormula(const RootSystemData& sys, const CocharacterTau& tau,
                              long dimCentralizer) {
  long n0 = long(gradedPositiveRoots(sys, tau, 0).size());
  long n1 = long(gradedPositiveRoots(sys, tau, 1).size());
  return 2 * (n0 + n1) + sys.rank == dimCentralizer;
}

// Sum over Phi+(0) u Phi+(1) of the alpha-coefficients; equals 2 rho_e.
inline std::vector<long> twoRhoE(const RootSystemData& sys, const CocharacterTau& tau) {
  std::vector<long> acc(sys.rank, 0);
  for (long k = 0; k <= 1; ++k)
    for (const Root& beta : gradedPositiveRoots(sys, tau, k))
      for (int i = 0; i < sys.rank; ++i) acc[i] += beta.coeffs[i];
  return acc;
}

}  // namespace liecheck
