#pragma once

#include <vector>

#include "qfed/stack.hpp"

namespace qfed {

// Coefficient family: e follows the electric-field problem, m the magnetic
// dual (epsilon and mu exchanged in the formulas).
enum class Family { e, m };

// Single-interface amplitude coefficients for left incidence (r, t) and
// right incidence (r_p, t_p), both families.
struct SingleInterfaceCoeffs {
  cdouble r_e, t_e, r_m, t_m;
  cdouble r_e_p, t_e_p, r_m_p, t_m_p;
};

SingleInterfaceCoeffs fresnel(const Layer& left, const Layer& right);

// Recursive multi-interface coefficients for one family. All arrays are
// 1-based and padded so the usual multilayer index conventions apply
// directly:
//   R[l]  for l = 1..N, with boundary R[N+1] = 0
//   Rp[l] for l = 1..N, with boundary Rp[0] = 0
//   T[l], Tp[l] for l = 1..N (interface transmission, left/right incidence)
//   nu[l] for l = 1..N+1 (multiple-reflection resummation per layer)
struct FamilyLadder {
  std::vector<cdouble> R, Rp, T, Tp, nu;
};

struct CoefficientLadder {
  FamilyLadder e, m;
  std::vector<cdouble> phase;  // e^{i k_l d_l}, l = 1..N+1 (1 for the leads)

  const FamilyLadder& family(Family j) const { return j == Family::e ? e : m; }
};

CoefficientLadder build_ladder(const Stack& stack, const FrequencySample& freq);

// Cumulative transmission from source layer lp into field layer l != lp,
// including interface coefficients and interior propagation factors.
cdouble cumulative_transmission(const CoefficientLadder& ladder, int l, int lp,
                                Family j);

}  // namespace qfed
