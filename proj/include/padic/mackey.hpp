#pragma once

#include "padic/burnside.hpp"
#include "padic/homext.hpp"
#include "padic/rigid.hpp"

#include <vector>

namespace padic {

/// Mackey-functor value of a rigid object at the subgroup p^k Z_p, split by
/// idempotents: component j is the fixed-point dimension of M_j under
/// p^k Z_p / p^j and the infinity part is the fixed-point dimension of
/// M_infinity. The full value is the pullback of these pieces.
struct MackeyValueDescriptor {
  int k = 0;
  long inf_dim = 0;
  EvSeq component_dims;  // zero below k, eventually constant

  long component_at(int j) const;
};

MackeyValueDescriptor mackey_components(const RigidObject& m, int k);

/// Orbit counts of the splitting of maps between suspension orbits: for each
/// open subgroup index j, the summand is spanned by the orbits of Z/p^m
/// under translation by the image of p^n Z_p, provided j >= m; each orbit
/// contributes one copy of Q.
struct TomDieckTable {
  long p = 2;
  int n = 0, m = 0, jmax = 0;
  std::vector<long> per_j_dims;  // j = n..jmax

  long dim_at(int j) const;
};

/// Pure integer enumeration mod p^m; errors when p > 5 or jmax > 8 or
/// jmax < max(n, m).
TomDieckTable td_split(long p, int n, int m, int jmax);

/// Closed form of the maps [orbit_n, orbit_m]: dimension p^min(n,m) at every
/// j >= max(n,m) and at the tail, zero below.
MackeyValueDescriptor orbit_hom(long p, int n, int m);

/// Homotopy object of the orbit Z_p/p^n: the generator A(n) in degree zero.
GradedRigid pi_A_orbit(long p, int n);

}  // namespace padic
