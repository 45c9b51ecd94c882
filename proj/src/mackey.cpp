#include "padic/mackey.hpp"

#include <stdexcept>

namespace padic {

long MackeyValueDescriptor::component_at(int j) const {
  if (j < 0) throw std::invalid_argument("component_at: negative index");
  Rational v = component_dims.at(static_cast<size_t>(j));
  return static_cast<long>(numerator(v));
}

MackeyValueDescriptor mackey_components(const RigidObject& m0, int k) {
  if (k < 0) throw std::invalid_argument("mackey_components: negative subgroup level");
  RigidObject m = canonicalize(m0);
  MackeyValueDescriptor d;
  d.k = k;
  d.inf_dim = fixed_points(m.minf, std::min(k, m.stab)).dim();
  int horizon = std::max(m.stab, k);
  std::vector<Rational> prefix;
  for (int j = 0; j < horizon; ++j)
    prefix.push_back(j < k ? Rational(0)
                           : Rational(fixed_points(m.level_module(j), k).dim()));
  long tail = fixed_points(inflate(m.tmpl, horizon), std::min(k, horizon)).dim();
  d.component_dims = EvSeq(m.p, std::move(prefix), Rational(tail));
  return d;
}

long TomDieckTable::dim_at(int j) const {
  if (j < n || j > jmax) throw std::invalid_argument("dim_at: j out of range");
  return per_j_dims[static_cast<size_t>(j - n)];
}

TomDieckTable td_split(long p, int n, int m, int jmax) {
  if (p > 5) throw std::invalid_argument("td_split: p out of enumeration range");
  if (jmax > 8) throw std::invalid_argument("td_split: jmax out of enumeration range");
  if (n < 0 || m < 0 || jmax < std::max(n, m))
    throw std::invalid_argument("td_split: need jmax >= max(n, m)");

  // Orbits of Z/p^m under translation by p^n, by explicit enumeration.
  long long pm = ipow(p, m), step = ipow(p, std::min(n, m)) % pm;
  long orbit_count = 0;
  std::vector<char> seen(static_cast<size_t>(pm), 0);
  for (long long x = 0; x < pm; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    ++orbit_count;
    long long y = x;
    do {
      seen[static_cast<size_t>(y)] = 1;
      y = (y + step) % pm;
    } while (y != x);
  }

  TomDieckTable t{p, n, m, jmax, {}};
  for (int j = n; j <= jmax; ++j) {
    // The fixed set of p^j Z_p on Z_p/p^m is empty unless j >= m, and is
    // everything otherwise.
    t.per_j_dims.push_back(j < m ? 0 : orbit_count);
  }
  return t;
}

MackeyValueDescriptor orbit_hom(long p, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("orbit_hom: negative index");
  long dim = static_cast<long>(ipow(p, std::min(n, m)));
  MackeyValueDescriptor d;
  d.k = n;
  d.inf_dim = dim;
  std::vector<Rational> prefix(std::max(n, m), Rational(0));
  d.component_dims = EvSeq(p, std::move(prefix), Rational(dim));
  return d;
}

GradedRigid pi_A_orbit(long p, int n) {
  return graded_object(generator(GenKind::A, n, p), 0);
}

}  // namespace padic
