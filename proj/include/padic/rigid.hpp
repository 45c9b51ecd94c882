#pragma once

#include "padic/cyclic.hpp"

#include <optional>
#include <vector>

namespace padic {

/// Finitely presented object of the algebraic model for the p-adic integers.
///
/// The object carries one Q[Z/p^k]-module per level k together with a module
/// at infinity and a structure map into the germ of level sequences. Levels
/// stabilize: below `stab` they are stored explicitly, from `stab` on they
/// are inflations of the template, and the structure map is the germ of the
/// constant map `cmap : minf -> tmpl`.
struct RigidObject {
  long p = 2;
  int stab = 0;
  std::vector<CyclicModule> levels;  // size == stab; levels[k] over Z/p^k
  CyclicModule tmpl;                 // over Z/p^stab
  CyclicModule minf;                 // over Z/p^stab
  Mat cmap;                          // tmpl.dim x minf.dim, equivariant

  CyclicModule level_module(int k) const;
  bool is_zero() const;
  bool operator==(const RigidObject&) const = default;
};

void validate(const RigidObject& m);  // throws std::invalid_argument

/// Lowers stab while the last stored level and both modules at infinity are
/// already inflated from one step down, so equal presentations compare equal.
RigidObject canonicalize(RigidObject m);
RigidObject raise_stab(const RigidObject& m, int s);

enum class GenKind { A, E, L };

/// A(n): Q[Z_p/p^n] at every level >= n and at infinity, diagonal structure
/// map. E(n): Q[Z_p/p^n] at level n only. L(n): Q[Z_p/p^n] at infinity only.
RigidObject generator(GenKind kind, int n, long p);
RigidObject zero_object(long p);

RigidObject direct_sum(const RigidObject& m, const RigidObject& n);
RigidObject tensor(const RigidObject& m, const RigidObject& n);

/// Restriction along p^n Z_p -> Z_p: drops the first n levels and replaces
/// every action by its p^n-th power.
RigidObject restrict_object(const RigidObject& m, int n);

/// Object of the model for the finite quotient Z/p^n: one module per level
/// 0..n.
struct FiniteLevelObject {
  long p = 2;
  int n = 0;
  std::vector<CyclicModule> levels;  // size n + 1
};

void validate(const FiniteLevelObject& m);

/// Inflation along Z_p -> Z/p^n: constant from level n on, diagonal
/// structure map.
RigidObject inflate_finite(const FiniteLevelObject& m);

/// Eventually constant morphism: explicit maps below `stab`, an inflated
/// stable map from `stab` on, and a map at infinity satisfying
/// target.cmap * finf = stable * source.cmap.
struct RigidMorphism {
  RigidObject source, target;
  int stab = 0;                 // >= both object stabs
  std::vector<Mat> level_maps;  // size == stab
  Mat stable;                   // target.tmpl.dim x source.tmpl.dim
  Mat finf;                     // target.minf.dim x source.minf.dim

  Mat level_map(int k) const { return k < stab ? level_maps[k] : stable; }
  bool is_zero() const;
};

void validate(const RigidMorphism& f);

RigidMorphism identity_morphism(const RigidObject& m);
RigidMorphism zero_morphism(const RigidObject& source, const RigidObject& target);
RigidMorphism add(const RigidMorphism& f, const RigidMorphism& g);
RigidMorphism scale(const RigidMorphism& f, const Rational& s);
/// f after g; throws when target(g) != source(f).
RigidMorphism compose(const RigidMorphism& f, const RigidMorphism& g);
RigidMorphism invert(const RigidMorphism& f);  // throws if any piece is singular

struct SubobjectResult {
  RigidObject object;
  RigidMorphism inclusion;
};
struct QuotientResult {
  RigidObject object;
  RigidMorphism projection;
};

SubobjectResult kernel(const RigidMorphism& f);
QuotientResult cokernel(const RigidMorphism& f);
SubobjectResult image(const RigidMorphism& f);

/// Isomorphism test: equal characters levelwise, at the template and at
/// infinity, and equal rank of the structure map on every isotypic
/// component. On success an explicit verified isomorphism is returned.
std::optional<RigidMorphism> isomorphism_witness(const RigidObject& m, const RigidObject& n);
bool is_isomorphic(const RigidObject& m, const RigidObject& n);

}  // namespace padic
