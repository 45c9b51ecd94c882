#pragma once

#include "padic/burnside.hpp"
#include "padic/evspec.hpp"
#include "padic/rigid.hpp"

#include <map>
#include <utility>
#include <vector>

namespace padic {

/// Finite presentation of the Hom space between two rigid objects.
///
/// The full Hom module decomposes as
///   stable part + finitely supported deviations + product of free parts:
/// the stable part is the space of compatible pairs (g, phi) with
/// c_N g = phi c_M, a deviation at level k changes the map on the image of
/// the structure map at that single level, and the free part collects the
/// maps out of an equivariant complement of that image in the template,
/// which are unconstrained at every level (an infinite product when
/// nonzero).
struct HomDescriptor {
  long stable_dim = 0;
  int common_stab = 0;
  EvSeq dev_dims;   // natural-valued, eventually constant
  EvSeq free_dims;  // natural-valued, eventually constant
  std::vector<RigidMorphism> stable_basis;
  // Generators of each finitely indexed deviation slot; entries at the
  // common stab generate the repeating tail slot.
  std::vector<std::pair<int, RigidMorphism>> dev_basis;

  long dev_at(int k) const;
  long free_at(int k) const;
  bool total_zero() const;
  /// stable + deviations at levels 0..k; the finite-dimensional truncation
  /// used by the left-exactness checks (free parts excluded).
  long truncated_dim(int k) const;
};

HomDescriptor hom_space(const RigidObject& m, const RigidObject& n);

/// Generators of the deviation slot at the given level. Below the common
/// stab these are the stored generators; above it the tail generators are
/// replayed at the requested level.
std::vector<RigidMorphism> dev_slot_basis(const HomDescriptor& d, int level);

/// Coordinates of an eventually constant morphism in the truncated basis of
/// the descriptor (stable part, then deviation slots 0..kappa). Throws when
/// the morphism has free-part content; sources with a surjective structure
/// map never do.
std::vector<Rational> truncated_coords(const HomDescriptor& d, const RigidMorphism& h,
                                       int kappa);

/// Kernel dimension of postcomposition with f on the finite truncations
/// Hom(P, source f) -> Hom(P, target f) with deviation support <= kappa.
/// By left exactness this equals the truncated dimension of Hom(P, ker f).
long postcomposition_kernel_dim(const RigidObject& p, const RigidMorphism& f, int kappa);

/// Presentation of Ext^1(M, N) as Germ(W) / const(V): W is the quotient of
/// H = Hom(M_inf, T_N) by the maps factoring through the structure map of M,
/// and V is the image in W of the maps induced from Hom(M_inf, N_inf).
/// Ext^1 vanishes iff W = 0 and is infinite dimensional otherwise.
struct ExtDescriptor {
  CyclicModule w;  // quotient H / H_c; conjugation acts trivially
  Subspace v;      // subspace of W in its quotient coordinates

  long w_dim() const { return w.dim(); }
  long v_dim() const { return v.dim(); }
  bool zero() const { return w.dim() == 0; }
};

ExtDescriptor ext1(const RigidObject& m, const RigidObject& n);

/// Independent check of ext1: dimension of the cokernel of
///   Hom(M_inf, N_inf) + sum_{k=s}^{K} Hom(M_k, N_k)
///     -> sum_{k=s}^{K} Hom(M_inf, N_k),
/// (g, (h_k)) -> (h_k c_M - c_N g). Grows affinely in K with slope dim W and
/// intercept -dim V. Requires K >= max stab + 1.
long ext1_truncation_oracle(const RigidObject& m, const RigidObject& n, int K);

struct AffineFit {
  long slope = 0;
  long intercept = 0;  // with respect to the number of levels K - s + 1
  bool exact = false;  // all sampled points lie on one line
};

AffineFit ext1_oracle_fit(const RigidObject& m, const RigidObject& n, int k_lo, int k_hi);

/// Finitely supported Z-graded family of rigid objects; the homotopy object
/// of a formal spectrum.
struct GradedRigid {
  long p = 2;
  std::map<int, RigidObject> entries;  // zero objects omitted

  bool operator==(const GradedRigid&) const = default;
};

GradedRigid graded_object(RigidObject m, int degree = 0);
GradedRigid direct_sum(const GradedRigid& x, const GradedRigid& y);
GradedRigid tensor(const GradedRigid& x, const GradedRigid& y);
GradedRigid shift(const GradedRigid& x, int d);
GradedRigid restrict_object(const GradedRigid& x, int n);

/// The two graded pieces of the short exact sequence computing maps of
/// degree d: Hom in matching degrees and Ext^1 against the suspension.
struct AdamsMaps {
  std::vector<std::pair<int, HomDescriptor>> hom;  // degree i: Hom(X_i, Y_{i+d})
  std::vector<std::pair<int, ExtDescriptor>> ext;  // degree i: Ext1(X_i, Y_{i+d+1})

  bool hom_zero() const;
  bool ext_zero() const;
};

AdamsMaps adams_maps(const GradedRigid& x, const GradedRigid& y, int d);

}  // namespace padic
