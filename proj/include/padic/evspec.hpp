#pragma once

#include "padic/burnside.hpp"
#include "padic/rigid.hpp"

#include <map>

namespace padic {

/// Element of the module of eventually specified sequences starting at
/// `start`: a sequence (x_k)_{k >= start} with x_k in M_k whose germ is the
/// one specified by `base` in M_infinity. At stable levels the default entry
/// is cmap * base; below the stab it is zero. Only the finitely many entries
/// that differ from the default are stored.
struct EvSpecElement {
  RigidObject home;
  int start = 0;
  Mat base;                      // home.minf.dim x 1
  std::map<int, Mat> overrides;  // level >= start -> column in M_level
};

/// Validates shapes and drops overrides equal to the default entry.
EvSpecElement evspec_make(RigidObject home, int start, Mat base,
                          std::map<int, Mat> overrides = {});

Mat evspec_value_at(const EvSpecElement& x, int k);
EvSpecElement evspec_add(const EvSpecElement& x, const EvSpecElement& y);
/// Componentwise action of the group element g^exponent.
EvSpecElement evspec_act(const EvSpecElement& x, long long exponent);
bool evspec_eq(const EvSpecElement& x, const EvSpecElement& y);

/// Fixed-point dimensions of one side of the splitting of eventually
/// specified sequences under the subgroup p^subgroup_level Z_p.
struct FixedSplitSide {
  long inf_dim = 0;
  int start = 0;
  std::vector<long> level_dims;  // levels start..horizon
  long tail_dim = 0;

  long level_dim(int k) const;
};

struct FixedSplitResult {
  FixedSplitSide lhs;       // sequences starting at n
  FixedSplitSide rhs;       // sequences starting at n + 1
  long direct_summand_dim;  // dim M_n
  bool matches;             // lhs = rhs + the level-n summand, slot by slot
};

/// Descriptor identity (pi_n M)^{p^n} = (pi_{n+1} M)^{p^n} + M_n, both sides
/// computed independently by fixed-point dimensions.
FixedSplitResult evspec_fixed_split(const RigidObject& m, int n);

}  // namespace padic
