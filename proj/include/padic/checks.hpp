#pragma once

#include "padic/homext.hpp"
#include "padic/rigid.hpp"

#include <random>
#include <string>
#include <vector>

namespace padic {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled in on failure or with a short summary
};

struct CheckConfig {
  long p = 2;
  unsigned seed = 12345;
  int jmax = 5;
  int kmax = 8;  // largest truncation-oracle cutoff offset
};

/// Every module-level invariant suite; used by the `check` command.
std::vector<CheckResult> run_all_checks(const CheckConfig& config);

/// Random direct sum of generators (at least one summand).
RigidObject random_generator_sum(std::mt19937& rng, long p, int max_index, int pieces);

/// Random eventually constant morphism: a rational linear combination of the
/// stable and deviation generators of hom_space(source, target).
RigidMorphism random_morphism(std::mt19937& rng, const RigidObject& source,
                              const RigidObject& target, int max_dev_level);

}  // namespace padic
