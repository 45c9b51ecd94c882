#pragma once

#include "padic/matrix.hpp"

#include <optional>
#include <vector>

namespace padic {

/// Finite-dimensional rational representation of the cyclic group Z/p^level,
/// stored as the matrix of a chosen generator. Over Q this is a semisimple
/// category with irreducibles V_j = Q(zeta_{p^j}) for j = 0..level.
struct CyclicModule {
  long p = 2;
  int level = 0;
  Mat action;  // dim x dim, invertible, order dividing p^level

  int dim() const { return action.rows(); }
  bool operator==(const CyclicModule&) const = default;
};

void validate(const CyclicModule& m);  // throws std::invalid_argument

CyclicModule regular_module(long p, int k);          // Q[Z/p^k], cyclic permutation
CyclicModule trivial_module(long p, int k, int dim);
CyclicModule zero_module(long p, int k);

CyclicModule direct_sum(const CyclicModule& m, const CyclicModule& n);
/// Kronecker product with diagonal action, after inflating to a common level.
CyclicModule tensor(const CyclicModule& m, const CyclicModule& n);
/// Reinterpret over the larger group Z/p^new_level; the generator matrix is
/// unchanged.
CyclicModule inflate(const CyclicModule& m, int new_level);

/// Fixed points under the subgroup p^j Z/p^level: kernel of action^(p^j) - 1.
Subspace fixed_points(const CyclicModule& m, int j);
/// Averaging idempotent p^-(level-j) * sum_i action^(i p^j) projecting onto
/// fixed_points(m, j).
Mat average(const CyclicModule& m, int j);

/// fixed_dims[j] = dim of fixed points under the subgroup of index p^j.
/// A complete isomorphism invariant for rational representations of Z/p^k.
struct RationalCharacter {
  long p = 2;
  int level = 0;
  std::vector<long> fixed_dims;  // size level + 1, weakly increasing

  long dim() const { return fixed_dims.empty() ? 0 : fixed_dims.back(); }
  bool operator==(const RationalCharacter&) const = default;
};

RationalCharacter character(const CyclicModule& m);
RationalCharacter add(const RationalCharacter& a, const RationalCharacter& b);
RationalCharacter scale(const RationalCharacter& a, long factor);
RationalCharacter inflate(const RationalCharacter& a, int new_level);

/// Multiplicity of the irreducible V_j, recovered from the fixed dimensions
/// by the difference transform m_j = (fixed_j - fixed_{j-1}) / phi(p^j).
std::vector<long> isotypic_multiplicities(const RationalCharacter& c);

/// Decomposition of a module into its isotypic components, each equipped
/// with a basis over the field Q(zeta_{p^j}): the Q-basis of component j is
/// { action^i v : v in fvectors[j], 0 <= i < phi(p^j) }.
struct IsotypicDecomposition {
  long p = 2;
  int level = 0;
  std::vector<long> multiplicities;   // per j = 0..level
  std::vector<std::vector<Mat>> fvectors;  // per j: m_j column vectors
  std::vector<int> offsets;           // column offset of component j in basis
  Mat basis;                          // dim x dim, invertible
  Mat basis_inv;
};

IsotypicDecomposition isotypic_decomposition(const CyclicModule& m);

/// Basis of { X : action_N X = X action_M } with both modules regarded over
/// the common group via inflation. Throws std::invalid_argument on prime
/// mismatch. dim = sum_j m_j n_j phi(p^j).
std::vector<Mat> equivariant_hom_basis(const CyclicModule& m, const CyclicModule& n);
long equivariant_hom_dim(const CyclicModule& m, const CyclicModule& n);

/// Explicit equivariant isomorphism when the characters agree, nullopt
/// otherwise.
std::optional<Mat> equivariant_iso(const CyclicModule& m, const CyclicModule& n);

struct SubmoduleData {
  CyclicModule module;
  Mat inclusion;  // ambient_dim x sub_dim
};
struct QuotientData {
  CyclicModule module;
  Mat projection;  // quot_dim x ambient_dim
  Mat section;     // ambient_dim x quot_dim, projection * section = id
};

/// Restriction of the action to an invariant subspace spanned by the given
/// independent columns. Throws if the span is not invariant.
SubmoduleData submodule_from_basis(const CyclicModule& m, const Mat& basis_cols);
/// Quotient by the invariant subspace spanned by the given columns.
QuotientData quotient_by_subspace(const CyclicModule& m, const Mat& basis_cols);

/// Equivariant projector onto an invariant subspace (average of conjugated
/// linear projectors), and a basis of the complementary invariant subspace.
Mat equivariant_projector(const CyclicModule& m, const Mat& basis_cols);
Mat equivariant_complement(const CyclicModule& m, const Mat& basis_cols);

}  // namespace padic
