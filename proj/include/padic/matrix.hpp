#pragma once

#include "padic/rational.hpp"

#include <optional>
#include <vector>

namespace padic {

/// Dense matrix over Q, row major. Either dimension may be zero; a d x 0 or
/// 0 x d matrix is the unique map to or from the zero space.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols);

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat column(const std::vector<Rational>& entries);
  static Mat unit_column(int n, int i);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }
  Rational& operator()(int i, int j) { return a_[idx(i, j)]; }

  bool operator==(const Mat&) const = default;

  Mat operator+(const Mat&) const;
  Mat operator-(const Mat&) const;
  Mat operator-() const;
  Mat operator*(const Mat&) const;
  Mat operator*(const Rational&) const;

  Mat transpose() const;
  Mat pow(long long e) const;  // square matrices, e >= 0

  bool is_zero() const;
  bool is_identity() const;

  Mat col(int j) const;
  Mat cols_range(int j0, int count) const;
  Mat rows_range(int i0, int count) const;

  static Mat hcat(const Mat& a, const Mat& b);
  static Mat vcat(const Mat& a, const Mat& b);
  static Mat block_diag(const Mat& a, const Mat& b);
  Mat kron(const Mat& b) const;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Reduced row echelon form; unique for each matrix.
Mat rref(Mat m);
/// rref together with the pivot column of each pivot row.
Mat rref(Mat m, std::vector<int>& pivot_cols);
int rank(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error if singular

/// Any X with a*X = b, free variables set to zero; nullopt if inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Columns extending the (independent) columns of b to a basis of Q^rows,
/// chosen among standard unit vectors.
Mat extend_to_basis(const Mat& b);

/// Subspace of Q^ambient in canonical form: the basis is the transposed rref
/// of the spanning matrix, so equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace from_spanning_columns(const Mat& columns);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  /// ambient x dim matrix whose columns are the canonical basis.
  const Mat& basis() const { return basis_; }

  bool contains(const Mat& column_vector) const;
  bool operator==(const Subspace&) const = default;

 private:
  int ambient_;
  Mat basis_;
};

/// Basis of {x : m*x = 0}. dim = cols - rank.
Subspace kernel_basis(const Mat& m);
Mat kernel_basis_matrix(const Mat& m);

/// Column space of m in canonical form.
Subspace column_space(const Mat& m);

/// Basis of {(a,b) in A+B : f(a) = g(b)}, the pullback of f: A -> C and
/// g: B -> C, computed as the kernel of [f | -g].
/// Throws std::invalid_argument when the targets disagree.
Subspace pullback_of_maps(const Mat& f, const Mat& g);

}  // namespace padic
