#include "padic/matrix.hpp"

#include <stdexcept>

namespace padic {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
  a_.resize(static_cast<size_t>(rows) * cols);
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::column(const std::vector<Rational>& entries) {
  Mat m(static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m(i, 0) = entries[i];
  return m;
}

Mat Mat::unit_column(int n, int i) {
  Mat m(n, 1);
  m(i, 0) = 1;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat+: shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat-: shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
  Mat r(rows_, o.cols_);
  // Skip zero entries of the left factor; matrices here are often sparse
  // permutation-like actions.
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o(k, j);
        if (bkj == 0) continue;
        r(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator*(const Rational& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::pow(long long e) const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::pow: not square");
  if (e < 0) throw std::invalid_argument("Mat::pow: negative exponent");
  Mat result = identity(rows_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat Mat::col(int j) const { return cols_range(j, 1); }

Mat Mat::cols_range(int j0, int count) const {
  Mat r(rows_, count);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < count; ++j) r(i, j) = (*this)(i, j0 + j);
  return r;
}

Mat Mat::rows_range(int i0, int count) const {
  Mat r(count, cols_);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i0 + i, j);
  return r;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: col mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
  Mat r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

Mat Mat::kron(const Mat& b) const {
  Mat r(rows_ * b.rows(), cols_ * b.cols());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rational& aij = (*this)(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (b(k, l) == 0) continue;
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
  return r;
}

Mat rref(Mat m, std::vector<int>& pivot_cols) {
  pivot_cols.clear();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    std::vector<int> support;  // nonzero columns of the pivot row
    if (m(r, c) != 1) {
      Rational inv = Rational(1) / m(r, c);
      for (int j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) {
          m(r, j) *= inv;
          support.push_back(j);
        }
    } else {
      for (int j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) support.push_back(j);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j : support) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return m;
}

Mat rref(Mat m) {
  std::vector<int> pivots;
  return rref(std::move(m), pivots);
}

int rank(const Mat& m) {
  std::vector<int> pivots;
  rref(m, pivots);
  return static_cast<int>(pivots.size());
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
  std::vector<int> pivots;
  Mat red = rref(Mat::hcat(m, Mat::identity(m.rows())), pivots);
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] >= m.cols()) throw std::domain_error("inverse: singular matrix");
  if (static_cast<int>(pivots.size()) < m.cols())
    throw std::domain_error("inverse: singular matrix");
  return red.cols_range(m.cols(), m.cols());
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  std::vector<int> pivots;
  Mat red = rref(Mat::hcat(a, b), pivots);
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;  // inconsistent system
  Mat x(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = red(static_cast<int>(r), a.cols() + j);
  return x;
}

Mat extend_to_basis(const Mat& b) {
  std::vector<int> pivots;
  rref(Mat::hcat(b, Mat::identity(b.rows())), pivots);
  Mat extra(b.rows(), b.rows() - b.cols());
  int k = 0;
  for (int c : pivots)
    if (c >= b.cols()) extra(c - b.cols(), k++) = 1;
  if (k != extra.cols()) throw std::invalid_argument("extend_to_basis: dependent columns");
  return extra;
}

Subspace Subspace::from_spanning_columns(const Mat& columns) {
  std::vector<int> pivots;
  Mat red = rref(columns.transpose(), pivots);
  Subspace s;
  s.ambient_ = columns.rows();
  s.basis_ = red.rows_range(0, static_cast<int>(pivots.size())).transpose();
  return s;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(ambient, 0);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(ambient);
  return s;
}

bool Subspace::contains(const Mat& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("Subspace::contains: bad vector shape");
  return solve(basis_, v).has_value();
}

Subspace kernel_basis(const Mat& m) {
  return Subspace::from_spanning_columns(kernel_basis_matrix(m));
}

Mat kernel_basis_matrix(const Mat& m) {
  std::vector<int> pivots;
  Mat red = rref(m, pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  Mat basis(m.cols(), m.cols() - static_cast<int>(pivots.size()));
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -red(static_cast<int>(r), c);
    ++k;
  }
  return basis;
}

Subspace column_space(const Mat& m) { return Subspace::from_spanning_columns(m); }

Subspace pullback_of_maps(const Mat& f, const Mat& g) {
  if (f.rows() != g.rows())
    throw std::invalid_argument("pullback_of_maps: targets have different dimension");
  return kernel_basis(Mat::hcat(f, -g));
}

}  // namespace padic
