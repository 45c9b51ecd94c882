#include "padic/cyclic.hpp"

#include <stdexcept>

namespace padic {

namespace {

void require_same_prime(const CyclicModule& m, const CyclicModule& n) {
  if (m.p != n.p) throw std::invalid_argument("cyclic: prime mismatch");
}

int common_level(const CyclicModule& m, const CyclicModule& n) {
  return std::max(m.level, n.level);
}

// Incremental row-echelon span for membership tests.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int ambient) : ambient_(ambient) {}

  int dim() const { return static_cast<int>(rows_.size()); }

  // Returns true if v was independent (and is now included).
  bool add(const Mat& v) {
    std::vector<Rational> w(ambient_);
    for (int i = 0; i < ambient_; ++i) w[i] = v(i, 0);
    reduce(w);
    int piv = pivot_of(w);
    if (piv < 0) return false;
    Rational inv = Rational(1) / w[piv];
    for (auto& x : w) x *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(const Mat& v) const {
    std::vector<Rational> w(ambient_);
    for (int i = 0; i < ambient_; ++i) w[i] = v(i, 0);
    reduce(w);
    return pivot_of(w) < 0;
  }

 private:
  void reduce(std::vector<Rational>& w) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = w[pivots_[r]];
      if (c == 0) continue;
      Rational f = c;
      for (int j = 0; j < ambient_; ++j)
        if (rows_[r][j] != 0) w[j] -= f * rows_[r][j];
    }
  }
  int pivot_of(const std::vector<Rational>& w) const {
    for (int j = 0; j < ambient_; ++j)
      if (w[j] != 0) return j;
    return -1;
  }

  int ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

void validate(const CyclicModule& m) {
  if (m.p < 2) throw std::invalid_argument("CyclicModule: bad prime");
  if (m.level < 0) throw std::invalid_argument("CyclicModule: negative level");
  if (m.action.rows() != m.action.cols())
    throw std::invalid_argument("CyclicModule: action not square");
  if (!m.action.pow(ipow(m.p, m.level)).is_identity())
    throw std::invalid_argument("CyclicModule: action order does not divide p^level");
}

CyclicModule regular_module(long p, int k) {
  if (k < 0) throw std::invalid_argument("regular_module: negative level");
  long long n = ipow(p, k);
  Mat act(static_cast<int>(n), static_cast<int>(n));
  for (long long i = 0; i < n; ++i) act(static_cast<int>((i + 1) % n), static_cast<int>(i)) = 1;
  return CyclicModule{p, k, std::move(act)};
}

CyclicModule trivial_module(long p, int k, int dim) {
  return CyclicModule{p, k, Mat::identity(dim)};
}

CyclicModule zero_module(long p, int k) { return CyclicModule{p, k, Mat(0, 0)}; }

CyclicModule direct_sum(const CyclicModule& m, const CyclicModule& n) {
  require_same_prime(m, n);
  int k = common_level(m, n);
  return CyclicModule{m.p, k, Mat::block_diag(m.action, n.action)};
}

CyclicModule tensor(const CyclicModule& m, const CyclicModule& n) {
  require_same_prime(m, n);
  int k = common_level(m, n);
  return CyclicModule{m.p, k, m.action.kron(n.action)};
}

CyclicModule inflate(const CyclicModule& m, int new_level) {
  if (new_level < m.level)
    throw std::invalid_argument("inflate: new level below current");
  return CyclicModule{m.p, new_level, m.action};
}

Subspace fixed_points(const CyclicModule& m, int j) {
  if (j < 0 || j > m.level) throw std::invalid_argument("fixed_points: j out of range");
  return kernel_basis(m.action.pow(ipow(m.p, j)) - Mat::identity(m.dim()));
}

Mat average(const CyclicModule& m, int j) {
  if (j < 0 || j > m.level) throw std::invalid_argument("average: j out of range");
  long long count = ipow(m.p, m.level - j);
  Mat step = m.action.pow(ipow(m.p, j));
  Mat sum = Mat::identity(m.dim());
  Mat power = Mat::identity(m.dim());
  for (long long i = 1; i < count; ++i) {
    power = power * step;
    sum = sum + power;
  }
  return sum * (Rational(1) / Rational(count));
}

RationalCharacter character(const CyclicModule& m) {
  RationalCharacter c{m.p, m.level, {}};
  c.fixed_dims.reserve(m.level + 1);
  for (int j = 0; j <= m.level; ++j) c.fixed_dims.push_back(fixed_points(m, j).dim());
  return c;
}

RationalCharacter add(const RationalCharacter& a, const RationalCharacter& b) {
  if (a.p != b.p || a.level != b.level)
    throw std::invalid_argument("character add: shape mismatch");
  RationalCharacter c = a;
  for (size_t j = 0; j < c.fixed_dims.size(); ++j) c.fixed_dims[j] += b.fixed_dims[j];
  return c;
}

RationalCharacter scale(const RationalCharacter& a, long factor) {
  RationalCharacter c = a;
  for (auto& d : c.fixed_dims) d *= factor;
  return c;
}

RationalCharacter inflate(const RationalCharacter& a, int new_level) {
  if (new_level < a.level) throw std::invalid_argument("character inflate: bad level");
  RationalCharacter c{a.p, new_level, a.fixed_dims};
  c.fixed_dims.resize(new_level + 1, a.fixed_dims.back());
  return c;
}

std::vector<long> isotypic_multiplicities(const RationalCharacter& c) {
  std::vector<long> m(c.level + 1);
  for (int j = 0; j <= c.level; ++j) {
    long prev = j == 0 ? 0 : c.fixed_dims[j - 1];
    long diff = c.fixed_dims[j] - prev;
    long long phi = phi_pk(c.p, j);
    if (diff < 0 || diff % phi != 0)
      throw std::logic_error("isotypic_multiplicities: invalid character");
    m[j] = static_cast<long>(diff / phi);
  }
  return m;
}

IsotypicDecomposition isotypic_decomposition(const CyclicModule& m) {
  IsotypicDecomposition dec;
  dec.p = m.p;
  dec.level = m.level;
  int d = m.dim();

  // Projectors onto fixed points of the descending chain of subgroups; their
  // differences project onto the isotypic components.
  std::vector<Mat> avg(m.level + 1);
  for (int j = 0; j <= m.level; ++j) avg[j] = average(m, j);

  dec.basis = Mat(d, 0);
  dec.fvectors.resize(m.level + 1);
  dec.multiplicities.resize(m.level + 1, 0);
  dec.offsets.resize(m.level + 2, 0);

  IncrementalSpan span(d);
  std::vector<Mat> basis_cols;
  for (int j = 0; j <= m.level; ++j) {
    dec.offsets[j] = static_cast<int>(basis_cols.size());
    Mat proj = j == 0 ? avg[0] : avg[j] - avg[j - 1];
    Mat comp = Subspace::from_spanning_columns(proj).basis();
    long long phi = phi_pk(m.p, j);
    for (int c = 0; c < comp.cols(); ++c) {
      Mat v = comp.col(c);
      if (span.contains(v)) continue;
      dec.fvectors[j].push_back(v);
      ++dec.multiplicities[j];
      Mat w = v;
      for (long long i = 0; i < phi; ++i) {
        if (!span.add(w))
          throw std::logic_error("isotypic_decomposition: F-orbit collapsed");
        basis_cols.push_back(w);
        if (i + 1 < phi) w = m.action * w;
      }
    }
  }
  dec.offsets[m.level + 1] = static_cast<int>(basis_cols.size());
  if (static_cast<int>(basis_cols.size()) != d)
    throw std::logic_error("isotypic_decomposition: basis incomplete");

  dec.basis = Mat(d, d);
  for (int c = 0; c < d; ++c)
    for (int i = 0; i < d; ++i) dec.basis(i, c) = basis_cols[c](i, 0);
  dec.basis_inv = d == 0 ? Mat(0, 0) : inverse(dec.basis);
  return dec;
}

namespace {

// Images act^i w for i = 0..count-1.
std::vector<Mat> action_orbit(const CyclicModule& n, const Mat& w, long long count) {
  std::vector<Mat> orbit;
  orbit.reserve(count);
  Mat cur = w;
  for (long long i = 0; i < count; ++i) {
    orbit.push_back(cur);
    if (i + 1 < count) cur = n.action * cur;
  }
  return orbit;
}

}  // namespace

std::vector<Mat> equivariant_hom_basis(const CyclicModule& m0, const CyclicModule& n0) {
  require_same_prime(m0, n0);
  int k = common_level(m0, n0);
  CyclicModule m = inflate(m0, k), n = inflate(n0, k);
  IsotypicDecomposition dm = isotypic_decomposition(m);
  IsotypicDecomposition dn = isotypic_decomposition(n);

  std::vector<Mat> basis;
  for (int j = 0; j <= k; ++j) {
    long long phi = phi_pk(m.p, j);
    if (dm.multiplicities[j] == 0 || dn.multiplicities[j] == 0) continue;
    for (size_t t = 0; t < dn.fvectors[j].size(); ++t) {
      std::vector<Mat> orbit = action_orbit(n, dn.fvectors[j][t], 2 * phi - 1);
      for (size_t s = 0; s < dm.fvectors[j].size(); ++s) {
        int col0 = dm.offsets[j] + static_cast<int>(s) * static_cast<int>(phi);
        for (long long l = 0; l < phi; ++l) {
          // act^i v_s -> act^(i+l) w_t, zero on every other basis vector.
          Mat targets(n.dim(), m.dim());
          for (long long i = 0; i < phi; ++i) {
            const Mat& img = orbit[static_cast<size_t>(i + l)];
            for (int r = 0; r < n.dim(); ++r) targets(r, col0 + static_cast<int>(i)) = img(r, 0);
          }
          basis.push_back(targets * dm.basis_inv);
        }
      }
    }
  }
  return basis;
}

long equivariant_hom_dim(const CyclicModule& m0, const CyclicModule& n0) {
  require_same_prime(m0, n0);
  int k = common_level(m0, n0);
  auto mm = isotypic_multiplicities(inflate(character(m0), k));
  auto nn = isotypic_multiplicities(inflate(character(n0), k));
  long dim = 0;
  for (int j = 0; j <= k; ++j) dim += mm[j] * nn[j] * static_cast<long>(phi_pk(m0.p, j));
  return dim;
}

std::optional<Mat> equivariant_iso(const CyclicModule& m0, const CyclicModule& n0) {
  require_same_prime(m0, n0);
  int k = common_level(m0, n0);
  CyclicModule m = inflate(m0, k), n = inflate(n0, k);
  if (inflate(character(m0), k) != inflate(character(n0), k)) return std::nullopt;

  IsotypicDecomposition dm = isotypic_decomposition(m);
  IsotypicDecomposition dn = isotypic_decomposition(n);
  Mat targets(n.dim(), m.dim());
  for (int j = 0; j <= k; ++j) {
    long long phi = phi_pk(m.p, j);
    for (size_t s = 0; s < dm.fvectors[j].size(); ++s) {
      std::vector<Mat> orbit = action_orbit(n, dn.fvectors[j][s], phi);
      int col0 = dm.offsets[j] + static_cast<int>(s) * static_cast<int>(phi);
      for (long long i = 0; i < phi; ++i)
        for (int r = 0; r < n.dim(); ++r)
          targets(r, col0 + static_cast<int>(i)) = orbit[static_cast<size_t>(i)](r, 0);
    }
  }
  Mat iso = targets * dm.basis_inv;
  if (n.action * iso != iso * m.action)
    throw std::logic_error("equivariant_iso: constructed map not equivariant");
  return iso;
}

SubmoduleData submodule_from_basis(const CyclicModule& m, const Mat& basis_cols) {
  auto sub_action = solve(basis_cols, m.action * basis_cols);
  if (!sub_action) throw std::invalid_argument("submodule_from_basis: not invariant");
  return SubmoduleData{CyclicModule{m.p, m.level, *sub_action}, basis_cols};
}

QuotientData quotient_by_subspace(const CyclicModule& m, const Mat& basis_cols) {
  Mat extra = extend_to_basis(basis_cols);
  Mat change = inverse(Mat::hcat(basis_cols, extra));
  Mat proj = change.rows_range(basis_cols.cols(), extra.cols());
  Mat quot_action = proj * m.action * extra;
  return QuotientData{CyclicModule{m.p, m.level, quot_action}, proj, extra};
}

Mat equivariant_projector(const CyclicModule& m, const Mat& basis_cols) {
  if (basis_cols.cols() == 0) return Mat(m.dim(), m.dim());
  // Linear projector onto the span, then averaged over the group.
  Mat extra = extend_to_basis(basis_cols);
  Mat change = inverse(Mat::hcat(basis_cols, extra));
  Mat p0 = basis_cols * change.rows_range(0, basis_cols.cols());
  long long order = ipow(m.p, m.level);
  Mat inv_action = m.action.pow(order - 1);
  Mat sum(m.dim(), m.dim());
  Mat g = Mat::identity(m.dim());
  Mat ginv = Mat::identity(m.dim());
  for (long long i = 0; i < order; ++i) {
    sum = sum + g * p0 * ginv;
    if (i + 1 < order) {
      g = g * m.action;
      ginv = inv_action * ginv;
    }
  }
  return sum * (Rational(1) / Rational(order));
}

Mat equivariant_complement(const CyclicModule& m, const Mat& basis_cols) {
  if (basis_cols.cols() == 0) return Mat::identity(m.dim());
  Mat proj = equivariant_projector(m, basis_cols);
  return kernel_basis(proj).basis();
}

}  // namespace padic
