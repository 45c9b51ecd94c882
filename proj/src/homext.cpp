#include "padic/homext.hpp"

#include <stdexcept>

namespace padic {

long HomDescriptor::dev_at(int k) const {
  Rational v = dev_dims.at(static_cast<size_t>(k));
  return static_cast<long>(numerator(v));
}

long HomDescriptor::free_at(int k) const {
  Rational v = free_dims.at(static_cast<size_t>(k));
  return static_cast<long>(numerator(v));
}

bool HomDescriptor::total_zero() const {
  return stable_dim == 0 && dev_dims == evseq_zero(dev_dims.p()) &&
         free_dims == evseq_zero(free_dims.p());
}

long HomDescriptor::truncated_dim(int k) const {
  long total = stable_dim;
  for (int j = 0; j <= k; ++j) total += dev_at(j);
  return total;
}

namespace {

// Matrix that reads off coordinates along the columns of `first` in the
// decomposition [first | second] of the ambient space.
Mat coordinate_projection(const Mat& first, const Mat& second) {
  return inverse(Mat::hcat(first, second)).rows_range(0, first.cols());
}

struct SourceSplit {
  Mat c_basis;    // basis of im(cmap) inside the template
  Mat cp_basis;   // equivariant complement of it
  Mat proj_c;     // template -> C coordinates, vanishing on C'
  Mat proj_cp;    // template -> C' coordinates, vanishing on C
  CyclicModule c_mod;   // at the source stab level
  CyclicModule cp_mod;
};

SourceSplit split_template(const RigidObject& m) {
  SourceSplit s;
  s.c_basis = column_space(m.cmap).basis();
  s.cp_basis = equivariant_complement(m.tmpl, s.c_basis);
  s.proj_c = coordinate_projection(s.c_basis, s.cp_basis);
  s.proj_cp = coordinate_projection(s.cp_basis, s.c_basis);
  s.c_mod = s.c_basis.cols() == 0 ? zero_module(m.p, m.tmpl.level)
                                  : submodule_from_basis(m.tmpl, s.c_basis).module;
  s.cp_mod = s.cp_basis.cols() == 0 ? zero_module(m.p, m.tmpl.level)
                                    : submodule_from_basis(m.tmpl, s.cp_basis).module;
  return s;
}

CyclicModule at_level(const CyclicModule& m, int level) {
  // Reinterpret at a level at least as large as the order of the action.
  return CyclicModule{m.p, level, m.action};
}

RigidMorphism morphism_with(const RigidObject& src, const RigidObject& tgt, int stab,
                            std::vector<Mat> level_maps, Mat stable, Mat finf) {
  RigidMorphism f;
  f.source = src;
  f.target = tgt;
  f.stab = stab;
  f.level_maps = std::move(level_maps);
  f.stable = std::move(stable);
  f.finf = std::move(finf);
  validate(f);
  return f;
}

}  // namespace

HomDescriptor hom_space(const RigidObject& m0, const RigidObject& n0) {
  if (m0.p != n0.p) throw std::invalid_argument("hom_space: prime mismatch");
  RigidObject m = canonicalize(m0), n = canonicalize(n0);
  int s = std::max(m.stab, n.stab);
  RigidObject mr = raise_stab(m, s), nr = raise_stab(n, s);
  SourceSplit split = split_template(mr);

  HomDescriptor h;
  h.common_stab = s;

  // Per-level dimensions. Free slots exist from the source stab on, where
  // the template (and hence C') is present.
  std::vector<Rational> free_prefix(s), dev_prefix(s);
  for (int k = 0; k < s; ++k) {
    long full = equivariant_hom_dim(m.level_module(k), n.level_module(k));
    long free = 0;
    if (k >= m.stab)
      free = equivariant_hom_dim(at_level(split.cp_mod, k), n.level_module(k));
    free_prefix[k] = free;
    dev_prefix[k] = full - free;
  }
  long free_tail = equivariant_hom_dim(split.cp_mod, nr.tmpl);
  long dev_tail = equivariant_hom_dim(mr.tmpl, nr.tmpl) - free_tail;
  h.free_dims = EvSeq(m.p, std::move(free_prefix), Rational(free_tail));
  h.dev_dims = EvSeq(m.p, std::move(dev_prefix), Rational(dev_tail));

  // Stable part: compatible pairs (g, phi). Admissible g carry ker(c_M)
  // into ker(c_N); phi is then determined on C and free on C'.
  Mat ker_m = kernel_basis_matrix(mr.cmap);
  Mat ker_n = kernel_basis_matrix(nr.cmap);
  Mat comp_m = equivariant_complement(mr.minf, ker_m);
  Mat comp_n = equivariant_complement(nr.minf, ker_n);
  CyclicModule ker_n_mod = ker_n.cols() == 0 ? zero_module(m.p, s)
                                             : submodule_from_basis(nr.minf, ker_n).module;
  CyclicModule comp_m_mod = comp_m.cols() == 0
                                ? zero_module(m.p, s)
                                : submodule_from_basis(mr.minf, comp_m).module;
  CyclicModule comp_n_mod = comp_n.cols() == 0
                                ? zero_module(m.p, s)
                                : submodule_from_basis(nr.minf, comp_n).module;

  std::vector<Mat> admissible;  // maps minf_M -> minf_N
  for (const Mat& t : equivariant_hom_basis(mr.minf, ker_n_mod))
    admissible.push_back(ker_n * t);
  if (comp_m.cols() > 0) {
    Mat proj_comp_m = coordinate_projection(comp_m, ker_m);
    for (const Mat& t : equivariant_hom_basis(comp_m_mod, comp_n_mod))
      admissible.push_back(comp_n * t * proj_comp_m);
  }

  // Preimages of the C basis under c_M, to evaluate the induced phi.
  std::optional<Mat> c_preimage = solve(mr.cmap, split.c_basis);
  if (split.c_basis.cols() > 0 && !c_preimage)
    throw std::logic_error("hom_space: image basis has no preimage");

  std::vector<Mat> zero_levels(s);
  for (int k = 0; k < s; ++k)
    zero_levels[k] = Mat(n.level_module(k).dim(), m.level_module(k).dim());

  for (const Mat& g : admissible) {
    Mat on_c = split.c_basis.cols() > 0 ? nr.cmap * g * *c_preimage
                                        : Mat(nr.tmpl.dim(), 0);
    Mat phi = on_c * split.proj_c;  // zero on C'
    h.stable_basis.push_back(morphism_with(m, n, s, zero_levels, phi, g));
  }
  for (const Mat& psi : equivariant_hom_basis(split.cp_mod, nr.tmpl)) {
    Mat phi = psi * split.proj_cp;
    h.stable_basis.push_back(morphism_with(m, n, s, zero_levels, phi,
                                           Mat(nr.minf.dim(), mr.minf.dim())));
  }
  h.stable_dim = static_cast<long>(h.stable_basis.size());

  // Deviation generators, one slot per level up to and including the tail
  // representative at level s.
  for (int k = 0; k <= s; ++k) {
    CyclicModule src_k = k < s ? m.level_module(k) : inflate(mr.tmpl, s);
    CyclicModule tgt_k = k < s ? n.level_module(k) : inflate(nr.tmpl, s);
    std::vector<Mat> slot;
    if (k < m.stab) {
      slot = equivariant_hom_basis(src_k, tgt_k);
    } else {
      CyclicModule c_k = at_level(split.c_mod, k < s ? k : s);
      for (const Mat& t : equivariant_hom_basis(c_k, tgt_k))
        slot.push_back(t * split.proj_c);
    }
    for (Mat& dev : slot) {
      int mstab = std::max(s, k + 1);
      std::vector<Mat> lm(mstab);
      for (int j = 0; j < mstab; ++j)
        lm[j] = j == k ? dev
                       : Mat(n.level_module(j).dim(), m.level_module(j).dim());
      h.dev_basis.emplace_back(
          k, morphism_with(m, n, mstab, std::move(lm),
                           Mat(nr.tmpl.dim(), mr.tmpl.dim()),
                           Mat(nr.minf.dim(), mr.minf.dim())));
    }
  }

  return h;
}

namespace {

// Matrix whose columns are the defining matrices of one deviation slot.
std::vector<const Mat*> dev_slot_matrices(const HomDescriptor& d, int slot) {
  std::vector<const Mat*> mats;
  for (const auto& [level, f] : d.dev_basis)
    if (level == slot) mats.push_back(&f.level_maps[level]);
  return mats;
}

}  // namespace

std::vector<RigidMorphism> dev_slot_basis(const HomDescriptor& d, int level) {
  if (level < 0) throw std::invalid_argument("dev_slot_basis: negative level");
  std::vector<RigidMorphism> basis;
  if (level <= d.common_stab) {
    for (const auto& [k, f] : d.dev_basis)
      if (k == level) basis.push_back(f);
    return basis;
  }
  for (const auto& [k, f] : d.dev_basis) {
    if (k != d.common_stab) continue;
    RigidMorphism shifted;
    shifted.source = f.source;
    shifted.target = f.target;
    shifted.stab = level + 1;
    for (int j = 0; j <= level; ++j)
      shifted.level_maps.push_back(
          j == level ? f.level_maps[k]
                     : Mat(f.target.level_module(j).dim(), f.source.level_module(j).dim()));
    shifted.stable = f.stable;
    shifted.finf = f.finf;
    validate(shifted);
    basis.push_back(std::move(shifted));
  }
  return basis;
}

std::vector<Rational> truncated_coords(const HomDescriptor& d, const RigidMorphism& h,
                                       int kappa) {
  int s = d.common_stab;
  std::vector<Rational> coords;

  // Stable part: fit the pair (finf, stable) against the stable basis.
  int pair_rows = h.finf.rows() * h.finf.cols() + h.stable.rows() * h.stable.cols();
  Mat pair_basis(pair_rows, static_cast<int>(d.stable_basis.size()));
  auto fill_pair = [&](const RigidMorphism& f, auto&& put) {
    int r = 0;
    for (int i = 0; i < f.finf.rows(); ++i)
      for (int j = 0; j < f.finf.cols(); ++j) put(r++, f.finf(i, j));
    for (int i = 0; i < f.stable.rows(); ++i)
      for (int j = 0; j < f.stable.cols(); ++j) put(r++, f.stable(i, j));
  };
  for (size_t c = 0; c < d.stable_basis.size(); ++c)
    fill_pair(d.stable_basis[c],
              [&](int r, const Rational& x) { pair_basis(r, static_cast<int>(c)) = x; });
  Mat pair_rhs(pair_rows, 1);
  fill_pair(h, [&](int r, const Rational& x) { pair_rhs(r, 0) = x; });
  auto stable_coords = solve(pair_basis, pair_rhs);
  if (!stable_coords) throw std::invalid_argument("truncated_coords: stable part outside span");
  for (int r = 0; r < stable_coords->rows(); ++r) coords.push_back((*stable_coords)(r, 0));

  // Deviations: the remainder after removing the stable tail per level.
  int top = std::max(kappa, h.stab - 1);
  for (int k = 0; k <= top; ++k) {
    Mat residue = k < s ? h.level_map(k) : h.level_map(k) - h.stable;
    if (k > kappa) {
      if (!residue.is_zero())
        throw std::invalid_argument("truncated_coords: deviation beyond kappa");
      continue;
    }
    auto slot = dev_slot_matrices(d, std::min(k, s));
    Mat slot_mat(residue.rows() * residue.cols(), static_cast<int>(slot.size()));
    for (size_t c = 0; c < slot.size(); ++c)
      for (int i = 0; i < residue.rows(); ++i)
        for (int j = 0; j < residue.cols(); ++j)
          slot_mat(i * residue.cols() + j, static_cast<int>(c)) = (*slot[c])(i, j);
    Mat rhs(residue.rows() * residue.cols(), 1);
    for (int i = 0; i < residue.rows(); ++i)
      for (int j = 0; j < residue.cols(); ++j) rhs(i * residue.cols() + j, 0) = residue(i, j);
    auto x = solve(slot_mat, rhs);
    if (!x) throw std::invalid_argument("truncated_coords: deviation outside slot span");
    for (int r = 0; r < x->rows(); ++r) coords.push_back((*x)(r, 0));
  }
  return coords;
}

long postcomposition_kernel_dim(const RigidObject& p, const RigidMorphism& f, int kappa) {
  HomDescriptor hm = hom_space(p, f.source);
  HomDescriptor hn = hom_space(p, f.target);
  if (kappa < std::max({hm.common_stab, hn.common_stab, f.stab}))
    throw std::invalid_argument("postcomposition_kernel_dim: kappa too small");

  // Truncated basis of Hom(P, M): stable generators plus every deviation
  // slot up to kappa.
  std::vector<RigidMorphism> basis;
  for (const auto& b : hm.stable_basis) basis.push_back(b);
  for (int k = 0; k <= kappa; ++k)
    for (auto& b : dev_slot_basis(hm, k)) basis.push_back(std::move(b));

  if (basis.empty()) return 0;
  Mat coords_mat;
  for (size_t c = 0; c < basis.size(); ++c) {
    std::vector<Rational> coords = truncated_coords(hn, compose(f, basis[c]), kappa);
    if (c == 0) coords_mat = Mat(static_cast<int>(coords.size()), static_cast<int>(basis.size()));
    for (size_t r = 0; r < coords.size(); ++r)
      coords_mat(static_cast<int>(r), static_cast<int>(c)) = coords[r];
  }
  return static_cast<long>(basis.size()) - rank(coords_mat);
}

namespace {

Mat vectorize(const Mat& x) {
  Mat v(x.rows() * x.cols(), 1);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v(i * x.cols() + j, 0) = x(i, j);
  return v;
}

// Coordinates of each given map in the span of the basis maps.
Mat coords_in_basis(const std::vector<Mat>& basis, const std::vector<Mat>& maps) {
  int dim = static_cast<int>(basis.size());
  if (maps.empty()) return Mat(dim, 0);
  Mat basis_mat(basis.empty() ? 0 : basis[0].rows() * basis[0].cols(), dim);
  for (int c = 0; c < dim; ++c) {
    Mat v = vectorize(basis[c]);
    for (int r = 0; r < v.rows(); ++r) basis_mat(r, c) = v(r, 0);
  }
  Mat rhs(basis_mat.rows(), static_cast<int>(maps.size()));
  for (size_t c = 0; c < maps.size(); ++c) {
    Mat v = vectorize(maps[c]);
    for (int r = 0; r < v.rows(); ++r) rhs(r, static_cast<int>(c)) = v(r, 0);
  }
  auto x = solve(basis_mat, rhs);
  if (!x) throw std::logic_error("coords_in_basis: map outside span");
  return *x;
}

struct ExtIngredients {
  int s = 0;
  std::vector<Mat> h_basis;   // Hom(M_inf, T_N)
  Mat hc_coords;              // coordinates of v * c_M for v in Hom(T_M, T_N)
  Mat v_coords;               // coordinates of c_N * g for g in Hom(M_inf, N_inf)
};

ExtIngredients ext_ingredients(const RigidObject& m0, const RigidObject& n0) {
  if (m0.p != n0.p) throw std::invalid_argument("ext1: prime mismatch");
  RigidObject m = canonicalize(m0), n = canonicalize(n0);
  ExtIngredients ing;
  ing.s = std::max(m.stab, n.stab);
  RigidObject mr = raise_stab(m, ing.s), nr = raise_stab(n, ing.s);
  ing.h_basis = equivariant_hom_basis(mr.minf, nr.tmpl);

  std::vector<Mat> hc, vv;
  for (const Mat& v : equivariant_hom_basis(mr.tmpl, nr.tmpl)) hc.push_back(v * mr.cmap);
  for (const Mat& g : equivariant_hom_basis(mr.minf, nr.minf)) vv.push_back(nr.cmap * g);
  ing.hc_coords = coords_in_basis(ing.h_basis, hc);
  ing.v_coords = coords_in_basis(ing.h_basis, vv);
  return ing;
}

}  // namespace

ExtDescriptor ext1(const RigidObject& m0, const RigidObject& n0) {
  ExtIngredients ing = ext_ingredients(m0, n0);
  int hdim = static_cast<int>(ing.h_basis.size());

  ExtDescriptor ext;
  if (hdim == 0) {
    ext.w = zero_module(m0.p, ing.s);
    ext.v = Subspace::zero(0);
    return ext;
  }
  Mat hc_basis = column_space(ing.hc_coords).basis();
  int wdim = hdim - hc_basis.cols();
  Mat quotient_proj;
  if (hc_basis.cols() == 0) {
    quotient_proj = Mat::identity(hdim);
  } else {
    Mat extra = extend_to_basis(hc_basis);
    quotient_proj = inverse(Mat::hcat(hc_basis, extra)).rows_range(hc_basis.cols(), wdim);
  }
  // Conjugation fixes equivariant maps, so the quotient carries the trivial
  // action.
  ext.w = trivial_module(m0.p, ing.s, wdim);
  ext.v = Subspace::from_spanning_columns(quotient_proj * ing.v_coords);
  return ext;
}

long ext1_truncation_oracle(const RigidObject& m0, const RigidObject& n0, int K) {
  ExtIngredients ing = ext_ingredients(m0, n0);
  if (K < ing.s + 1) throw std::invalid_argument("ext1_truncation_oracle: K too small");
  int hdim = static_cast<int>(ing.h_basis.size());
  int slots = K - ing.s + 1;
  if (hdim == 0) return 0;

  int hc_count = ing.hc_coords.cols(), g_count = ing.v_coords.cols();
  Mat span(slots * hdim, slots * hc_count + g_count);
  for (int slot = 0; slot < slots; ++slot)
    for (int c = 0; c < hc_count; ++c)
      for (int r = 0; r < hdim; ++r)
        span(slot * hdim + r, slot * hc_count + c) = ing.hc_coords(r, c);
  for (int c = 0; c < g_count; ++c)
    for (int slot = 0; slot < slots; ++slot)
      for (int r = 0; r < hdim; ++r)
        span(slot * hdim + r, slots * hc_count + c) = -ing.v_coords(r, c);
  return static_cast<long>(slots) * hdim - rank(span);
}

AffineFit ext1_oracle_fit(const RigidObject& m, const RigidObject& n, int k_lo, int k_hi) {
  if (k_hi <= k_lo) throw std::invalid_argument("ext1_oracle_fit: empty range");
  std::vector<long> values;
  for (int K = k_lo; K <= k_hi; ++K) values.push_back(ext1_truncation_oracle(m, n, K));
  AffineFit fit;
  fit.slope = values[1] - values[0];
  fit.exact = true;
  for (size_t i = 1; i + 1 < values.size(); ++i)
    if (values[i + 1] - values[i] != fit.slope) fit.exact = false;
  int s = std::max(canonicalize(m).stab, canonicalize(n).stab);
  long t0 = k_lo - s + 1;  // number of levels at the first sample
  fit.intercept = values[0] - fit.slope * t0;
  return fit;
}

GradedRigid graded_object(RigidObject m, int degree) {
  GradedRigid x;
  x.p = m.p;
  if (!m.is_zero()) x.entries.emplace(degree, canonicalize(std::move(m)));
  return x;
}

GradedRigid direct_sum(const GradedRigid& x, const GradedRigid& y) {
  if (x.p != y.p) throw std::invalid_argument("graded direct_sum: prime mismatch");
  GradedRigid r = x;
  for (const auto& [d, obj] : y.entries) {
    auto it = r.entries.find(d);
    if (it == r.entries.end())
      r.entries.emplace(d, obj);
    else
      it->second = direct_sum(it->second, obj);
  }
  return r;
}

GradedRigid tensor(const GradedRigid& x, const GradedRigid& y) {
  if (x.p != y.p) throw std::invalid_argument("graded tensor: prime mismatch");
  GradedRigid r;
  r.p = x.p;
  for (const auto& [dx, mx] : x.entries)
    for (const auto& [dy, my] : y.entries) {
      RigidObject prod = tensor(mx, my);
      if (prod.is_zero()) continue;
      auto it = r.entries.find(dx + dy);
      if (it == r.entries.end())
        r.entries.emplace(dx + dy, std::move(prod));
      else
        it->second = direct_sum(it->second, prod);
    }
  return r;
}

GradedRigid shift(const GradedRigid& x, int d) {
  GradedRigid r;
  r.p = x.p;
  for (const auto& [deg, obj] : x.entries) r.entries.emplace(deg + d, obj);
  return r;
}

GradedRigid restrict_object(const GradedRigid& x, int n) {
  GradedRigid r;
  r.p = x.p;
  for (const auto& [deg, obj] : x.entries) {
    RigidObject res = restrict_object(obj, n);
    if (!res.is_zero()) r.entries.emplace(deg, std::move(res));
  }
  return r;
}

bool AdamsMaps::hom_zero() const {
  for (const auto& [deg, h] : hom)
    if (!h.total_zero()) return false;
  return true;
}

bool AdamsMaps::ext_zero() const {
  for (const auto& [deg, e] : ext)
    if (!e.zero()) return false;
  return true;
}

AdamsMaps adams_maps(const GradedRigid& x, const GradedRigid& y, int d) {
  if (x.p != y.p) throw std::invalid_argument("adams_maps: prime mismatch");
  AdamsMaps result;
  for (const auto& [i, xi] : x.entries) {
    if (auto it = y.entries.find(i + d); it != y.entries.end())
      result.hom.emplace_back(i, hom_space(xi, it->second));
    // Suspension shift on the source: Ext against the degree i + d + 1 piece.
    if (auto it = y.entries.find(i + d + 1); it != y.entries.end())
      result.ext.emplace_back(i, ext1(xi, it->second));
  }
  return result;
}

}  // namespace padic
