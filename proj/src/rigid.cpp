#include "padic/rigid.hpp"

#include <stdexcept>

namespace padic {

namespace {

void require_same_prime(const RigidObject& m, const RigidObject& n) {
  if (m.p != n.p) throw std::invalid_argument("rigid: prime mismatch");
}

}  // namespace

CyclicModule RigidObject::level_module(int k) const {
  if (k < 0) throw std::invalid_argument("level_module: negative level");
  if (k < stab) return levels[k];
  return inflate(tmpl, k);
}

bool RigidObject::is_zero() const {
  if (tmpl.dim() != 0 || minf.dim() != 0) return false;
  for (const auto& m : levels)
    if (m.dim() != 0) return false;
  return true;
}

void validate(const RigidObject& m) {
  if (m.p < 2) throw std::invalid_argument("RigidObject: bad prime");
  if (m.stab < 0 || m.levels.size() != static_cast<size_t>(m.stab))
    throw std::invalid_argument("RigidObject: level count != stab");
  for (int k = 0; k < m.stab; ++k) {
    if (m.levels[k].p != m.p || m.levels[k].level != k)
      throw std::invalid_argument("RigidObject: level module at wrong level");
    validate(m.levels[k]);
  }
  if (m.tmpl.p != m.p || m.tmpl.level != m.stab || m.minf.p != m.p ||
      m.minf.level != m.stab)
    throw std::invalid_argument("RigidObject: template/minf level != stab");
  validate(m.tmpl);
  validate(m.minf);
  if (m.cmap.rows() != m.tmpl.dim() || m.cmap.cols() != m.minf.dim())
    throw std::invalid_argument("RigidObject: structure map shape");
  if (m.tmpl.action * m.cmap != m.cmap * m.minf.action)
    throw std::invalid_argument("RigidObject: structure map not equivariant");
}

RigidObject canonicalize(RigidObject m) {
  while (m.stab > 0) {
    long long order = ipow(m.p, m.stab - 1);
    if (!m.tmpl.action.pow(order).is_identity()) break;
    if (!m.minf.action.pow(order).is_identity()) break;
    const CyclicModule& last = m.levels[m.stab - 1];
    if (last.dim() != m.tmpl.dim() || last.action != m.tmpl.action) break;
    m.levels.pop_back();
    --m.stab;
    m.tmpl.level = m.stab;
    m.minf.level = m.stab;
  }
  return m;
}

RigidObject raise_stab(const RigidObject& m, int s) {
  if (s < m.stab) throw std::invalid_argument("raise_stab: below current stab");
  RigidObject r = m;
  for (int k = m.stab; k < s; ++k) r.levels.push_back(inflate(m.tmpl, k));
  r.tmpl = inflate(m.tmpl, s);
  r.minf = inflate(m.minf, s);
  r.stab = s;
  return r;
}

RigidObject generator(GenKind kind, int n, long p) {
  if (n < 0) throw std::invalid_argument("generator: negative index");
  RigidObject m;
  m.p = p;
  switch (kind) {
    case GenKind::A: {
      m.stab = n;
      for (int k = 0; k < n; ++k) m.levels.push_back(zero_module(p, k));
      m.tmpl = regular_module(p, n);
      m.minf = regular_module(p, n);
      m.cmap = Mat::identity(m.tmpl.dim());
      break;
    }
    case GenKind::E: {
      m.stab = n + 1;
      for (int k = 0; k < n; ++k) m.levels.push_back(zero_module(p, k));
      m.levels.push_back(regular_module(p, n));
      m.tmpl = zero_module(p, n + 1);
      m.minf = zero_module(p, n + 1);
      m.cmap = Mat(0, 0);
      break;
    }
    case GenKind::L: {
      m.stab = n;
      for (int k = 0; k < n; ++k) m.levels.push_back(zero_module(p, k));
      m.tmpl = zero_module(p, n);
      m.minf = regular_module(p, n);
      m.cmap = Mat(0, m.minf.dim());
      break;
    }
  }
  validate(m);
  return m;
}

RigidObject zero_object(long p) {
  RigidObject m;
  m.p = p;
  m.stab = 0;
  m.tmpl = zero_module(p, 0);
  m.minf = zero_module(p, 0);
  m.cmap = Mat(0, 0);
  return m;
}

RigidObject direct_sum(const RigidObject& a, const RigidObject& b) {
  require_same_prime(a, b);
  int s = std::max(a.stab, b.stab);
  RigidObject ar = raise_stab(a, s), br = raise_stab(b, s);
  RigidObject r;
  r.p = a.p;
  r.stab = s;
  for (int k = 0; k < s; ++k) r.levels.push_back(direct_sum(ar.levels[k], br.levels[k]));
  r.tmpl = direct_sum(ar.tmpl, br.tmpl);
  r.minf = direct_sum(ar.minf, br.minf);
  r.cmap = Mat::block_diag(ar.cmap, br.cmap);
  validate(r);
  return canonicalize(std::move(r));
}

RigidObject tensor(const RigidObject& a, const RigidObject& b) {
  require_same_prime(a, b);
  int s = std::max(a.stab, b.stab);
  RigidObject ar = raise_stab(a, s), br = raise_stab(b, s);
  RigidObject r;
  r.p = a.p;
  r.stab = s;
  for (int k = 0; k < s; ++k) r.levels.push_back(tensor(ar.levels[k], br.levels[k]));
  r.tmpl = tensor(ar.tmpl, br.tmpl);
  r.minf = tensor(ar.minf, br.minf);
  r.cmap = ar.cmap.kron(br.cmap);
  validate(r);
  return canonicalize(std::move(r));
}

namespace {

CyclicModule power_action(const CyclicModule& m, long long e, int new_level) {
  return CyclicModule{m.p, new_level, m.action.pow(e)};
}

}  // namespace

RigidObject restrict_object(const RigidObject& m, int n) {
  if (n < 0) throw std::invalid_argument("restrict_object: negative index");
  long long e = ipow(m.p, n);
  int new_stab = std::max(m.stab - n, 0);
  RigidObject r;
  r.p = m.p;
  r.stab = new_stab;
  for (int j = 0; j < new_stab; ++j)
    r.levels.push_back(power_action(m.level_module(n + j), e, j));
  r.tmpl = power_action(m.tmpl, e, new_stab);
  r.minf = power_action(m.minf, e, new_stab);
  r.cmap = m.cmap;
  validate(r);
  return canonicalize(std::move(r));
}

void validate(const FiniteLevelObject& m) {
  if (m.p < 2 || m.n < 0 || m.levels.size() != static_cast<size_t>(m.n) + 1)
    throw std::invalid_argument("FiniteLevelObject: shape");
  for (int k = 0; k <= m.n; ++k) {
    if (m.levels[k].p != m.p || m.levels[k].level != k)
      throw std::invalid_argument("FiniteLevelObject: level module at wrong level");
    validate(m.levels[k]);
  }
}

RigidObject inflate_finite(const FiniteLevelObject& m) {
  validate(m);
  RigidObject r;
  r.p = m.p;
  r.stab = m.n;
  r.levels.assign(m.levels.begin(), m.levels.end() - 1);
  r.tmpl = m.levels[m.n];
  r.minf = m.levels[m.n];
  r.cmap = Mat::identity(r.tmpl.dim());
  validate(r);
  return canonicalize(std::move(r));
}

bool RigidMorphism::is_zero() const {
  if (!stable.is_zero() || !finf.is_zero()) return false;
  for (const auto& f : level_maps)
    if (!f.is_zero()) return false;
  return true;
}

void validate(const RigidMorphism& f) {
  validate(f.source);
  validate(f.target);
  if (f.source.p != f.target.p) throw std::invalid_argument("RigidMorphism: prime mismatch");
  if (f.stab < std::max(f.source.stab, f.target.stab))
    throw std::invalid_argument("RigidMorphism: stab below object stabs");
  if (f.level_maps.size() != static_cast<size_t>(f.stab))
    throw std::invalid_argument("RigidMorphism: level map count");
  for (int k = 0; k < f.stab; ++k) {
    CyclicModule ms = f.source.level_module(k), mt = f.target.level_module(k);
    const Mat& fk = f.level_maps[k];
    if (fk.rows() != mt.dim() || fk.cols() != ms.dim())
      throw std::invalid_argument("RigidMorphism: level map shape");
    if (mt.action * fk != fk * ms.action)
      throw std::invalid_argument("RigidMorphism: level map not equivariant");
  }
  if (f.stable.rows() != f.target.tmpl.dim() || f.stable.cols() != f.source.tmpl.dim())
    throw std::invalid_argument("RigidMorphism: stable map shape");
  if (f.target.tmpl.action * f.stable != f.stable * f.source.tmpl.action)
    throw std::invalid_argument("RigidMorphism: stable map not equivariant");
  if (f.finf.rows() != f.target.minf.dim() || f.finf.cols() != f.source.minf.dim())
    throw std::invalid_argument("RigidMorphism: infinity map shape");
  if (f.target.minf.action * f.finf != f.finf * f.source.minf.action)
    throw std::invalid_argument("RigidMorphism: infinity map not equivariant");
  if (f.target.cmap * f.finf != f.stable * f.source.cmap)
    throw std::invalid_argument("RigidMorphism: structure squares do not commute");
}

RigidMorphism identity_morphism(const RigidObject& m) {
  RigidMorphism f;
  f.source = m;
  f.target = m;
  f.stab = m.stab;
  for (int k = 0; k < m.stab; ++k) f.level_maps.push_back(Mat::identity(m.levels[k].dim()));
  f.stable = Mat::identity(m.tmpl.dim());
  f.finf = Mat::identity(m.minf.dim());
  return f;
}

RigidMorphism zero_morphism(const RigidObject& source, const RigidObject& target) {
  require_same_prime(source, target);
  RigidMorphism f;
  f.source = source;
  f.target = target;
  f.stab = std::max(source.stab, target.stab);
  for (int k = 0; k < f.stab; ++k)
    f.level_maps.push_back(Mat(target.level_module(k).dim(), source.level_module(k).dim()));
  f.stable = Mat(target.tmpl.dim(), source.tmpl.dim());
  f.finf = Mat(target.minf.dim(), source.minf.dim());
  return f;
}

RigidMorphism add(const RigidMorphism& f, const RigidMorphism& g) {
  if (f.source != g.source || f.target != g.target)
    throw std::invalid_argument("morphism add: object mismatch");
  RigidMorphism r;
  r.source = f.source;
  r.target = f.target;
  r.stab = std::max(f.stab, g.stab);
  for (int k = 0; k < r.stab; ++k) r.level_maps.push_back(f.level_map(k) + g.level_map(k));
  r.stable = f.stable + g.stable;
  r.finf = f.finf + g.finf;
  return r;
}

RigidMorphism scale(const RigidMorphism& f, const Rational& s) {
  RigidMorphism r = f;
  for (auto& m : r.level_maps) m = m * s;
  r.stable = r.stable * s;
  r.finf = r.finf * s;
  return r;
}

RigidMorphism compose(const RigidMorphism& f, const RigidMorphism& g) {
  if (g.target != f.source)
    throw std::invalid_argument("compose: target of g is not source of f");
  RigidMorphism r;
  r.source = g.source;
  r.target = f.target;
  r.stab = std::max(f.stab, g.stab);
  for (int k = 0; k < r.stab; ++k) r.level_maps.push_back(f.level_map(k) * g.level_map(k));
  r.stable = f.stable * g.stable;
  r.finf = f.finf * g.finf;
  validate(r);
  return r;
}

RigidMorphism invert(const RigidMorphism& f) {
  RigidMorphism r;
  r.source = f.target;
  r.target = f.source;
  r.stab = f.stab;
  for (const auto& m : f.level_maps) r.level_maps.push_back(inverse(m));
  r.stable = inverse(f.stable);
  r.finf = inverse(f.finf);
  validate(r);
  return r;
}

SubobjectResult kernel(const RigidMorphism& f) {
  int m = f.stab;
  RigidObject k;
  k.p = f.source.p;
  k.stab = m;
  std::vector<Mat> inclusions;
  for (int j = 0; j < m; ++j) {
    Mat basis = kernel_basis_matrix(f.level_map(j));
    SubmoduleData sub = submodule_from_basis(f.source.level_module(j), basis);
    k.levels.push_back(sub.module);
    inclusions.push_back(sub.inclusion);
  }
  Mat basis_t = kernel_basis_matrix(f.stable);
  SubmoduleData sub_t = submodule_from_basis(inflate(f.source.tmpl, m), basis_t);
  Mat basis_inf = kernel_basis_matrix(f.finf);
  SubmoduleData sub_inf = submodule_from_basis(inflate(f.source.minf, m), basis_inf);
  k.tmpl = sub_t.module;
  k.minf = sub_inf.module;
  // The structure map restricts: cmap(ker finf) lands in ker stable.
  auto restricted = solve(basis_t, f.source.cmap * basis_inf);
  if (!restricted) throw std::logic_error("kernel: structure map does not restrict");
  k.cmap = *restricted;
  validate(k);

  RigidMorphism incl;
  incl.source = canonicalize(k);
  incl.target = f.source;
  incl.stab = m;
  incl.level_maps = std::move(inclusions);
  incl.stable = basis_t;
  incl.finf = basis_inf;
  validate(incl);
  return SubobjectResult{incl.source, std::move(incl)};
}

QuotientResult cokernel(const RigidMorphism& f) {
  int m = f.stab;
  RigidObject c;
  c.p = f.target.p;
  c.stab = m;
  std::vector<Mat> projections;
  for (int j = 0; j < m; ++j) {
    Mat im = column_space(f.level_map(j)).basis();
    QuotientData q = quotient_by_subspace(f.target.level_module(j), im);
    c.levels.push_back(q.module);
    projections.push_back(q.projection);
  }
  QuotientData q_t =
      quotient_by_subspace(inflate(f.target.tmpl, m), column_space(f.stable).basis());
  QuotientData q_inf =
      quotient_by_subspace(inflate(f.target.minf, m), column_space(f.finf).basis());
  c.tmpl = q_t.module;
  c.minf = q_inf.module;
  // Induced structure map; independent of the chosen section because the
  // section ambiguity lands in the image of the stable map.
  c.cmap = q_t.projection * f.target.cmap * q_inf.section;
  validate(c);

  RigidMorphism proj;
  proj.source = f.target;
  proj.target = canonicalize(c);
  proj.stab = m;
  proj.level_maps = std::move(projections);
  proj.stable = q_t.projection;
  proj.finf = q_inf.projection;
  validate(proj);
  return QuotientResult{proj.target, std::move(proj)};
}

SubobjectResult image(const RigidMorphism& f) {
  int m = f.stab;
  RigidObject im;
  im.p = f.target.p;
  im.stab = m;
  std::vector<Mat> inclusions;
  for (int j = 0; j < m; ++j) {
    Mat basis = column_space(f.level_map(j)).basis();
    SubmoduleData sub = submodule_from_basis(f.target.level_module(j), basis);
    im.levels.push_back(sub.module);
    inclusions.push_back(sub.inclusion);
  }
  Mat basis_t = column_space(f.stable).basis();
  SubmoduleData sub_t = submodule_from_basis(inflate(f.target.tmpl, m), basis_t);
  Mat basis_inf = column_space(f.finf).basis();
  SubmoduleData sub_inf = submodule_from_basis(inflate(f.target.minf, m), basis_inf);
  im.tmpl = sub_t.module;
  im.minf = sub_inf.module;
  auto restricted = solve(basis_t, f.target.cmap * basis_inf);
  if (!restricted) throw std::logic_error("image: structure map does not restrict");
  im.cmap = *restricted;
  validate(im);

  RigidMorphism incl;
  incl.source = canonicalize(im);
  incl.target = f.target;
  incl.stab = m;
  incl.level_maps = std::move(inclusions);
  incl.stable = basis_t;
  incl.finf = basis_inf;
  validate(incl);
  return SubobjectResult{incl.source, std::move(incl)};
}

namespace {

// Ranks of the structure map on each isotypic component of minf.
std::vector<int> structure_ranks(const RigidObject& m) {
  std::vector<int> ranks;
  Mat prev(m.minf.dim(), m.minf.dim());
  for (int j = 0; j <= m.stab; ++j) {
    Mat avg = average(m.minf, j);
    Mat iso_proj = j == 0 ? avg : avg - prev;
    ranks.push_back(rank(m.cmap * iso_proj));
    prev = std::move(avg);
  }
  return ranks;
}

}  // namespace

std::optional<RigidMorphism> isomorphism_witness(const RigidObject& m0, const RigidObject& n0) {
  if (m0.p != n0.p) return std::nullopt;
  RigidObject mc = canonicalize(m0), nc = canonicalize(n0);
  int s = std::max(mc.stab, nc.stab);
  RigidObject m = raise_stab(mc, s), n = raise_stab(nc, s);

  for (int k = 0; k < s; ++k)
    if (character(m.levels[k]) != character(n.levels[k])) return std::nullopt;
  if (character(m.tmpl) != character(n.tmpl)) return std::nullopt;
  if (character(m.minf) != character(n.minf)) return std::nullopt;
  if (structure_ranks(m) != structure_ranks(n)) return std::nullopt;

  RigidMorphism w;
  w.source = m0;
  w.target = n0;
  w.stab = s;
  for (int k = 0; k < s; ++k) {
    auto iso = equivariant_iso(m.levels[k], n.levels[k]);
    if (!iso) throw std::logic_error("isomorphism_witness: level iso missing");
    w.level_maps.push_back(std::move(*iso));
  }

  // Split both structure maps into kernel + complement and match the pieces.
  Mat ker_m = kernel_basis_matrix(m.cmap), ker_n = kernel_basis_matrix(n.cmap);
  Mat comp_m = equivariant_complement(m.minf, ker_m);
  Mat comp_n = equivariant_complement(n.minf, ker_n);
  CyclicModule ker_m_mod = submodule_from_basis(m.minf, ker_m).module;
  CyclicModule ker_n_mod = submodule_from_basis(n.minf, ker_n).module;
  CyclicModule comp_m_mod = submodule_from_basis(m.minf, comp_m).module;
  CyclicModule comp_n_mod = submodule_from_basis(n.minf, comp_n).module;

  auto delta = equivariant_iso(ker_m_mod, ker_n_mod);
  auto gamma = equivariant_iso(comp_m_mod, comp_n_mod);
  if (!delta || !gamma) throw std::logic_error("isomorphism_witness: infinity iso missing");
  Mat u = Mat::hcat(ker_n * *delta, comp_n * *gamma) * inverse(Mat::hcat(ker_m, comp_m));

  // v agrees with c_n u on the image of c_m and matches complements freely.
  Mat img_m = m.cmap * comp_m;  // independent columns
  Mat img_n = n.cmap * comp_n;
  Mat img_n_targets = img_n * *gamma;
  Mat d_m = equivariant_complement(m.tmpl, img_m);
  Mat d_n = equivariant_complement(n.tmpl, img_n);
  CyclicModule d_m_mod = submodule_from_basis(m.tmpl, d_m).module;
  CyclicModule d_n_mod = submodule_from_basis(n.tmpl, d_n).module;
  auto eps = equivariant_iso(d_m_mod, d_n_mod);
  if (!eps) throw std::logic_error("isomorphism_witness: template iso missing");
  Mat v = Mat::hcat(img_n_targets, d_n * *eps) * inverse(Mat::hcat(img_m, d_m));

  w.stable = v;
  w.finf = u;
  validate(w);
  return w;
}

bool is_isomorphic(const RigidObject& m, const RigidObject& n) {
  return isomorphism_witness(m, n).has_value();
}

}  // namespace padic
