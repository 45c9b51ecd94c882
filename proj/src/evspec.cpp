#include "padic/evspec.hpp"

#include <stdexcept>

namespace padic {

namespace {

Mat default_at(const RigidObject& home, const Mat& base, int k) {
  if (k >= home.stab) return home.cmap * base;
  return Mat(home.levels[k].dim(), 1);
}

long long reduce_exponent(long long e, long long order) {
  long long r = e % order;
  return r < 0 ? r + order : r;
}

}  // namespace

EvSpecElement evspec_make(RigidObject home, int start, Mat base,
                          std::map<int, Mat> overrides) {
  if (start < 0) throw std::invalid_argument("evspec: negative start");
  if (base.rows() != home.minf.dim() || base.cols() != 1)
    throw std::invalid_argument("evspec: base shape");
  EvSpecElement x{std::move(home), start, std::move(base), {}};
  for (auto& [k, v] : overrides) {
    if (k < start) throw std::invalid_argument("evspec: override below start");
    if (v.rows() != x.home.level_module(k).dim() || v.cols() != 1)
      throw std::invalid_argument("evspec: override shape");
    if (v != default_at(x.home, x.base, k)) x.overrides.emplace(k, std::move(v));
  }
  return x;
}

Mat evspec_value_at(const EvSpecElement& x, int k) {
  if (k < x.start) throw std::invalid_argument("evspec_value_at: level below start");
  auto it = x.overrides.find(k);
  return it != x.overrides.end() ? it->second : default_at(x.home, x.base, k);
}

EvSpecElement evspec_add(const EvSpecElement& x, const EvSpecElement& y) {
  if (x.home != y.home || x.start != y.start)
    throw std::invalid_argument("evspec_add: home or start mismatch");
  std::map<int, Mat> overrides;
  for (const auto& [k, v] : x.overrides) overrides[k] = v + evspec_value_at(y, k);
  for (const auto& [k, v] : y.overrides)
    if (!overrides.count(k)) overrides[k] = evspec_value_at(x, k) + v;
  return evspec_make(x.home, x.start, x.base + y.base, std::move(overrides));
}

EvSpecElement evspec_act(const EvSpecElement& x, long long exponent) {
  const RigidObject& h = x.home;
  Mat base = h.minf.action.pow(reduce_exponent(exponent, ipow(h.p, h.stab))) * x.base;
  std::map<int, Mat> overrides;
  for (const auto& [k, v] : x.overrides) {
    CyclicModule mk = h.level_module(k);
    overrides[k] = mk.action.pow(reduce_exponent(exponent, ipow(h.p, k))) * v;
  }
  return evspec_make(h, x.start, std::move(base), std::move(overrides));
}

bool evspec_eq(const EvSpecElement& x, const EvSpecElement& y) {
  return x.home == y.home && x.start == y.start && x.base == y.base &&
         x.overrides == y.overrides;
}

long FixedSplitSide::level_dim(int k) const {
  if (k < start) throw std::invalid_argument("level_dim: below start");
  size_t i = static_cast<size_t>(k - start);
  return i < level_dims.size() ? level_dims[i] : tail_dim;
}

namespace {

FixedSplitSide side_dims(const RigidObject& m, int start, int subgroup_level) {
  FixedSplitSide side;
  side.start = start;
  side.inf_dim = fixed_points(m.minf, std::min(subgroup_level, m.stab)).dim();
  int horizon = std::max(m.stab, subgroup_level);
  for (int k = start; k <= horizon; ++k)
    side.level_dims.push_back(
        fixed_points(m.level_module(k), std::min(subgroup_level, k)).dim());
  side.tail_dim =
      fixed_points(inflate(m.tmpl, horizon + 1), std::min(subgroup_level, horizon + 1))
          .dim();
  return side;
}

}  // namespace

FixedSplitResult evspec_fixed_split(const RigidObject& m, int n) {
  if (n < 0) throw std::invalid_argument("evspec_fixed_split: negative level");
  FixedSplitResult r{side_dims(m, n, n), side_dims(m, n + 1, n),
                     m.level_module(n).dim(), false};
  bool ok = r.lhs.inf_dim == r.rhs.inf_dim;
  ok = ok && r.lhs.level_dim(n) == r.direct_summand_dim;
  int horizon = std::max(m.stab, n) + 2;
  for (int k = n + 1; k <= horizon; ++k)
    ok = ok && r.lhs.level_dim(k) == r.rhs.level_dim(k);
  ok = ok && r.lhs.tail_dim == r.rhs.tail_dim;
  r.matches = ok;
  return r;
}

}  // namespace padic
