#include "padic/json_io.hpp"

namespace padic {

Json evseq_to_json(const EvSeq& a) {
  Json prefix = Json::array();
  for (const auto& x : a.prefix()) prefix.push_back(rational_to_string(x));
  return Json{{"p", a.p()}, {"prefix", prefix}, {"tail", rational_to_string(a.tail())}};
}

EvSeq evseq_from_json(const Json& j) {
  std::vector<Rational> prefix;
  for (const auto& x : j.at("prefix")) prefix.push_back(rational_from_string(x.get<std::string>()));
  return EvSeq(j.at("p").get<long>(), std::move(prefix),
               rational_from_string(j.at("tail").get<std::string>()));
}

Json dims_to_json(const EvSeq& a) {
  Json prefix = Json::array();
  for (const auto& x : a.prefix()) prefix.push_back(static_cast<long>(numerator(x)));
  return Json{{"prefix", prefix}, {"tail", static_cast<long>(numerator(a.tail()))}};
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Mat mat_from_json(const Json& j) {
  Mat m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const Json& rows = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c)
      m(i, c) = rational_from_string(rows.at(i).at(c).get<std::string>());
  return m;
}

Json cyclic_to_json(const CyclicModule& m) {
  return Json{{"p", m.p}, {"level", m.level}, {"action", mat_to_json(m.action)}};
}

CyclicModule cyclic_from_json(const Json& j) {
  CyclicModule m{j.at("p").get<long>(), j.at("level").get<int>(),
                 mat_from_json(j.at("action"))};
  validate(m);
  return m;
}

Json rigid_to_json(const RigidObject& m) {
  Json levels = Json::array();
  for (const auto& l : m.levels) levels.push_back(cyclic_to_json(l));
  return Json{{"p", m.p},
              {"stab", m.stab},
              {"levels", levels},
              {"template", cyclic_to_json(m.tmpl)},
              {"minf", cyclic_to_json(m.minf)},
              {"c", mat_to_json(m.cmap)}};
}

RigidObject rigid_from_json(const Json& j) {
  RigidObject m;
  m.p = j.at("p").get<long>();
  m.stab = j.at("stab").get<int>();
  for (const auto& l : j.at("levels")) m.levels.push_back(cyclic_from_json(l));
  m.tmpl = cyclic_from_json(j.at("template"));
  m.minf = cyclic_from_json(j.at("minf"));
  m.cmap = mat_from_json(j.at("c"));
  validate(m);
  return m;
}

Json morphism_to_json(const RigidMorphism& f) {
  Json levels = Json::array();
  for (const auto& l : f.level_maps) levels.push_back(mat_to_json(l));
  return Json{{"source", rigid_to_json(f.source)}, {"target", rigid_to_json(f.target)},
              {"stab", f.stab},                    {"level_maps", levels},
              {"stable", mat_to_json(f.stable)},   {"finf", mat_to_json(f.finf)}};
}

RigidMorphism morphism_from_json(const Json& j) {
  RigidMorphism f;
  f.source = rigid_from_json(j.at("source"));
  f.target = rigid_from_json(j.at("target"));
  f.stab = j.at("stab").get<int>();
  for (const auto& l : j.at("level_maps")) f.level_maps.push_back(mat_from_json(l));
  f.stable = mat_from_json(j.at("stable"));
  f.finf = mat_from_json(j.at("finf"));
  validate(f);
  return f;
}

Json finite_burnside_to_json(const FiniteBurnsideElt& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs) coeffs.push_back(rational_to_string(c));
  return Json{{"p", x.p}, {"n", x.n}, {"coeffs", coeffs}};
}

FiniteBurnsideElt finite_burnside_from_json(const Json& j) {
  FiniteBurnsideElt x;
  x.p = j.at("p").get<long>();
  x.n = j.at("n").get<int>();
  for (const auto& c : j.at("coeffs")) x.coeffs.push_back(rational_from_string(c.get<std::string>()));
  validate(x);
  return x;
}

Json hom_descriptor_to_json(const HomDescriptor& h) {
  return Json{{"stable", h.stable_dim},
              {"dev", dims_to_json(h.dev_dims)},
              {"free", dims_to_json(h.free_dims)}};
}

Json ext_descriptor_to_json(const ExtDescriptor& e) {
  return Json{{"W_dim", e.w_dim()}, {"V_dim", e.v_dim()}, {"zero", e.zero()}};
}

Json mackey_to_json(const MackeyValueDescriptor& d) {
  return Json{{"k", d.k},
              {"inf_dim", d.inf_dim},
              {"components", dims_to_json(d.component_dims)}};
}

Json tomdieck_to_json(const TomDieckTable& t) {
  return Json{{"p", t.p}, {"n", t.n}, {"m", t.m}, {"jmax", t.jmax}, {"dims", t.per_j_dims}};
}

Json adams_to_json(const AdamsMaps& a) {
  Json hom = Json::array(), ext = Json::array();
  for (const auto& [deg, h] : a.hom)
    hom.push_back(Json{{"degree", deg}, {"hom", hom_descriptor_to_json(h)}});
  for (const auto& [deg, e] : a.ext)
    ext.push_back(Json{{"degree", deg}, {"ext", ext_descriptor_to_json(e)}});
  return Json{{"hom", hom}, {"ext", ext}};
}

}  // namespace padic
