#pragma once

#include "padic/burnside.hpp"
#include "padic/homext.hpp"
#include "padic/mackey.hpp"
#include "padic/rigid.hpp"

#include "json.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

// Burnside schema: {"p": int, "prefix": [string rationals], "tail": string}.
Json evseq_to_json(const EvSeq& a);
EvSeq evseq_from_json(const Json& j);

// Descriptor dimension schema: {"prefix": [ints], "tail": int}.
Json dims_to_json(const EvSeq& a);

Json mat_to_json(const Mat& m);  // rows of string rationals
Mat mat_from_json(const Json& j);

Json cyclic_to_json(const CyclicModule& m);
CyclicModule cyclic_from_json(const Json& j);

Json rigid_to_json(const RigidObject& m);
RigidObject rigid_from_json(const Json& j);

Json morphism_to_json(const RigidMorphism& f);
RigidMorphism morphism_from_json(const Json& j);

Json finite_burnside_to_json(const FiniteBurnsideElt& x);
FiniteBurnsideElt finite_burnside_from_json(const Json& j);

// {"stable": n, "dev": dims, "free": dims}
Json hom_descriptor_to_json(const HomDescriptor& h);
// {"W_dim": n, "V_dim": n, "zero": bool}
Json ext_descriptor_to_json(const ExtDescriptor& e);

Json mackey_to_json(const MackeyValueDescriptor& d);
Json tomdieck_to_json(const TomDieckTable& t);
Json adams_to_json(const AdamsMaps& a);

}  // namespace padic
