#pragma once

#include <json.hpp>

#include "canontl/hecke.hpp"
#include "canontl/laurent.hpp"
#include "canontl/parabolic.hpp"
#include "canontl/spin.hpp"
#include "canontl/symgroup.hpp"
#include "canontl/tldiagram.hpp"

namespace canontl {

// Laurent polynomials serialize as {"exp": coeff}; coefficients must fit in
// 64 bits (range_error otherwise)
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json permutation_to_json(const Permutation& w);  // one-line array
Permutation permutation_from_json(const nlohmann::json& j);

// {"m":4,"n":4,"pairs":[["b1","t1"],...]}, each edge once, by smaller endpoint
nlohmann::json diagram_to_json(const TLDiagram& d);
TLDiagram diagram_from_json(const nlohmann::json& j);

// {"n":4,"coords":{"+-+-":{"-1":-1}}}
nlohmann::json spin_to_json(const SpinVector& v);
SpinVector spin_from_json(const nlohmann::json& j);

// [{"w":[2,1,3],"coeff":{"-1":-1}},...] sorted by (length, lex)
nlohmann::json hecke_to_json(const HeckeElt& h);
HeckeElt hecke_from_json(const nlohmann::json& j);

// {"kind":"M","terms":[...]} with terms as in hecke_to_json
nlohmann::json parabolic_to_json(const ParabolicElt& x);
ParabolicElt parabolic_from_json(const nlohmann::json& j);

}  // namespace canontl
