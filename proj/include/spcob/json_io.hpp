#pragma once

#include <json.hpp>

#include <string>

#include "spcob/check.hpp"
#include "spcob/hgr_ring.hpp"
#include "spcob/mpoly.hpp"
#include "spcob/partition.hpp"
#include "spcob/pclass.hpp"
#include "spcob/spmat.hpp"
#include "spcob/stable.hpp"
#include "spcob/symfun.hpp"

namespace spcob {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"basis":"e"|"x"|"schur","r":int,"terms":[{"key":[...],"coeff":"..."}]}
Json to_json(const EPoly& p);
Json to_json(const XPoly& p);
Json to_json(const SchurVector& v);

/// A polynomial in any of the three symmetric-function bases, as read from
/// JSON. Exactly one member is meaningful, selected by `basis`.
struct SymPoly {
  std::string basis;
  EPoly e;
  XPoly x;
  SchurVector schur;
};
SymPoly sympoly_from_json(const Json& j);
EPoly epoly_from_json(const Json& j);
SchurVector schur_from_json(const Json& j);

/// Schur format with an attached {"ring":{"r":..,"n":..}}.
Json to_json(const GrassRing& ring);
Json to_json(const GrassElem& x);
GrassElem grass_elem_from_json(const Json& j);

/// {"vars":r,"trunc":D,"terms":[...]}; non-standard gradings add "weights".
Json to_json(const HomSeries& x);
HomSeries homseries_from_json(const Json& j);

/// {"basis":"named","symbols":[{"name":..,"degree":..}],"terms":[...]}, keys
/// aligned with the symbol list.
Json to_json(const NamedPoly& p);
NamedPoly named_from_json(const Json& j);
Json to_json(const PontVector& pv);
Json to_json(const ZetaRelation& rel);

/// {"size":2N,"entries":[[[c0,c1,...], ...], ...]}; coefficients outside the
/// int64 range are written as decimal strings.
Json to_json(const TMatrix& m);
TMatrix tmatrix_from_json(const Json& j);

Json coeff_to_json(const Integer& c);
Integer coeff_from_json(const Json& j);

}  // namespace spcob
