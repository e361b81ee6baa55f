#pragma once

#include "json.hpp"

#include "hodgekp/curve.hpp"
#include "hodgekp/kp.hpp"
#include "hodgekp/report.hpp"
#include "hodgekp/tau.hpp"
#include "hodgekp/tpoly.hpp"

namespace hodgekp {

using Json = nlohmann::ordered_json;

// "a/b", or "a" when b = 1.
Json to_json(const Rational& r);
// {"h^e": "a/b", ...}
Json to_json(const CoeffRing& c);
// {"t3": 2, "t1": 1}
Json to_json(VarKind kind, const Monomial& m);
// [{"monomial": {...}, "coeff": {...}}, ...] in monomial order.
Json to_json(const TPoly& p);
Json to_json(const ZSeries& s);
Json to_json(const SquareMatrix& m);
Json to_json(const CurveParams& params);
Json to_json(const CheckReport& r);
Json to_json(const HirotaReport& r);
// {"header": {kind, q, p, s, W, pipeline, engineVersion}, "space": {...}, "terms": [...]}
Json to_json(const TauSeries& tau);

CoeffRing coeff_from_json(const Json& j);
TPoly tpoly_from_json(const Json& j, PolySpace space);
TauSeries tau_from_json(const Json& j);

}  // namespace hodgekp
