#pragma once

#include <string>

#include "json.hpp"
#include "operforge/linkage.hpp"
#include "operforge/miura.hpp"
#include "operforge/oper.hpp"

namespace operforge::io {

using Json = nlohmann::ordered_json;

// Rationals are strings "p/q"; integers are accepted on input. `where` is a
// JSON path used in ParseError messages.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, const std::string& where, int size = -1);
Json to_json(const Matrix& m);

// {"window":[v,N],"coeffs":[[deg,"p/q"],...]}, plus "exact":true for series
// known exactly. Parsed series are truncated to `cap`.
Json to_json(const ScalarSeries& s);
ScalarSeries scalar_from_json(const Json& j, const std::string& where, int cap = ScalarSeries::kExact);

// {"space":tag,"window":[v,N],"coeffs":[[deg,[...]],...]} with one window for
// all coordinates (the smallest precision among them).
Json to_json(const LieSeries& s, const std::string& space);
LieSeries lie_from_json(const Json& j, const std::string& space, int dim, const std::string& where,
                        int cap = ScalarSeries::kExact);

Json to_json(const Algebra& alg, const CanonicalOper& C);
CanonicalOper canonical_from_json(const Algebra& alg, const Json& j, const std::string& where,
                                  int cap = ScalarSeries::kExact);
Json to_json(const RawOper& raw);
RawOper raw_from_json(const Algebra& alg, const Json& j, const std::string& where, int cap = ScalarSeries::kExact);
Json to_json(const HConnection& chi);
HConnection hconn_from_json(const Algebra& alg, const Json& j, const std::string& where,
                            int cap = ScalarSeries::kExact);
Json to_json(const CartanOrbitPoint& p);
CartanOrbitPoint orbit_point_from_json(const Algebra& alg, const Json& j, const std::string& where);
Json to_json(const GaugeElement& g);
GaugeElement gauge_from_json(const Algebra& alg, const Json& j, const std::string& where,
                             int cap = ScalarSeries::kExact);

Json to_json(const AffineWeight& w);
Json algebra_info(const Algebra& alg);

// Document kind, from its "kind" member.
std::string kind_of(const Json& j, const std::string& where);

}  // namespace operforge::io
