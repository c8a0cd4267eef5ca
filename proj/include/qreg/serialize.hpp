#pragma once

#include "qreg/analysis.hpp"
#include "qreg/bijection.hpp"
#include "qreg/genfun.hpp"

#include "json.hpp"

namespace qreg {

using json = nlohmann::ordered_json;

/* Coefficients travel as decimal strings indexed by exponent, so integers of
 * any size round-trip bit-exactly. */
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

json series_to_json(const QSeries& s);
QSeries series_from_json(const json& j);

json xqseries_to_json(const XQSeries& s);

json report_to_json(const VerificationReport& r);
json report_to_json(const ScanReport& r);

json reduced_pair_to_json(const ReducedPair& r);

}  // namespace qreg
