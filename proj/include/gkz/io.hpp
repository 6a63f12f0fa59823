#pragma once

#include <string>

#include <json.hpp>

#include "gkz/contour.hpp"
#include "gkz/expansion.hpp"
#include "gkz/series.hpp"

namespace gkz {

using Json = nlohmann::json;

// All documents carry {"schema": "v1", "kind": ...} and round-trip through
// the matching from_json readers.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json sector_point_to_json(const SectorPoint& p);
SectorPoint sector_point_from_json(const Json& j);

Json series_to_json(const FractionalSeries& s, const SeriesLabel& label);
FractionalSeries series_from_json(const Json& j, SeriesLabel* label = nullptr);

Json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const Json& j);

Json table_to_json(const CoefficientTable& t);
CoefficientTable table_from_json(const Json& j);

Json integral_to_json(const IntegralResult& r);

// CLI scalar formats: complex numbers as "re+imi" (e.g. "-0.7+0.2i"), points
// as "mod@arg" with the continuous argument in radians.
Complex parse_complex(const std::string& text);
SectorPoint parse_sector_point(const std::string& text);

std::string variant_name(SeriesVariant v);
SeriesVariant variant_from_name(const std::string& name);

} // namespace gkz
