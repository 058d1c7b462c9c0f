#pragma once

// JSON forms of fields, points, arcs, coverage maps and curves.  Field
// elements are written as their integer encodings; points as [x, y, z].

#include <json.hpp>

#include "arclab/arc.hpp"
#include "arclab/curve.hpp"
#include "arclab/field.hpp"
#include "arclab/plane.hpp"

namespace arclab {

using Json = nlohmann::ordered_json;

/// {q, p, k, modulus: [c0, ..., c_{k-1}, 1]}
Json field_to_json(const Field& F);

Json point_to_json(const Point& p);
Json points_to_json(const std::vector<Point>& pts);
/// Accepts any nonzero triple of encoded elements and normalizes it.
Point point_from_json(const Plane& plane, const Json& j);

/// {q, points: [[x,y,z], ...]}
Json arc_to_json(const Arc& arc);
Arc arc_from_json(const Json& j);

/// {free: [...], covered_count: n}
Json coverage_to_json(const CoverageMap& cov);

/// {q, d, monomials: [{exp: [i,j,k], coeff: n}, ...]}
Json curve_to_json(const HomPoly& F);
HomPoly curve_from_json(const Json& j);

Json curve_report_to_json(const CurveReport& r);

}  // namespace arclab
