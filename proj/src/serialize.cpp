#include "arclab/serialize.hpp"

#include <stdexcept>

namespace arclab {

namespace {

std::uint32_t require_uint(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer");
    return j.get<std::uint32_t>();
}

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

Json field_to_json(const Field& F) {
    return Json{{"q", F.q()}, {"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

Json point_to_json(const Point& p) { return Json::array({p.c[0].code, p.c[1].code, p.c[2].code}); }

Json points_to_json(const std::vector<Point>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(point_to_json(p));
    return out;
}

Point point_from_json(const Plane& plane, const Json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("point: expected an array of three integers");
    const auto& F = plane.field();
    return plane.normalize(
        {F.element(require_uint(j[0], "point")), F.element(require_uint(j[1], "point")), F.element(require_uint(j[2], "point"))});
}

Json arc_to_json(const Arc& arc) {
    return Json{{"q", arc.plane().field().q()}, {"points", points_to_json(arc.points())}};
}

Arc arc_from_json(const Json& j) {
    const Plane plane{Field(require_uint(require_key(j, "q"), "q"))};
    const auto& pts = require_key(j, "points");
    if (!pts.is_array()) throw std::invalid_argument("points: expected an array");
    std::vector<Point> points;
    for (const auto& p : pts) points.push_back(point_from_json(plane, p));
    return Arc(plane, std::move(points));
}

Json coverage_to_json(const CoverageMap& cov) {
    return Json{{"free", points_to_json(cov.free_points())}, {"covered_count", cov.covered_count()}};
}

Json curve_to_json(const HomPoly& P) {
    Json monos = Json::array();
    for (const auto& [e, c] : P.terms()) monos.push_back(Json{{"exp", e}, {"coeff", c.code}});
    return Json{{"q", P.field().q()}, {"d", P.degree()}, {"monomials", monos}};
}

HomPoly curve_from_json(const Json& j) {
    const Field F(require_uint(require_key(j, "q"), "q"));
    const int d = static_cast<int>(require_uint(require_key(j, "d"), "d"));
    std::map<Exponent, Elem> terms;
    const auto& monos = require_key(j, "monomials");
    if (!monos.is_array()) throw std::invalid_argument("monomials: expected an array");
    for (const auto& m : monos) {
        const auto& e = require_key(m, "exp");
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("exp: expected three exponents");
        const Exponent ex{static_cast<int>(require_uint(e[0], "exp")), static_cast<int>(require_uint(e[1], "exp")),
                          static_cast<int>(require_uint(e[2], "exp"))};
        const Elem c = F.element(require_uint(require_key(m, "coeff"), "coeff"));
        if (terms.count(ex)) throw std::invalid_argument("duplicate monomial");
        terms[ex] = c;
    }
    HomPoly P(F, d, terms);
    if (P.is_zero()) throw std::invalid_argument("curve polynomial is zero");
    return P;
}

Json curve_report_to_json(const CurveReport& r) {
    Json sing = Json::array();
    for (const auto& s : r.singular)
        sing.push_back(Json{{"point", point_to_json(s.point)}, {"multiplicity", s.multiplicity}, {"ordinary", s.ordinary}});
    Json out{{"q", r.q}, {"d", r.degree}, {"points", r.points}, {"singular", sing}};
    if (r.genus.genus)
        out["genus"] = *r.genus.genus;
    else
        out["genus"] = Json{{"not_applicable", r.genus.reason}};
    if (r.hasse_weil) {
        const auto& h = *r.hasse_weil;
        out["hasse_weil"] = Json{{"genus", h.genus}, {"slack", h.slack}, {"lower", h.lower}, {"upper", h.upper}, {"holds", h.holds}};
    }
    return out;
}

}  // namespace arclab
