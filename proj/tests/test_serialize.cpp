#include <doctest.h>

#include "arclab/conic.hpp"
#include "arclab/serialize.hpp"

using namespace arclab;

TEST_CASE("field json") {
    const auto j = field_to_json(Field(9));
    CHECK(j.dump() == R"({"q":9,"p":3,"k":2,"modulus":[1,0,1]})");
}

TEST_CASE("arc round trip") {
    const Conic C{Field(7)};
    const Arc h(C.plane(), C.hsets().H);
    const auto j = arc_to_json(h);
    CHECK(j.dump() == R"({"q":7,"points":[[1,0,0],[1,1,1],[1,2,4],[1,4,2]]})");
    const Arc back = arc_from_json(Json::parse(j.dump()));
    CHECK(back.points() == h.points());

    // Representatives are normalized on input.
    const Arc scaled = arc_from_json(Json::parse(R"({"q":7,"points":[[2,0,0],[3,3,3]]})"));
    CHECK(scaled.points() == std::vector<Point>{C.plane().point(1, 0, 0), C.plane().point(1, 1, 1)});

    CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"q":7,"points":[[1,0,0],[0,1,0],[1,1,0]]})")), CollinearTripleError);
    CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"q":7,"points":[[0,0,0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"q":7,"points":[[7,0,0]]})")), std::out_of_range);
    CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"q":8,"points":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"points":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"q":7,"points":[[1,-1,0]]})")), std::invalid_argument);
}

TEST_CASE("coverage json") {
    const Conic C{Field(19)};
    const auto j = coverage_to_json(coverage(Arc(C.plane(), C.hsets().H)));
    // H' (10 points) plus the 10 off-conic H-free points.
    CHECK(j.at("free").size() == 20);
    CHECK(std::count(j.at("free").begin(), j.at("free").end(), Json::array({1, 1, 0})) == 1);
    const auto total = j.at("free").size() + j.at("covered_count").get<std::size_t>() + C.hsets().H.size();
    CHECK(total == 19 * 19 + 19 + 1);
}

TEST_CASE("curve round trip") {
    const Field F(11);
    const HomPoly S = segre_curve(F, F.one(), F.from_int(2), F.from_int(3), F.first_nonsquare());
    const auto j = curve_to_json(S);
    CHECK(j.at("d") == 4);
    CHECK(j.at("monomials").size() == 4);
    CHECK(curve_from_json(Json::parse(j.dump())) == S);

    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"q":7,"d":2,"monomials":[{"exp":[1,0,0],"coeff":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"q":7,"d":1,"monomials":[{"exp":[1,0,0],"coeff":0}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(curve_from_json(Json::parse(
                        R"({"q":7,"d":1,"monomials":[{"exp":[1,0,0],"coeff":1},{"exp":[1,0,0],"coeff":2}]})")),
                    std::invalid_argument);

    const auto rep = curve_report_to_json(analyze_curve(S, Plane(F)));
    CHECK(rep.at("genus") == 1);
    CHECK(rep.at("singular").size() == 2);
    CHECK(rep.at("hasse_weil").at("holds") == true);
}
