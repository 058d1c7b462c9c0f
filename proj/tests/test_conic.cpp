#include <doctest.h>

#include <set>

#include "arclab/conic.hpp"

using namespace arclab;

namespace {

// Direct definition: the second conic point on line RP, found by scanning the conic.
Point second_intersection(const Conic& C, const Point& R, const Point& P) {
    const auto& plane = C.plane();
    const Line l = plane.line_through(R, P);
    for (const auto& X : C.points())
        if (X != P && plane.incident(X, l)) return X;
    return P;
}

}  // namespace

TEST_CASE("conic parametrization") {
    const Conic C{Field(7)};
    const auto& F = C.field();
    CHECK(C.points().size() == 8);
    CHECK(C.param_to_point(ExtParam{F.element(3)}) == C.plane().point(1, 2, 3));
    CHECK(C.param_to_point(ExtParam::infinity()) == C.plane().point(0, 1, 0));
    CHECK(C.point_to_param(C.plane().point(1, 1, 1)) == ExtParam{F.one()});
    CHECK(C.point_to_param(C.plane().point(0, 1, 0)).is_infinity());
    CHECK_THROWS_AS(C.point_to_param(C.plane().point(1, 1, 0)), std::invalid_argument);

    // (0,1,0) is the only conic point with x = 0.
    std::size_t x0 = 0;
    for (const auto& p : C.plane().all_points())
        if (C.contains(p) && p.x().code == 0) {
            ++x0;
            CHECK(p == C.plane().point(0, 1, 0));
        }
    CHECK(x0 == 1);

    for (std::uint32_t q : {3u, 5u, 9u, 25u, 27u}) {
        const Conic D{Field(q)};
        std::size_t on = 0;
        for (const auto& p : D.plane().all_points()) on += D.contains(p);
        CHECK(on == q + 1);
        for (const auto& p : D.points()) CHECK(D.param_to_point(D.point_to_param(p)) == p);
    }
}

TEST_CASE("H and H'") {
    const Conic C{Field(7)};
    const auto& plane = C.plane();
    const std::vector<Point> expected{plane.point(1, 0, 0), plane.point(1, 1, 1), plane.point(1, 2, 4),
                                      plane.point(1, 4, 2)};
    CHECK(C.hsets().H == expected);

    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 81u}) {
        CAPTURE(q);
        const Conic D{Field(q)};
        const auto& hs = D.hsets();
        CHECK(hs.H.size() == (q + 1) / 2);
        CHECK(hs.Hprime.size() == (q + 1) / 2);
        std::set<Point> all(hs.H.begin(), hs.H.end());
        for (const auto& p : hs.Hprime) CHECK(all.insert(p).second);
        CHECK(all == std::set<Point>(D.points().begin(), D.points().end()));
        CHECK(std::count(hs.Hprime.begin(), hs.Hprime.end(), D.plane().point(0, 1, 0)) == 1);
        for (const auto& p : hs.H) {
            const auto s = D.point_to_param(p);
            CHECK(D.field().classify(s) != SquareClass::Nonsquare);
        }
    }
}

TEST_CASE("point classification by tangent counting") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 25u, 27u}) {
        CAPTURE(q);
        const Conic C{Field(q)};
        std::size_t external = 0, internal = 0;
        for (const auto& p : C.plane().all_points()) {
            const auto cls = C.classify(p);
            if (cls == PointClass::OnConic) CHECK(C.tangent_count(p) == 1);
            if (cls == PointClass::External) ++external;
            if (cls == PointClass::Internal) ++internal;
            CHECK(C.classify_by_square_test(p) == cls);
        }
        CHECK(external == (q * q + q) / 2);
        CHECK(external + internal == q * q);
    }

    const Conic C{Field(7)};
    CHECK(C.classify(C.plane().point(1, 1, 1)) == PointClass::OnConic);
    // (0,0,1) lies on the tangents Y = 0 and X = 0.
    CHECK(C.tangent_count(C.plane().point(0, 0, 1)) == 2);
    CHECK(C.classify(C.plane().point(0, 0, 1)) == PointClass::External);

    for (std::uint32_t q : {3u, 7u, 11u, 19u, 23u, 27u}) {
        const Conic D{Field(q)};
        CHECK(D.classify(D.plane().point(1, 1, 0)) == PointClass::Internal);
    }
}

TEST_CASE("phi_R examples") {
    const Conic C{Field(7)};
    const auto& plane = C.plane();
    const auto& F = C.field();
    const Point R = plane.point(1, 1, 0);
    CHECK(C.phi(R, ExtParam{F.element(2)}) == ExtParam{F.element(3)});
    CHECK(second_intersection(C, R, plane.point(1, 4, 2)) == plane.point(1, 2, 3));
    CHECK(C.tau(R, plane.point(1, 4, 2)) == plane.point(1, 2, 3));

    const Point S = plane.point(1, 1, 3);
    CHECK(C.phi(S, ExtParam{F.element(2)}) == ExtParam{F.element(2)});
    CHECK(C.phi(S, ExtParam{F.element(4)}) == ExtParam{F.element(4)});
    CHECK(C.phi(S, ExtParam::infinity()) == ExtParam{F.element(3)});
    CHECK(C.phi(S, ExtParam{F.element(3)}).is_infinity());

    CHECK_THROWS_AS(C.phi(plane.point(1, 1, 1), ExtParam{F.one()}), std::invalid_argument);
}

TEST_CASE("phi_R is the involution of second intersections") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u}) {
        CAPTURE(q);
        const Conic C{Field(q)};
        const auto& plane = C.plane();
        for (const auto& R : plane.all_points()) {
            if (C.contains(R)) continue;
            std::size_t fixed = 0;
            for (const auto& P : C.points()) {
                const auto s = C.point_to_param(P);
                const auto t = C.phi(R, s);
                CHECK(C.phi(R, t) == s);
                const Point Q = C.tau(R, P);
                CHECK(Q == second_intersection(C, R, P));
                CHECK(plane.collinear(R, P, Q));
                if (t == s) {
                    ++fixed;
                    CHECK(plane.incident(R, C.tangent_at(P)));
                }
            }
            CHECK(fixed == C.tangent_count(R));
            CHECK(fixed <= 2);
            // Fixed finite parameters solve a s^2 - 2 c s + b = 0.
            const auto& F = C.field();
            for (std::uint32_t s = 0; s < q; ++s) {
                const Elem e{s};
                const Elem quad =
                    F.add(F.sub(F.mul(R.x(), F.mul(e, e)), F.mul(F.from_int(2), F.mul(R.z(), e))), R.y());
                CHECK((quad.code == 0) == (C.phi(R, ExtParam{e}) == ExtParam{e}));
            }
        }
    }
}

TEST_CASE("H-coverage examples") {
    const Conic c19{Field(19)};
    CHECK_FALSE(c19.is_H_covered_projective(c19.plane().point(1, 1, 0)));
    CHECK_FALSE(c19.is_H_covered_direct(c19.plane().point(1, 1, 0)));

    const Conic c17{Field(17)};
    CHECK(c17.is_H_covered_projective(c17.plane().point(0, 0, 1)));
    CHECK(c17.is_H_covered_direct(c17.plane().point(0, 0, 1)));
    for (const auto& R : c17.plane().all_points()) {
        if (R.x().code == 0 || R.y().code == 0 || R.z().code == 0 || c17.contains(R)) continue;
        CHECK(c17.is_H_covered_direct(R));
    }

    const Conic c7{Field(7)};
    const Point R = c7.plane().point(1, 1, 3);
    CHECK_FALSE(c7.is_H_covered_projective(R));
    CHECK_FALSE(c7.is_H_covered_direct(R));
    // The tangent parameter 2 is a square, so the literal criterion would call R covered.
    CHECK(c7.field().is_nonzero_square(Elem{2}));
    CHECK(c7.phi(R, ExtParam{Elem{2}}) == ExtParam{Elem{2}});
    // Brute force over the 6 pairs of H.
    const auto& H = c7.hsets().H;
    std::size_t pairs = 0, through = 0;
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = i + 1; j < H.size(); ++j) {
            ++pairs;
            through += c7.plane().incident(R, c7.plane().line_through(H[i], H[j]));
        }
    CHECK(pairs == 6);
    CHECK(through == 0);

    CHECK_THROWS_AS(c7.is_H_covered_direct(c7.plane().point(1, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(c7.is_H_covered_projective(c7.plane().point(0, 1, 0)), std::invalid_argument);
}

TEST_CASE("choose_R0") {
    CHECK(Conic{Field(19)}.choose_R0() == Conic{Field(19)}.plane().point(1, 1, 0));
    CHECK(Conic{Field(13)}.choose_R0() == Conic{Field(13)}.plane().point(1, 2, 0));
    for (std::uint32_t q : odd_prime_powers(5, 199)) {
        CAPTURE(q);
        const Conic C{Field(q)};
        const Point R0 = C.choose_R0();
        CHECK(C.classify(R0) == PointClass::Internal);
        CHECK_FALSE(C.is_H_covered_projective(R0));
        if (q % 4 == 3) CHECK(C.field().is_fourth_power(R0.y()));
        if (q % 4 == 1) CHECK_FALSE(C.field().is_nonzero_square(R0.y()));
    }
}

TEST_CASE("projective criterion agrees with the secant definition") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 25u, 27u}) {
        CAPTURE(q);
        const Conic C{Field(q)};
        for (const auto& R : C.plane().all_points()) {
            if (C.contains(R)) continue;
            CHECK(C.is_H_covered_projective(R) == C.is_H_covered_direct(R));
        }
    }
}
