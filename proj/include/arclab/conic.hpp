#pragma once

// The conic C = Z(XY - Z^2), its half H = {(1, s^4, s^2)}, and the involution
// induced on C by projection through a point off the conic.
//
// C is parametrized by F_q ∪ {∞}: s ↦ (1, s^2, s) and ∞ ↦ (0, 1, 0).  In that
// parametrization H is the image of the squares (zero included) and the
// second intersection of a line RP with C is given by the fractional map with
// matrix ((c, -b), (a, -c)) for R = (a, b, c).

#include <cstdint>
#include <string>
#include <vector>

#include "arclab/field.hpp"
#include "arclab/plane.hpp"

namespace arclab {

enum class PointClass { OnConic, Internal, External };

std::string to_string(PointClass c);

struct HSets {
    std::vector<Point> H;
    std::vector<Point> Hprime;
};

class Conic {
public:
    explicit Conic(Field field);

    const Plane& plane() const { return plane_; }
    const Field& field() const { return plane_.field(); }

    /// XY - Z^2 evaluated at the given representative.
    Elem form(const Point& p) const;
    bool contains(const Point& p) const { return form(p).code == 0; }

    /// The q+1 conic points ordered by parameter: s = 0..q-1, then ∞.
    const std::vector<Point>& points() const { return points_; }
    const HSets& hsets() const { return h_; }
    bool in_H(const Point& p) const;

    Point param_to_point(const ExtParam& s) const;
    /// Throws std::invalid_argument if p is not on C.
    ExtParam point_to_param(const Point& p) const;

    /// Tangent line at a conic point.
    Line tangent_at(const Point& p) const;
    /// Number of tangent lines of C through p.
    std::size_t tangent_count(const Point& p) const;

    /// Tangent-count classification (authoritative).
    PointClass classify(const Point& p) const;
    /// Square-class test on the conic form, oriented by a known external point.
    PointClass classify_by_square_test(const Point& p) const;

    /// Projectivity s ↦ (cs - b)/(as - c) for R = (a, b, c) off C.
    ExtParam phi(const Point& R, const ExtParam& s) const;
    /// Second intersection of line RP with C (P itself when RP is tangent).
    Point tau(const Point& R, const Point& P) const;

    /// Some secant of H passes through R.  Decided via phi on parameters in
    /// {0} ∪ squares, ignoring fixed parameters (tangents through R).
    bool is_H_covered_projective(const Point& R) const;
    /// Same question decided by checking every pair of points of H.
    /// Throws std::invalid_argument if R ∈ H.
    bool is_H_covered_direct(const Point& R) const;

    /// The point R0 = (1, r, 0) completing H to the arc K.
    Point choose_R0() const;

private:
    void require_off_conic(const Point& R) const;
    bool in_param_set(const ExtParam& s) const;

    Plane plane_;
    std::vector<Point> points_;
    HSets h_;
    std::vector<std::uint8_t> in_h_;      // by point index
    std::vector<std::uint8_t> tangents_;  // tangent count by point index
    SquareClass external_class_ = SquareClass::Square;
};

}  // namespace arclab
