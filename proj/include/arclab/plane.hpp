#pragma once

// Points, lines and incidence in PG(2,q).

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "arclab/field.hpp"

namespace arclab {

using Triple = std::array<Elem, 3>;

/// Homogeneous point, normalized so its first nonzero coordinate is 1.
struct Point {
    Triple c{};

    Elem x() const { return c[0]; }
    Elem y() const { return c[1]; }
    Elem z() const { return c[2]; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Line {(x,y,z) : ux + vy + wz = 0}, normalized like Point.
struct Line {
    Triple c{};

    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;
};

class Plane {
public:
    explicit Plane(Field field);

    const Field& field() const { return f_; }
    std::size_t num_points() const { return n_; }

    /// Throws std::invalid_argument on the zero triple.
    Point normalize(const Triple& raw) const;
    Line normalize_line(const Triple& raw) const;
    Point point(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;

    /// Throws std::invalid_argument when a == b.
    Line line_through(const Point& a, const Point& b) const;
    /// Throws std::invalid_argument when a == b.
    Point meet(const Line& a, const Line& b) const;

    Elem pairing(const Point& pt, const Line& l) const;
    bool incident(const Point& pt, const Line& l) const;
    bool collinear(const Point& a, const Point& b, const Point& c) const;
    Elem det(const Point& a, const Point& b, const Point& c) const;

    /// Position of a normalized point in the lexicographic enumeration.
    std::size_t index_of(const Point& pt) const;
    Point point_at(std::size_t index) const;

    std::vector<Point> all_points() const;
    std::vector<Line> all_lines() const;
    /// The q+1 points of l, in enumeration order.
    std::vector<Point> points_on(const Line& l) const;
    /// Indices of the q+1 points of l (unordered).
    void point_indices_on(const Line& l, std::vector<std::size_t>& out) const;
    /// The q+1 lines through pt.
    std::vector<Line> lines_through(const Point& pt) const;

private:
    Triple cross(const Triple& a, const Triple& b) const;
    Triple normalized(const Triple& raw) const;

    Field f_;
    std::size_t n_;
};

}  // namespace arclab
