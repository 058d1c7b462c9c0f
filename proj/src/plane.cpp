#include "arclab/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace arclab {

Plane::Plane(Field field) : f_(std::move(field)) {
    const std::size_t q = f_.q();
    n_ = q * q + q + 1;
}

Triple Plane::normalized(const Triple& raw) const {
    for (std::size_t i = 0; i < 3; ++i) {
        if (raw[i].code != 0) {
            const Elem s = f_.inv(raw[i]);
            Triple out{};
            for (std::size_t j = 0; j < 3; ++j) out[j] = j < i ? f_.zero() : f_.mul(raw[j], s);
            return out;
        }
    }
    throw std::invalid_argument("zero triple has no projective representative");
}

Point Plane::normalize(const Triple& raw) const { return Point{normalized(raw)}; }

Line Plane::normalize_line(const Triple& raw) const { return Line{normalized(raw)}; }

Point Plane::point(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    return normalize({f_.element(x), f_.element(y), f_.element(z)});
}

Triple Plane::cross(const Triple& a, const Triple& b) const {
    const auto& F = f_;
    return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])), F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
            F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

Line Plane::line_through(const Point& a, const Point& b) const {
    if (a == b) throw std::invalid_argument("line_through: points coincide");
    return Line{normalized(cross(a.c, b.c))};
}

Point Plane::meet(const Line& a, const Line& b) const {
    if (a == b) throw std::invalid_argument("meet: lines coincide");
    return Point{normalized(cross(a.c, b.c))};
}

Elem Plane::pairing(const Point& pt, const Line& l) const {
    const auto& F = f_;
    return F.add(F.add(F.mul(pt.c[0], l.c[0]), F.mul(pt.c[1], l.c[1])), F.mul(pt.c[2], l.c[2]));
}

bool Plane::incident(const Point& pt, const Line& l) const { return pairing(pt, l).code == 0; }

Elem Plane::det(const Point& a, const Point& b, const Point& c) const {
    const Triple n = cross(b.c, c.c);
    const auto& F = f_;
    return F.add(F.add(F.mul(a.c[0], n[0]), F.mul(a.c[1], n[1])), F.mul(a.c[2], n[2]));
}

bool Plane::collinear(const Point& a, const Point& b, const Point& c) const { return det(a, b, c).code == 0; }

std::size_t Plane::index_of(const Point& pt) const {
    const std::size_t q = f_.q();
    if (pt.c[0].code == 1) return 1 + q + pt.c[1].code * q + pt.c[2].code;
    if (pt.c[1].code == 1) return 1 + pt.c[2].code;
    return 0;
}

Point Plane::point_at(std::size_t index) const {
    const std::size_t q = f_.q();
    if (index >= n_) throw std::out_of_range("point index out of range");
    if (index == 0) return Point{{Elem{0}, Elem{0}, Elem{1}}};
    if (index <= q) return Point{{Elem{0}, Elem{1}, Elem{static_cast<std::uint32_t>(index - 1)}}};
    const std::size_t r = index - 1 - q;
    return Point{{Elem{1}, Elem{static_cast<std::uint32_t>(r / q)}, Elem{static_cast<std::uint32_t>(r % q)}}};
}

std::vector<Point> Plane::all_points() const {
    std::vector<Point> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(point_at(i));
    return out;
}

std::vector<Line> Plane::all_lines() const {
    std::vector<Line> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(Line{point_at(i).c});
    return out;
}

void Plane::point_indices_on(const Line& l, std::vector<std::size_t>& out) const {
    // Two spanning points: the meets of l with two distinct coordinate lines.
    out.clear();
    const std::uint32_t q = f_.q();
    const auto& u = l.c;
    Triple a{}, b{};
    if (u[0].code != 0) {
        // u = (1, v, w): (−v, 1, 0) and (−w, 0, 1) span l.
        a = {f_.neg(u[1]), f_.one(), f_.zero()};
        b = {f_.neg(u[2]), f_.zero(), f_.one()};
    } else if (u[1].code != 0) {
        // u = (0, 1, w): (1, 0, 0) and (0, −w, 1).
        a = {f_.one(), f_.zero(), f_.zero()};
        b = {f_.zero(), f_.neg(u[2]), f_.one()};
    } else {
        // Z = 0.
        a = {f_.one(), f_.zero(), f_.zero()};
        b = {f_.zero(), f_.one(), f_.zero()};
    }
    out.reserve(q + 1);
    out.push_back(index_of(normalize(a)));
    for (std::uint32_t t = 0; t < q; ++t) {
        const Elem te{t};
        const Triple r{f_.add(b[0], f_.mul(te, a[0])), f_.add(b[1], f_.mul(te, a[1])),
                       f_.add(b[2], f_.mul(te, a[2]))};
        out.push_back(index_of(normalize(r)));
    }
}

std::vector<Point> Plane::points_on(const Line& l) const {
    std::vector<std::size_t> idx;
    point_indices_on(l, idx);
    std::sort(idx.begin(), idx.end());
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(point_at(i));
    return out;
}

std::vector<Line> Plane::lines_through(const Point& pt) const {
    // Dual of points_on.
    std::vector<std::size_t> idx;
    point_indices_on(Line{pt.c}, idx);
    std::sort(idx.begin(), idx.end());
    std::vector<Line> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(Line{point_at(i).c});
    return out;
}

}  // namespace arclab
