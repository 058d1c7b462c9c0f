#include "arclab/conic.hpp"

#include <algorithm>
#include <stdexcept>

namespace arclab {

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::OnConic: return "ON_CONIC";
        case PointClass::Internal: return "INTERNAL";
        case PointClass::External: return "EXTERNAL";
    }
    return "?";
}

Conic::Conic(Field field) : plane_(std::move(field)) {
    const auto& F = plane_.field();
    const std::uint32_t q = F.q();

    points_.reserve(q + 1);
    for (std::uint32_t s = 0; s < q; ++s) points_.push_back(param_to_point(Elem{s}));
    points_.push_back(param_to_point(ExtParam::infinity()));

    in_h_.assign(plane_.num_points(), 0);
    for (std::uint32_t s = 0; s < q; ++s) {
        const Elem s2 = F.mul(Elem{s}, Elem{s});
        const Point p = plane_.normalize({F.one(), F.mul(s2, s2), s2});
        const auto i = plane_.index_of(p);
        if (!in_h_[i]) {
            in_h_[i] = 1;
            h_.H.push_back(p);
        }
    }
    std::sort(h_.H.begin(), h_.H.end());
    for (const auto& p : points_)
        if (!in_h_[plane_.index_of(p)]) h_.Hprime.push_back(p);
    std::sort(h_.Hprime.begin(), h_.Hprime.end());

    tangents_.assign(plane_.num_points(), 0);
    std::vector<std::size_t> idx;
    for (const auto& p : points_) {
        plane_.point_indices_on(tangent_at(p), idx);
        for (auto i : idx) ++tangents_[i];
    }

    // Any non-contact point of a tangent line is external; orient the square test with it.
    const Point contact = points_.front();
    for (const auto& p : plane_.points_on(tangent_at(contact))) {
        if (p != contact) {
            external_class_ = F.classify(form(p));
            break;
        }
    }
}

Elem Conic::form(const Point& p) const {
    const auto& F = field();
    return F.sub(F.mul(p.x(), p.y()), F.mul(p.z(), p.z()));
}

bool Conic::in_H(const Point& p) const { return in_h_[plane_.index_of(p)] != 0; }

Point Conic::param_to_point(const ExtParam& s) const {
    const auto& F = field();
    if (s.is_infinity()) return Point{{F.zero(), F.one(), F.zero()}};
    const Elem v = s.value();
    return Point{{F.one(), F.mul(v, v), v}};
}

ExtParam Conic::point_to_param(const Point& p) const {
    if (!contains(p)) throw std::invalid_argument("point_to_param: point is not on the conic");
    if (p.x().code == 0) return ExtParam::infinity();
    return ExtParam{p.z()};
}

Line Conic::tangent_at(const Point& p) const {
    // Gradient of XY - Z^2 is (Y, X, -2Z).
    const auto& F = field();
    return plane_.normalize_line({p.y(), p.x(), F.neg(F.add(p.z(), p.z()))});
}

std::size_t Conic::tangent_count(const Point& p) const { return tangents_[plane_.index_of(p)]; }

PointClass Conic::classify(const Point& p) const {
    if (contains(p)) return PointClass::OnConic;
    const auto n = tangent_count(p);
    if (n == 2) return PointClass::External;
    if (n == 0) return PointClass::Internal;
    throw std::logic_error("off-conic point on " + std::to_string(n) + " tangents");
}

PointClass Conic::classify_by_square_test(const Point& p) const {
    const Elem v = form(p);
    if (v.code == 0) return PointClass::OnConic;
    return field().classify(v) == external_class_ ? PointClass::External : PointClass::Internal;
}

void Conic::require_off_conic(const Point& R) const {
    if (contains(R)) throw std::invalid_argument("point lies on the conic");
}

ExtParam Conic::phi(const Point& R, const ExtParam& s) const {
    require_off_conic(R);
    const auto& F = field();
    const Elem a = R.x(), b = R.y(), c = R.z();
    // Image of the homogeneous pair (s : 1), or (1 : 0) for ∞.
    Elem num, den;
    if (s.is_infinity()) {
        num = c;
        den = a;
    } else {
        num = F.sub(F.mul(c, s.value()), b);
        den = F.sub(F.mul(a, s.value()), c);
    }
    if (den.code == 0) return ExtParam::infinity();
    return ExtParam{F.div(num, den)};
}

Point Conic::tau(const Point& R, const Point& P) const { return param_to_point(phi(R, point_to_param(P))); }

bool Conic::in_param_set(const ExtParam& s) const {
    if (s.is_infinity()) return false;
    return s.value().code == 0 || field().is_nonzero_square(s.value());
}

bool Conic::is_H_covered_projective(const Point& R) const {
    require_off_conic(R);
    const std::uint32_t q = field().q();
    for (std::uint32_t x = 0; x < q; ++x) {
        const ExtParam s{Elem{x}};
        if (!in_param_set(s)) continue;
        const ExtParam t = phi(R, s);
        if (in_param_set(t) && t != s) return true;
    }
    return false;
}

bool Conic::is_H_covered_direct(const Point& R) const {
    if (in_H(R)) throw std::invalid_argument("is_H_covered_direct: point belongs to H");
    const auto& H = h_.H;
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = i + 1; j < H.size(); ++j)
            if (plane_.collinear(H[i], H[j], R)) return true;
    return false;
}

Point Conic::choose_R0() const {
    const auto& F = field();
    const Elem r = F.q() % 4 == 3 ? F.one() : F.first_nonsquare();
    const Point R0{{F.one(), r, F.zero()}};
    if (classify(R0) != PointClass::Internal) throw std::logic_error("R0 is not internal");
    return R0;
}

}  // namespace arclab
