#include "arclab/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace arclab {

namespace {

Triple unit(const Field& F, int i) {
    Triple t{F.zero(), F.zero(), F.zero()};
    t[static_cast<std::size_t>(i)] = F.one();
    return t;
}

Elem det3(const Field& F, const Triple& a, const Triple& b, const Triple& c) {
    const Elem m0 = F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1]));
    const Elem m1 = F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0]));
    const Elem m2 = F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0]));
    return F.add(F.sub(F.mul(a[0], m0), F.mul(a[1], m1)), F.mul(a[2], m2));
}

// Matrix whose columns are the images of the new basis vectors.
std::array<Triple, 3> from_columns(const Triple& c0, const Triple& c1, const Triple& c2) {
    std::array<Triple, 3> m{};
    for (std::size_t i = 0; i < 3; ++i) m[i] = {c0[i], c1[i], c2[i]};
    return m;
}

// Local frame with p at (0,0,1) and, if given, `direction` at (0,1,0).
std::array<Triple, 3> local_frame(const Field& F, const Point& p, const std::optional<Point>& direction) {
    if (direction) {
        if (*direction == p) throw std::invalid_argument("direction coincides with the base point");
        for (int a = 0; a < 3; ++a) {
            const Triple e = unit(F, a);
            if (det3(F, e, direction->c, p.c).code != 0) return from_columns(e, direction->c, p.c);
        }
    } else {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const Triple ea = unit(F, a), eb = unit(F, b);
                if (det3(F, ea, eb, p.c).code != 0) return from_columns(ea, eb, p.c);
            }
    }
    throw std::logic_error("no local frame");
}

// Coefficients of F with the third variable set to 1, grouped by the power of `outer`, each a
// polynomial in `inner`.
std::vector<uni::Poly> dehomogenize(const HomPoly& P, int outer, int inner) {
    std::vector<uni::Poly> out(static_cast<std::size_t>(P.degree() + 1));
    const auto& F = P.field();
    for (const auto& [e, c] : P.terms()) {
        auto& row = out[static_cast<std::size_t>(e[static_cast<std::size_t>(outer)])];
        const auto i = static_cast<std::size_t>(e[static_cast<std::size_t>(inner)]);
        if (row.size() <= i) row.resize(i + 1, F.zero());
        row[i] = F.add(row[i], c);
    }
    for (auto& r : out) uni::trim(r);
    while (!out.empty() && uni::is_zero(out.back())) out.pop_back();
    return out;
}

// true: every common zero of f, g1, g2 has a rational `inner` coordinate.
std::optional<bool> inner_coordinates_rational(const Field& F, const std::vector<uni::Poly>& f,
                                               const std::vector<uni::Poly>& g1,
                                               const std::vector<uni::Poly>& g2) {
    const uni::Poly r1 = uni::resultant(F, f, g1);
    const uni::Poly r2 = uni::resultant(F, f, g2);
    const uni::Poly g = uni::gcd(F, r1, r2);
    if (uni::is_zero(g)) return std::nullopt;
    return uni::degree(uni::strip_rational_roots(F, g)) == 0;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

}  // namespace

HomPoly::HomPoly(Field field, int degree, const std::map<Exponent, Elem>& terms)
    : f_(std::move(field)), degree_(degree) {
    if (degree < 0 || degree > kMaxCurveDegree) throw std::invalid_argument("degree out of range");
    for (const auto& [e, c] : terms) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent");
        if (e[0] + e[1] + e[2] != degree) throw std::invalid_argument("monomial degree differs from polynomial degree");
        if (c.code >= f_.q()) throw std::out_of_range("coefficient out of field range");
        if (c.code != 0) terms_[e] = c;
    }
}

Elem HomPoly::coeff(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? f_.zero() : it->second;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (o.degree_ != degree_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("degree mismatch");
    auto t = terms_;
    for (const auto& [e, c] : o.terms_) t[e] = f_.add(coeff(e), c);
    return HomPoly(f_, is_zero() ? o.degree_ : degree_, t);
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + o.scaled(f_.neg(f_.one())); }

HomPoly HomPoly::operator*(const HomPoly& o) const {
    std::map<Exponent, Elem> t;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            const Exponent e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            auto it = t.find(e);
            const Elem v = f_.mul(c1, c2);
            if (it == t.end())
                t.emplace(e, v);
            else
                it->second = f_.add(it->second, v);
        }
    return HomPoly(f_, degree_ + o.degree_, t);
}

HomPoly HomPoly::scaled(Elem s) const {
    std::map<Exponent, Elem> t;
    for (const auto& [e, c] : terms_) t[e] = f_.mul(c, s);
    return HomPoly(f_, degree_, t);
}

HomPoly HomPoly::partial(int var) const {
    if (var < 0 || var > 2) throw std::invalid_argument("variable index out of range");
    const auto v = static_cast<std::size_t>(var);
    std::map<Exponent, Elem> t;
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent d = e;
        --d[v];
        t[d] = f_.mul(c, f_.from_int(e[v]));
    }
    return HomPoly(f_, std::max(degree_ - 1, 0), t);
}

HomPoly HomPoly::substitute(const std::array<Triple, 3>& m) const {
    std::array<std::vector<HomPoly>, 3> powers;
    for (std::size_t i = 0; i < 3; ++i) {
        const HomPoly lin = linear_form(f_, Line{m[i]});
        powers[i].push_back(HomPoly(f_, 0, {{{0, 0, 0}, f_.one()}}));
        for (int k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * lin);
    }
    HomPoly out(f_, degree_);
    for (const auto& [e, c] : terms_) {
        const HomPoly term = (powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                              powers[2][static_cast<std::size_t>(e[2])])
                                 .scaled(c);
        out = out + term;
    }
    return out;
}

HomPoly linear_form(const Field& F, const Line& l) {
    return HomPoly(F, 1, {{{1, 0, 0}, l.c[0]}, {{0, 1, 0}, l.c[1]}, {{0, 0, 1}, l.c[2]}});
}

Elem eval(const HomPoly& P, const Triple& v) {
    const auto& F = P.field();
    std::array<std::array<Elem, kMaxCurveDegree + 1>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) {
        pw[i][0] = F.one();
        for (int k = 1; k <= P.degree(); ++k)
            pw[i][static_cast<std::size_t>(k)] = F.mul(pw[i][static_cast<std::size_t>(k - 1)], v[i]);
    }
    Elem acc = F.zero();
    for (const auto& [e, c] : P.terms()) {
        const Elem m = F.mul(pw[0][static_cast<std::size_t>(e[0])],
                             F.mul(pw[1][static_cast<std::size_t>(e[1])], pw[2][static_cast<std::size_t>(e[2])]));
        acc = F.add(acc, F.mul(c, m));
    }
    return acc;
}

Elem eval(const HomPoly& P, const Point& p) { return eval(P, p.c); }

std::vector<Point> rational_points(const HomPoly& P, const Plane& plane) {
    if (P.is_zero()) throw std::invalid_argument("zero polynomial does not define a curve");
    std::vector<Point> out;
    for (std::size_t i = 0; i < plane.num_points(); ++i) {
        const Point p = plane.point_at(i);
        if (eval(P, p).code == 0) out.push_back(p);
    }
    return out;
}

std::size_t count_rational_points(const HomPoly& P, const Plane& plane) {
    if (P.is_zero()) throw std::invalid_argument("zero polynomial does not define a curve");
    std::size_t n = 0;
    for (std::size_t i = 0; i < plane.num_points(); ++i)
        if (eval(P, plane.point_at(i)).code == 0) ++n;
    return n;
}

std::array<HomPoly, 3> partials(const HomPoly& P) { return {P.partial(0), P.partial(1), P.partial(2)}; }

bool is_singular_at(const HomPoly& P, const Point& p) {
    if (eval(P, p).code != 0) return false;
    for (const auto& d : partials(P))
        if (eval(d, p).code != 0) return false;
    return true;
}

std::vector<Point> singular_points(const HomPoly& P, const Plane& plane) {
    const auto d = partials(P);
    std::vector<Point> out;
    for (const auto& p : rational_points(P, plane))
        if (eval(d[0], p).code == 0 && eval(d[1], p).code == 0 && eval(d[2], p).code == 0) out.push_back(p);
    return out;
}

TangentCone tangent_cone(const HomPoly& P, const Point& p, const std::optional<Point>& direction) {
    if (P.is_zero()) throw std::invalid_argument("zero polynomial does not define a curve");
    if (eval(P, p).code != 0) throw std::invalid_argument("point is not on the curve");
    const HomPoly G = P.substitute(local_frame(P.field(), p, direction));
    int m = P.degree() + 1;
    for (const auto& [e, c] : G.terms()) m = std::min(m, e[0] + e[1]);
    TangentCone cone;
    cone.multiplicity = m;
    cone.form.assign(static_cast<std::size_t>(m + 1), P.field().zero());
    for (const auto& [e, c] : G.terms())
        if (e[0] + e[1] == m) cone.form[static_cast<std::size_t>(e[0])] = c;
    uni::trim(cone.form);
    return cone;
}

int multiplicity_at(const HomPoly& P, const Point& p) { return tangent_cone(P, p).multiplicity; }

int intersection_multiplicity(const HomPoly& P, const Point& U, const Point& V) {
    if (U == V) throw std::invalid_argument("intersection_multiplicity: points coincide");
    if (eval(P, U).code != 0) throw std::invalid_argument("intersection_multiplicity: point is not on the curve");
    const auto& F = P.field();
    std::array<std::vector<uni::Poly>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) {
        uni::Poly lin{U.c[i], V.c[i]};
        uni::trim(lin);
        pw[i].push_back({F.one()});
        for (int k = 1; k <= P.degree(); ++k) pw[i].push_back(uni::mul(F, pw[i].back(), lin));
    }
    uni::Poly h;
    for (const auto& [e, c] : P.terms()) {
        const uni::Poly t = uni::mul(F, uni::mul(F, pw[0][static_cast<std::size_t>(e[0])], pw[1][static_cast<std::size_t>(e[1])]),
                                     pw[2][static_cast<std::size_t>(e[2])]);
        h = uni::add(F, h, uni::scale(F, t, c));
    }
    if (uni::is_zero(h)) throw LineInCurveError("line is a component of the curve");
    return uni::order_at_zero(h);
}

bool is_ordinary(const HomPoly& P, const Point& p) {
    if (!is_singular_at(P, p)) throw std::invalid_argument("is_ordinary: point is not singular");
    const auto cone = tangent_cone(P, p);
    // Binary form sum c_i X^i Y^(m-i): Y divides it (m - deg) times.
    const int at_infinity = cone.multiplicity - uni::degree(cone.form);
    return at_infinity <= 1 && uni::is_squarefree(P.field(), cone.form);
}

int tangent_line_multiplicity(const HomPoly& P, const Point& p, const Point& q) {
    // In the frame with q at (0,1,0) the line pq is X = 0.
    return uni::order_at_zero(tangent_cone(P, p, q).form);
}

std::optional<HomPoly> divide_by_linear(const HomPoly& P, const Line& l) {
    const auto& F = P.field();
    int pivot = 2;
    while (pivot >= 0 && l.c[static_cast<std::size_t>(pivot)].code == 0) --pivot;
    if (pivot < 0) throw std::invalid_argument("zero linear form");
    const auto pv = static_cast<std::size_t>(pivot);
    const Elem lead_inv = F.inv(l.c[pv]);
    const HomPoly L = linear_form(F, l);

    HomPoly rem = P;
    std::map<Exponent, Elem> quot;
    for (;;) {
        // Term with the highest power of the pivot variable.
        const std::pair<const Exponent, Elem>* top = nullptr;
        for (const auto& t : rem.terms())
            if (t.first[pv] > 0 && (!top || t.first[pv] > top->first[pv])) top = &t;
        if (!top) break;
        Exponent e = top->first;
        --e[pv];
        const Elem c = F.mul(top->second, lead_inv);
        quot[e] = F.add(quot.count(e) ? quot[e] : F.zero(), c);
        rem = rem - L * HomPoly(F, P.degree() - 1, {{e, c}});
    }
    if (!rem.is_zero()) return std::nullopt;
    return HomPoly(F, P.degree() - 1, quot);
}

std::vector<Line> linear_components_through(const HomPoly& P, const Plane& plane, const Point& p) {
    std::vector<Line> out;
    for (const auto& l : plane.lines_through(p))
        if (divide_by_linear(P, l)) out.push_back(l);
    return out;
}

std::optional<bool> singularities_all_rational(const HomPoly& P) {
    const auto& F = P.field();
    const auto d = partials(P);
    // Chart Z = 1 (affine x, y), then chart X = 1 (affine y, z).  Only (0,1,0)
    // lies in neither, and it is rational.
    struct Chart {
        int a, b;
    };
    for (const Chart ch : {Chart{0, 1}, Chart{1, 2}}) {
        const auto& da = d[static_cast<std::size_t>(ch.a)];
        const auto& db = d[static_cast<std::size_t>(ch.b)];
        // Eliminate b: candidates for the a-coordinate; then the reverse.
        for (const auto& [outer, inner] : {std::pair{ch.b, ch.a}, std::pair{ch.a, ch.b}}) {
            const auto f = dehomogenize(P, outer, inner);
            const auto g1 = dehomogenize(da, outer, inner);
            const auto g2 = dehomogenize(db, outer, inner);
            const auto ok = inner_coordinates_rational(F, f, g1, g2);
            if (!ok) return std::nullopt;
            if (!*ok) return false;
        }
    }
    return true;
}

namespace {

GenusResult genus_from_singular(const HomPoly& P, const std::vector<Point>& singular) {
    long long delta = 0;
    for (const auto& s : singular) {
        if (!is_ordinary(P, s))
            return {std::nullopt, "non-ordinary singular point [" + std::to_string(s.c[0].code) + "," +
                                      std::to_string(s.c[1].code) + "," + std::to_string(s.c[2].code) + "]"};
        delta += binom2(multiplicity_at(P, s));
    }
    const auto rational = singularities_all_rational(P);
    if (!rational) return {std::nullopt, "elimination degenerate; non-rational singular points not excluded"};
    if (!*rational) return {std::nullopt, "possible singular points outside F_q"};
    const long long g = binom2(P.degree() - 1) - delta;
    if (g < 0) return {std::nullopt, "negative genus bookkeeping (curve is reducible)"};
    return {static_cast<int>(g), ""};
}

}  // namespace

GenusResult genus_ordinary(const HomPoly& P, const Plane& plane) {
    return genus_from_singular(P, singular_points(P, plane));
}

HasseWeilVerdict hasse_weil_check(std::uint64_t q, std::uint64_t points, int genus, int slack) {
    HasseWeilVerdict v;
    v.q = q;
    v.points = points;
    v.genus = genus;
    v.slack = slack;
    const double width = 2.0 * genus * std::sqrt(static_cast<double>(q)) + slack;
    v.lower = static_cast<double>(q + 1) - width;
    v.upper = static_cast<double>(q + 1) + width;
    const long long dev =
        std::llabs(static_cast<long long>(points) - static_cast<long long>(q + 1)) - static_cast<long long>(slack);
    v.holds = dev <= 0 || dev * dev <= 4LL * genus * genus * static_cast<long long>(q);
    return v;
}

HasseWeilVerdict hasse_weil_check(const HomPoly& P, const Plane& plane, int genus, std::optional<int> slack) {
    const int s = slack ? *slack : static_cast<int>(singular_points(P, plane).size());
    return hasse_weil_check(plane.field().q(), count_rational_points(P, plane), genus, s);
}

bool genus_one_bound_excludes(std::uint64_t q, std::uint64_t points) {
    const long long excess = static_cast<long long>(points) - static_cast<long long>(q + 1);
    return excess > 0 && excess * excess > 4LL * static_cast<long long>(q);
}

CurveReport analyze_curve(const HomPoly& P, const Plane& plane) {
    CurveReport r;
    r.q = plane.field().q();
    r.degree = P.degree();
    const auto pts = rational_points(P, plane);
    r.points = pts.size();
    const auto d = partials(P);
    std::vector<Point> singular;
    for (const auto& p : pts)
        if (eval(d[0], p).code == 0 && eval(d[1], p).code == 0 && eval(d[2], p).code == 0) singular.push_back(p);
    for (const auto& s : singular) r.singular.push_back({s, multiplicity_at(P, s), is_ordinary(P, s)});
    r.genus = genus_from_singular(P, singular);
    if (r.genus.genus)
        r.hasse_weil = hasse_weil_check(r.q, r.points, *r.genus.genus, static_cast<int>(r.singular.size()));
    return r;
}

HomPoly segre_curve(const Field& F, Elem a, Elem b, Elem c, Elem mu) {
    if (a.code == 0 || b.code == 0 || c.code == 0) throw std::invalid_argument("segre_curve: requires abc != 0");
    if (F.mul(a, b) == F.mul(c, c)) throw std::invalid_argument("segre_curve: (a,b,c) lies on the conic");
    if (F.classify(mu) != SquareClass::Nonsquare) throw std::invalid_argument("segre_curve: mu must be a nonsquare");
    return HomPoly(F, 4,
                   {{{2, 0, 2}, c},
                    {{0, 0, 4}, F.neg(b)},
                    {{2, 2, 0}, F.neg(F.mul(mu, a))},
                    {{0, 2, 2}, F.mul(mu, c)}});
}

HomPoly quartic_curve(const Field& F, Elem mu) {
    if (mu.code == 0) throw std::invalid_argument("quartic_curve: mu' must be nonzero");
    const Elem m = F.neg(mu);
    return HomPoly(F, 4, {{{2, 2, 0}, F.one()}, {{2, 0, 2}, m}, {{0, 2, 2}, m}});
}

}  // namespace arclab
