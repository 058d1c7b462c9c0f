#pragma once

// Plane projective curves Z(F) over F_q: rational points, singular points,
// multiplicities, tangent cones, genus bookkeeping for curves whose
// singularities are all ordinary, and Hasse-Weil interval checks.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arclab/field.hpp"
#include "arclab/plane.hpp"
#include "arclab/unipoly.hpp"

namespace arclab {

using Exponent = std::array<int, 3>;

inline constexpr int kMaxCurveDegree = 32;

/// Homogeneous polynomial in X, Y, Z with sparse coefficients.  The zero
/// polynomial of a given degree is representable (partial derivatives can
/// vanish); curve-level operations reject it.
class HomPoly {
public:
    /// Throws std::invalid_argument if a monomial has the wrong total degree
    /// or a negative exponent.  Zero coefficients are dropped.
    HomPoly(Field field, int degree, const std::map<Exponent, Elem>& terms = {});

    const Field& field() const { return f_; }
    int degree() const { return degree_; }
    const std::map<Exponent, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Elem coeff(const Exponent& e) const;

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(Elem s) const;

    /// d/dX, d/dY, d/dZ.
    HomPoly partial(int var) const;
    /// F(M v): variable i is replaced by sum_j m[i][j] * var_j.
    HomPoly substitute(const std::array<Triple, 3>& m) const;

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    Field f_;
    int degree_;
    std::map<Exponent, Elem> terms_;
};

/// Linear form uX + vY + wZ.
HomPoly linear_form(const Field& F, const Line& l);

class LineInCurveError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Elem eval(const HomPoly& F, const Triple& v);
Elem eval(const HomPoly& F, const Point& p);
std::vector<Point> rational_points(const HomPoly& F, const Plane& plane);
std::size_t count_rational_points(const HomPoly& F, const Plane& plane);

std::array<HomPoly, 3> partials(const HomPoly& F);
bool is_singular_at(const HomPoly& F, const Point& p);
/// Rational points where F and all three partials vanish, in enumeration order.
std::vector<Point> singular_points(const HomPoly& F, const Plane& plane);

/// Multiplicity of a point on the curve; throws std::invalid_argument if p is not on it.
int multiplicity_at(const HomPoly& F, const Point& p);

/// Order of vanishing of t ↦ F(U + tV) at t = 0.  Throws
/// std::invalid_argument if U is not on the curve or U == V, and
/// LineInCurveError if the line UV is a component.
int intersection_multiplicity(const HomPoly& F, const Point& U, const Point& V);

/// Lowest-degree form of F at p, as coefficients c_i of X^i Y^(m-i) in local
/// coordinates where p is the origin and `direction` (if given) spans the
/// line X = 0.
struct TangentCone {
    int multiplicity = 0;
    uni::Poly form;
};
TangentCone tangent_cone(const HomPoly& F, const Point& p, const std::optional<Point>& direction = std::nullopt);

/// m distinct tangents over the algebraic closure.  Throws
/// std::invalid_argument if p is not a singular point.
bool is_ordinary(const HomPoly& F, const Point& p);

/// How many times the line through p and q occurs among the tangents at p.
int tangent_line_multiplicity(const HomPoly& F, const Point& p, const Point& q);

/// Quotient of F by a linear form, if it divides exactly.
std::optional<HomPoly> divide_by_linear(const HomPoly& F, const Line& l);
/// Rational lines through p that are components of the curve.
std::vector<Line> linear_components_through(const HomPoly& F, const Plane& plane, const Point& p);

/// Whether every singular point over the algebraic closure is rational,
/// decided by resultant elimination in two affine charts.  nullopt when the
/// elimination degenerates.
std::optional<bool> singularities_all_rational(const HomPoly& F);

struct GenusResult {
    std::optional<int> genus;
    std::string reason;  // empty when genus is set
};

/// C(d-1, 2) - sum C(m_P, 2), when every singular point is rational and ordinary.
GenusResult genus_ordinary(const HomPoly& F, const Plane& plane);

struct HasseWeilVerdict {
    std::uint64_t q = 0;
    std::uint64_t points = 0;
    int genus = 0;
    int slack = 0;
    double lower = 0;
    double upper = 0;
    bool holds = false;
};

/// q+1 - 2g√q - slack <= N <= q+1 + 2g√q + slack, decided in exact integers.
HasseWeilVerdict hasse_weil_check(std::uint64_t q, std::uint64_t points, int genus, int slack);
/// Same, counting the points of F; slack defaults to the number of rational singular points.
HasseWeilVerdict hasse_weil_check(const HomPoly& F, const Plane& plane, int genus, std::optional<int> slack = std::nullopt);

/// 2q - 6 > q + 1 + 2√q: a genus-one curve cannot carry 2q - 6 rational points.
bool genus_one_bound_excludes(std::uint64_t q, std::uint64_t points);

struct SingularPointInfo {
    Point point;
    int multiplicity = 0;
    bool ordinary = false;
};

struct CurveReport {
    std::uint32_t q = 0;
    int degree = 0;
    std::size_t points = 0;
    std::vector<SingularPointInfo> singular;
    GenusResult genus;
    std::optional<HasseWeilVerdict> hasse_weil;
};

CurveReport analyze_curve(const HomPoly& F, const Plane& plane);

/// (cX^2 - bZ^2)Z^2 - mu Y^2 (aX^2 - cZ^2).  Requires abc != 0, ab != c^2 and
/// mu a nonsquare; throws std::invalid_argument otherwise.
HomPoly segre_curve(const Field& F, Elem a, Elem b, Elem c, Elem mu);
/// X^2Y^2 - mu' Z^2 (X^2 + Y^2), mu' != 0.
HomPoly quartic_curve(const Field& F, Elem mu);

}  // namespace arclab
