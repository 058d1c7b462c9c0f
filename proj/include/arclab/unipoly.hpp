#pragma once

// Dense univariate polynomials over F_q, coefficients low to high.  The zero
// polynomial is the empty vector; all results are trimmed.

#include <vector>

#include "arclab/field.hpp"

namespace arclab::uni {

using Poly = std::vector<Elem>;

void trim(Poly& a);
/// -1 for the zero polynomial.
int degree(const Poly& a);
bool is_zero(const Poly& a);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem s);
/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
/// Quotient of an exact division; throws std::logic_error if b does not divide a.
Poly exact_div(const Field& F, const Poly& a, const Poly& b);
/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Field& F, Poly a, Poly b);
Poly derivative(const Field& F, const Poly& a);
Elem eval(const Field& F, const Poly& a, Elem x);

/// Order of vanishing at 0; -1 for the zero polynomial.
int order_at_zero(const Poly& a);
/// Multiplicity of r as a root (0 if not a root); a must be nonzero.
int root_multiplicity(const Field& F, Poly a, Elem r);
/// Squarefree over the algebraic closure (constant polynomials are).
bool is_squarefree(const Field& F, const Poly& a);
/// Divides out every root lying in F_q; the cofactor has no roots in F_q.
Poly strip_rational_roots(const Field& F, Poly a, std::vector<Elem>* roots = nullptr);

/// Determinant of a square matrix over F_q[x] by fraction-free elimination.
Poly determinant(const Field& F, std::vector<std::vector<Poly>> m);

/// Resultant of two polynomials whose coefficients are themselves polynomials
/// (a[i] is the coefficient of y^i).  Zero if either input is zero or both are
/// constant in y.
Poly resultant(const Field& F, const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace arclab::uni
