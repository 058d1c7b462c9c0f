#pragma once

// Finite fields GF(p^k) for odd p, table driven.
//
// Elements are identified by their canonical encoding e = sum a_i p^i, where
// a_i is the coefficient of x^i in the polynomial representative modulo the
// field's defining polynomial.  The defining polynomial is the smallest monic
// irreducible of degree k under the same encoding of its non-leading
// coefficients, so a given q always produces the same field.
//
// Multiplication and addition go through discrete log / Zech log tables built
// once per field; a Field is a cheap handle onto those shared tables.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace arclab {

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 14;

struct Elem {
    std::uint32_t code = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t c) : code(c) {}

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class SquareClass { Zero, Square, Nonsquare, InfinityNonsquare };

std::string to_string(SquareClass c);

/// A point of the projective line F_q ∪ {∞}.
class ExtParam {
public:
    constexpr ExtParam() = default;
    constexpr ExtParam(Elem e) : value_(e) {}  // NOLINT: implicit by intent
    static constexpr ExtParam infinity() {
        ExtParam p;
        p.infinite_ = true;
        return p;
    }

    constexpr bool is_infinity() const { return infinite_; }
    /// Precondition: !is_infinity().
    constexpr Elem value() const { return value_; }

    friend constexpr bool operator==(const ExtParam&, const ExtParam&) = default;

private:
    Elem value_{};
    bool infinite_ = false;
};

namespace detail {
struct FieldTables;
}

class Field {
public:
    /// Throws std::invalid_argument unless q is an odd prime power in [3, kMaxFieldOrder].
    explicit Field(std::uint32_t q);

    std::uint32_t q() const;
    std::uint32_t p() const;
    std::uint32_t k() const;
    /// Coefficients c_0..c_{k-1}, 1 of the defining polynomial.
    const std::vector<std::uint32_t>& modulus() const;

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// Image of an integer under Z -> F_p ⊆ F_q.
    Elem from_int(std::int64_t n) const;
    /// Validates an encoded element; throws std::out_of_range if code >= q.
    Elem element(std::uint32_t code) const;
    /// Polynomial coefficients a_0..a_{k-1} of an element.
    std::vector<std::uint32_t> coeffs(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// True iff a != 0 and a is a square.
    bool is_nonzero_square(Elem a) const;
    /// True iff a = u^4 for some u != 0.  Throws std::domain_error on zero.
    bool is_fourth_power(Elem a) const;
    /// Smallest encoded generator of the multiplicative group.
    Elem primitive_element() const;
    /// Discrete log base primitive_element(); a must be nonzero.
    std::uint32_t log(Elem a) const;
    /// Some square root of a, if it has one in F_q (0 for 0).
    std::optional<Elem> sqrt(Elem a) const;

    SquareClass classify(Elem a) const;
    SquareClass classify(const ExtParam& a) const;

    /// Smallest encoded nonsquare.
    Elem first_nonsquare() const;

    friend bool operator==(const Field& a, const Field& b) { return a.q() == b.q(); }

private:
    std::shared_ptr<const detail::FieldTables> t_;
};

/// (p, k) with q = p^k, or nullopt when q is not a prime power (q >= 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint32_t q);

/// Odd prime powers in [lo, hi], ascending.
std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi);

}  // namespace arclab
