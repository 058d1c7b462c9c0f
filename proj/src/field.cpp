#include "arclab/field.hpp"

#include <numeric>
#include <stdexcept>

namespace arclab {

namespace {

using Digits = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Digits decode(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
    Digits d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

std::uint32_t encode(const Digits& d, std::uint32_t p) {
    std::uint32_t code = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
    return code;
}

// Remainder of a modulo monic m over GF(p); both low-to-high coefficient vectors.
Digits poly_rem(Digits a, const Digits& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i)
                a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        }
        a.pop_back();
    }
    return a;
}

bool divides(const Digits& m, const Digits& f, std::uint32_t p) {
    for (auto c : poly_rem(f, m, p))
        if (c != 0) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Digits& f, std::uint32_t p) {
    const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t deg = 1; deg <= k / 2; ++deg) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= p;
        for (std::uint32_t code = 0; code < count; ++code) {
            Digits m = decode(code, p, deg);
            m.push_back(1);
            if (divides(m, f, p)) return false;
        }
    }
    return true;
}

Digits smallest_irreducible(std::uint32_t p, std::uint32_t k, std::uint32_t q) {
    if (k == 1) return {0, 1};
    for (std::uint32_t code = 0; code < q; ++code) {
        Digits f = decode(code, p, k);
        f.push_back(1);
        if (f[0] != 0 && is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

namespace detail {

struct FieldTables {
    std::uint32_t q = 0, p = 0, k = 0;
    Digits modulus;
    Elem generator;
    std::uint32_t first_nonsquare = 0;
    std::vector<std::uint32_t> exp;   // length 2(q-1): exp[i] = g^i
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::int64_t> zech;   // zech[n] = log(1 + g^n), -1 when 1 + g^n = 0
    std::vector<std::uint8_t> square; // nonzero squares

    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return (a + b) % p;
        std::uint32_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return out;
    }

    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        const Digits da = decode(a, p, k), db = decode(b, p, k);
        Digits prod(2 * k - 1, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        return encode(poly_rem(prod, modulus, p), p);
    }
};

}  // namespace detail

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint32_t q) {
    if (q < 2) return std::nullopt;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1 || !is_prime(p)) return std::nullopt;
    return std::pair{p, k};
}

std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = std::max<std::uint32_t>(lo, 3); q <= hi; ++q)
        if (q % 2 == 1 && prime_power_decomposition(q)) out.push_back(q);
    return out;
}

std::string to_string(SquareClass c) {
    switch (c) {
        case SquareClass::Zero: return "ZERO";
        case SquareClass::Square: return "SQUARE";
        case SquareClass::Nonsquare: return "NONSQUARE";
        case SquareClass::InfinityNonsquare: return "INFINITY_NONSQUARE";
    }
    return "?";
}

Field::Field(std::uint32_t q) {
    if (q % 2 == 0) throw std::invalid_argument("field order must be odd, got " + std::to_string(q));
    if (q < 3 || q > kMaxFieldOrder)
        throw std::invalid_argument("field order out of range [3, " + std::to_string(kMaxFieldOrder) +
                                    "]: " + std::to_string(q));
    const auto pk = prime_power_decomposition(q);
    if (!pk) throw std::invalid_argument("field order is not a prime power: " + std::to_string(q));

    auto t = std::make_shared<detail::FieldTables>();
    t->q = q;
    t->p = pk->first;
    t->k = pk->second;
    t->modulus = smallest_irreducible(t->p, t->k, q);

    const std::uint32_t order = q - 1;
    // Smallest generator by direct order computation.
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t x = g, n = 1;
        while (x != 1) {
            x = t->slow_mul(x, g);
            ++n;
        }
        if (n == order) {
            t->generator = Elem{g};
            break;
        }
    }

    t->exp.resize(2 * order);
    t->log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        t->exp[i] = t->exp[i + order] = x;
        t->log[x] = i;
        x = t->slow_mul(x, t->generator.code);
    }

    t->zech.resize(order);
    for (std::uint32_t n = 0; n < order; ++n) {
        const std::uint32_t s = t->slow_add(1, t->exp[n]);
        t->zech[n] = s == 0 ? -1 : static_cast<std::int64_t>(t->log[s]);
    }

    t->square.assign(q, 0);
    for (std::uint32_t i = 0; i < order; i += 2) t->square[t->exp[i]] = 1;
    for (std::uint32_t c = 1; c < q; ++c) {
        if (!t->square[c]) {
            t->first_nonsquare = c;
            break;
        }
    }
    t_ = std::move(t);
}

std::uint32_t Field::q() const { return t_->q; }
std::uint32_t Field::p() const { return t_->p; }
std::uint32_t Field::k() const { return t_->k; }
const std::vector<std::uint32_t>& Field::modulus() const { return t_->modulus; }

Elem Field::from_int(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(t_->p);
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem Field::element(std::uint32_t code) const {
    if (code >= t_->q)
        throw std::out_of_range("element code " + std::to_string(code) + " out of range for q=" +
                                std::to_string(t_->q));
    return Elem{code};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return decode(a.code, t_->p, t_->k); }

Elem Field::add(Elem a, Elem b) const {
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    if (t_->k == 1) return Elem{(a.code + b.code) % t_->p};
    const std::uint32_t order = t_->q - 1;
    const std::uint32_t la = t_->log[a.code];
    const std::uint32_t lb = t_->log[b.code];
    const std::uint32_t n = lb >= la ? lb - la : lb + order - la;
    const std::int64_t z = t_->zech[n];
    if (z < 0) return Elem{0};
    return Elem{t_->exp[la + static_cast<std::uint32_t>(z)]};
}

Elem Field::neg(Elem a) const {
    if (a.code == 0) return a;
    if (t_->k == 1) return Elem{t_->p - a.code};
    return Elem{t_->exp[t_->log[a.code] + (t_->q - 1) / 2]};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return Elem{0};
    return Elem{t_->exp[t_->log[a.code] + t_->log[b.code]]};
}

Elem Field::inv(Elem a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = t_->log[a.code];
    return Elem{t_->exp[l == 0 ? 0 : (t_->q - 1) - l]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    const std::uint64_t order = t_->q - 1;
    return Elem{t_->exp[(t_->log[a.code] * (e % order)) % order]};
}

bool Field::is_nonzero_square(Elem a) const { return t_->square[a.code] != 0; }

bool Field::is_fourth_power(Elem a) const {
    if (a.code == 0) throw std::domain_error("fourth-power test of zero");
    const std::uint32_t g = std::gcd(4u, t_->q - 1);
    return t_->log[a.code] % g == 0;
}

Elem Field::primitive_element() const { return t_->generator; }

std::uint32_t Field::log(Elem a) const {
    if (a.code == 0) throw std::domain_error("log of zero");
    return t_->log[a.code];
}

std::optional<Elem> Field::sqrt(Elem a) const {
    if (a.code == 0) return zero();
    const std::uint32_t l = t_->log[a.code];
    if (l % 2 != 0) return std::nullopt;
    return Elem{t_->exp[l / 2]};
}

SquareClass Field::classify(Elem a) const {
    if (a.code == 0) return SquareClass::Zero;
    return is_nonzero_square(a) ? SquareClass::Square : SquareClass::Nonsquare;
}

SquareClass Field::classify(const ExtParam& a) const {
    if (a.is_infinity()) return SquareClass::InfinityNonsquare;
    return classify(a.value());
}

Elem Field::first_nonsquare() const { return Elem{t_->first_nonsquare}; }

}  // namespace arclab
