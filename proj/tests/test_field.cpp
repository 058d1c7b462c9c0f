#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "arclab/field.hpp"
#include "oracle.hpp"

using namespace arclab;

namespace {

// Monic quadratics over GF(3) in encoding order; first one without a root.
std::vector<std::uint32_t> smallest_irreducible_quadratic_mod3() {
    for (std::uint32_t code = 0; code < 9; ++code) {
        const std::uint32_t c0 = code % 3, c1 = code / 3;
        bool has_root = false;
        for (std::uint32_t x = 0; x < 3; ++x)
            if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
        if (!has_root) return {c0, c1, 1};
    }
    return {};
}

std::uint32_t naive_order(const Field& F, std::uint32_t g) {
    std::uint32_t x = g, n = 1;
    while (x != 1) {
        x = oracle::mul(F, x, g);
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("make_field decomposes q and picks the smallest irreducible modulus") {
    const Field f7(7);
    CHECK(f7.p() == 7);
    CHECK(f7.k() == 1);

    const Field f9(9);
    CHECK(f9.p() == 3);
    CHECK(f9.k() == 2);
    const auto expected = smallest_irreducible_quadratic_mod3();
    CHECK(f9.modulus() == expected);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1

    const Field again(9);
    CHECK(again.modulus() == f9.modulus());
    CHECK(again.primitive_element() == f9.primitive_element());
}

TEST_CASE("make_field rejects bad orders") {
    CHECK_THROWS_AS(Field(8), std::invalid_argument);
    CHECK_THROWS_AS(Field(1), std::invalid_argument);
    CHECK_THROWS_AS(Field(0), std::invalid_argument);
    CHECK_THROWS_AS(Field(2), std::invalid_argument);
    CHECK_THROWS_AS(Field(15), std::invalid_argument);
    CHECK_THROWS_AS(Field(45), std::invalid_argument);
    CHECK_THROWS_AS(Field(16411), std::invalid_argument);  // prime above the ceiling
    CHECK_NOTHROW(Field(16381));
    CHECK_NOTHROW(Field(15625));  // 5^6
}

TEST_CASE("basic arithmetic examples") {
    const Field f7(7);
    const Elem three = f7.element(3);
    CHECK(f7.inv(three) == f7.element(5));
    CHECK(f7.mul(three, f7.element(5)) == f7.one());
    CHECK_THROWS_AS(f7.inv(f7.zero()), std::domain_error);

    const Field f9(9);
    const Elem x = f9.element(3);  // the class of x
    CHECK(f9.mul(x, x) == f9.element(2));
    CHECK(f9.mul(x, x) == f9.neg(f9.one()));

    for (std::uint32_t q : {3u, 7u, 9u, 25u, 27u, 121u, 199u}) {
        const Field F(q);
        CHECK(F.pow(F.primitive_element(), q - 1) == F.one());
        CHECK(F.pow(F.element(q - 1), 0) == F.one());
        CHECK(F.pow(F.zero(), 0) == F.one());
    }
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic") {
    for (std::uint32_t q : {9u, 25u, 27u, 49u, 81u, 125u, 243u, 343u}) {
        const Field F(q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; b += (q > 100 ? 7 : 1)) {
                CHECK(F.add(Elem{a}, Elem{b}).code == oracle::add(F, a, b));
                CHECK(F.mul(Elem{a}, Elem{b}).code == oracle::mul(F, a, b));
            }
    }
}

TEST_CASE("square classification") {
    const Field f7(7);
    CHECK(f7.is_nonzero_square(f7.element(2)));
    CHECK_FALSE(f7.is_nonzero_square(f7.element(3)));
    CHECK_FALSE(f7.is_nonzero_square(f7.zero()));
    const auto sq = oracle::square_table(f7);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(f7.is_nonzero_square(Elem{a}) == sq[a]);
    CHECK(sq[1]);
    CHECK(sq[2]);
    CHECK(sq[4]);

    CHECK(f7.classify(ExtParam::infinity()) == SquareClass::InfinityNonsquare);
    CHECK(f7.classify(ExtParam{f7.element(4)}) == SquareClass::Square);
    CHECK(f7.classify(ExtParam{f7.zero()}) == SquareClass::Zero);
    CHECK(f7.classify(f7.element(3)) == SquareClass::Nonsquare);
}

TEST_CASE("fourth powers") {
    const Field f13(13);
    std::set<std::uint32_t> fourth;
    for (std::uint32_t u = 1; u < 13; ++u) fourth.insert(static_cast<std::uint32_t>((u * u * u * u) % 13));
    CHECK(fourth == std::set<std::uint32_t>{1, 3, 9});
    CHECK(f13.is_fourth_power(f13.element(3)));
    CHECK_FALSE(f13.is_fourth_power(f13.element(2)));
    CHECK(f13.is_fourth_power(f13.one()));
    CHECK_THROWS_AS(f13.is_fourth_power(f13.zero()), std::domain_error);
    for (std::uint32_t a = 1; a < 13; ++a) CHECK(f13.is_fourth_power(Elem{a}) == (fourth.count(a) == 1));

    for (std::uint32_t q : {3u, 7u, 11u, 19u, 23u, 27u, 31u}) {
        const Field F(q);
        for (std::uint32_t a = 1; a < q; ++a) CHECK(F.is_fourth_power(Elem{a}) == F.is_nonzero_square(Elem{a}));
    }
}

TEST_CASE("primitive element is the smallest generator") {
    CHECK(Field(7).primitive_element() == Elem{3});
    CHECK(Field(9).primitive_element() == Elem{4});  // x + 1
    CHECK(Field(3).primitive_element() == Elem{2});
    for (std::uint32_t q : {5u, 9u, 13u, 25u, 27u, 49u}) {
        const Field F(q);
        std::uint32_t smallest = 0;
        for (std::uint32_t g = 2; g < q; ++g)
            if (naive_order(F, g) == q - 1) {
                smallest = g;
                break;
            }
        CHECK(F.primitive_element().code == smallest);
    }
}

TEST_CASE("field properties over every odd prime power up to 199") {
    for (std::uint32_t q : odd_prime_powers(3, 199)) {
        CAPTURE(q);
        const Field F(q);
        const auto sq = oracle::square_table(F);
        std::size_t squares = 0;
        std::set<std::uint32_t> fourth;
        for (std::uint32_t a = 1; a < q; ++a) {
            const Elem e{a};
            CHECK(F.mul(F.inv(e), e) == F.one());
            CHECK(F.is_nonzero_square(e) == sq[a]);
            CHECK(F.is_nonzero_square(e) == (F.pow(e, (q - 1) / 2) == F.one()));
            if (F.is_nonzero_square(e)) ++squares;
            fourth.insert(F.pow(e, 4).code);
        }
        CHECK(squares == (q - 1) / 2);
        CHECK(fourth.size() == (q - 1) / std::gcd(4u, q - 1));
    }
}

TEST_CASE("every nonsquare is a sum of two nonzero squares") {
    for (std::uint32_t q : odd_prime_powers(3, 199)) {
        CAPTURE(q);
        const Field F(q);
        std::vector<Elem> squares;
        for (std::uint32_t a = 1; a < q; ++a)
            if (F.is_nonzero_square(Elem{a})) squares.push_back(Elem{a});
        std::set<std::uint32_t> sums;
        for (auto s : squares)
            for (auto t : squares) sums.insert(F.add(s, t).code);
        for (std::uint32_t a = 1; a < q; ++a)
            if (!F.is_nonzero_square(Elem{a})) CHECK(sums.count(a) == 1);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    for (std::uint32_t q : {9u, 27u, 81u, 169u, 625u, 2187u, 16381u}) {
        const Field F(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int i = 0; i < 300; ++i) {
            const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.sub(F.add(a, b), b) == a);
            CHECK(F.add(a, F.neg(a)) == F.zero());
        }
    }
}

TEST_CASE("sqrt and log") {
    const Field F(27);
    for (std::uint32_t a = 0; a < 27; ++a) {
        const auto r = F.sqrt(Elem{a});
        CHECK(r.has_value() == (a == 0 || F.is_nonzero_square(Elem{a})));
        if (r) CHECK(F.mul(*r, *r) == Elem{a});
        if (a != 0) CHECK(F.pow(F.primitive_element(), F.log(Elem{a})) == Elem{a});
    }
    CHECK(F.first_nonsquare() == Elem{2});
    CHECK(Field(13).first_nonsquare() == Elem{2});
    CHECK(Field(17).first_nonsquare() == Elem{3});
}

TEST_CASE("odd prime powers") {
    CHECK(odd_prime_powers(3, 30) == std::vector<std::uint32_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
    CHECK(prime_power_decomposition(243) == std::pair<std::uint32_t, std::uint32_t>{3, 5});
    CHECK_FALSE(prime_power_decomposition(21).has_value());
}
