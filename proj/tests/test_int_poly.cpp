#include "doctest.h"

#include <cmath>
#include <complex>

#include "specto/int_poly.hpp"
#include "specto/rng.hpp"

using namespace specto;

namespace {

IntPoly poly(std::initializer_list<long> coeffs_constant_first) {
    std::vector<Int> c;
    for (long v : coeffs_constant_first) c.emplace_back(v);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("cyclotomic small cases") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(4) == poly({1, 0, 1}));

    // Phi_12 by dividing x^12-1 through the lower cyclotomics by hand
    IntPoly x12m1 = IntPoly::x_power(12) - IntPoly::constant(1);
    IntPoly expected = x12m1;
    for (int d : {1, 2, 3, 4, 6}) {
        auto q = divide_exact(expected, cyclotomic(d));
        REQUIRE(q.has_value());
        expected = *q;
    }
    CHECK(expected == poly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(12) == expected);
}

TEST_CASE("cyclotomic product identity up to 30") {
    for (int n = 1; n <= 30; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == IntPoly::x_power(n) - IntPoly::constant(1));
    }
}

TEST_CASE("has_unit_root") {
    CHECK_FALSE(has_unit_root(poly({-1, -1, 1})).has_value()); // x^2-x-1
    auto k4 = has_unit_root(poly({1, 0, 1}));                  // x^2+1
    REQUIRE(k4.has_value());
    CHECK(*k4 == 4);
    // (x-1)(x-3) = x^2-4x+3
    auto k1 = has_unit_root(poly({3, -4, 1}));
    REQUIRE(k1.has_value());
    CHECK(*k1 == 1);
}

TEST_CASE("polynomial gcd and squarefree part") {
    IntPoly p = poly({-1, -1, 1});                 // x^2-x-1
    IntPoly sq = p * p * poly({-3, 1});            // (x^2-x-1)^2 (x-3)
    CHECK(squarefree_part(sq) == p * poly({-3, 1}));
    CHECK(poly_gcd(sq, derivative(sq)) == p);
}

TEST_CASE("unit_ratio_orders basics") {
    // x^2-1: roots 1,-1, ratio -1 has order 2
    auto orders = unit_ratio_orders(poly({-1, 0, 1}));
    REQUIRE(orders.size() == 1);
    CHECK(orders[0] == 2);

    // x^2-x-1: the ratio -phi^2 is off the unit circle
    CHECK(unit_ratio_orders(poly({-1, -1, 1})).empty());

    // (x-2)^2: squarefree part has a single root
    CHECK(unit_ratio_orders(poly({4, -4, 1})).empty());

    // x^2+1: roots +/-i, ratio -1
    orders = unit_ratio_orders(poly({1, 0, 1}));
    REQUIRE(orders.size() == 1);
    CHECK(orders[0] == 2);

    // (x^2-2)(x^2+2): ratios include +/-i (order 4) and -1 (order 2)
    orders = unit_ratio_orders(poly({-4, 0, 0, 0, 1}));
    CHECK(orders == std::vector<int>{2, 4});
}

TEST_CASE("roots_numeric golden ratio against the quadratic formula") {
    long double s5 = std::sqrt(5.0L);
    long double phi = (1 + s5) / 2, psi = (1 - s5) / 2;
    RootSet rs = roots_numeric(poly({-1, -1, 1}));
    REQUIRE(rs.boxes.size() == 2);
    // sorted by modulus descending
    CHECK(std::abs(rs.boxes[0].center - std::complex<long double>(phi, 0)) < 1e-10L);
    CHECK(std::abs(rs.boxes[1].center - std::complex<long double>(psi, 0)) < 1e-10L);
    CHECK(rs.perron == 0);
}

TEST_CASE("roots_numeric exact rational root") {
    RootSet rs = roots_numeric(poly({-3, 1}));
    REQUIRE(rs.boxes.size() == 1);
    CHECK(rs.boxes[0].exact);
    CHECK(rs.boxes[0].radius == 0);
    CHECK(rs.boxes[0].center.real() == 3.0L);
    CHECK(rs.perron == 0);
}

TEST_CASE("roots_numeric char poly of S_zeta_3 straddles the paper's windows") {
    // char poly of [[3,1,1],[1,6,1],[1,1,2]] by cofactor expansion:
    // (x-3)(x^2-8x+9) = x^3 - 11x^2 + 33x - 27
    IntPoly p = poly({-27, 33, -11, 1});
    CHECK(eval(p, Int(3)) == 0);
    RootSet rs = roots_numeric(p);
    REQUIRE(rs.boxes.size() == 3);
    CHECK(rs.boxes[0].center.real() > 6);
    CHECK(rs.boxes[0].center.real() < 7);
    CHECK(rs.perron == 0);
    bool saw_exact_3 = false, saw_13 = false;
    for (const auto& b : rs.boxes) {
        if (b.exact && b.center.real() == 3.0L) saw_exact_3 = true;
        if (!b.exact && b.center.real() > 1 && b.center.real() < 2) saw_13 = true;
    }
    CHECK(saw_exact_3);
    CHECK(saw_13);
}

TEST_CASE("roots_numeric invariants: root sums and products on random polynomials") {
    CounterRng rng(20260810, 7);
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Int> c;
        int deg = 2 + static_cast<int>(rng.word(ctr++) % 5);
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng.word(ctr++) % 9) - 4);
        c.emplace_back(1); // monic
        IntPoly p(std::move(c));
        p = squarefree_part(p);
        if (p.degree() < 1) continue;
        RootSet rs = roots_numeric(p, 1e-7L);
        std::complex<long double> sum = 0, prod = 1;
        for (const auto& b : rs.boxes) {
            sum += b.center;
            prod *= b.center;
        }
        long double d = static_cast<long double>(p.degree());
        long double expected_sum = -static_cast<long double>(p.coeff(p.degree() - 1).get_d());
        long double expected_prod =
            static_cast<long double>(p.coeff(0).get_d()) * (static_cast<int>(d) % 2 == 0 ? 1 : -1);
        CHECK(std::abs(sum - expected_sum) < 1e-8L);
        CHECK(std::abs(prod - expected_prod) < 1e-8L * (1 + std::abs(expected_prod)));
    }
}

TEST_CASE("minimal_poly_of_root") {
    IntPoly fib = poly({-1, -1, 1});
    IntPoly p = fib * poly({-3, 1});

    SUBCASE("golden-ratio box recovers the quadratic factor") {
        RootSet rs = roots_numeric(p);
        int idx = -1;
        for (std::size_t i = 0; i < rs.boxes.size(); ++i)
            if (!rs.boxes[i].exact && rs.boxes[i].center.real() > 1 && rs.boxes[i].center.real() < 2)
                idx = static_cast<int>(i);
        REQUIRE(idx >= 0);
        IntPoly mp = minimal_poly_of_root(p, rs.boxes[static_cast<std::size_t>(idx)]);
        CHECK(mp == fib);
        CHECK(divides(mp, p));
        CHECK(std::abs(eval(mp, rs.boxes[static_cast<std::size_t>(idx)].center)) < 1e-8L);
    }

    SUBCASE("irreducible input returns itself") {
        RootSet rs = roots_numeric(fib);
        CHECK(minimal_poly_of_root(fib, rs.boxes[0]) == fib);
    }

    SUBCASE("S_zeta_3 char poly splits off the rational eigenvalue") {
        IntPoly cp = poly({-27, 33, -11, 1});
        auto quot = divide_exact(cp, poly({-3, 1}));
        REQUIRE(quot.has_value()); // (x-3)(x^2-8x+9) = x^3-11x^2+33x-27
        CHECK(*quot == poly({9, -8, 1}));
        RootSet rs = roots_numeric(cp);
        REQUIRE(rs.perron == 0);
        IntPoly mp = minimal_poly_of_root(cp, rs.boxes[0]);
        CHECK(mp == *quot);
    }
}
