#include "doctest.h"

#include <cmath>

#include "specto/cocycle.hpp"
#include "specto/rng.hpp"

using namespace specto;

namespace {

double mat_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.a.size(); ++i) d = std::max(d, std::abs(a.a[i] - b.a[i]));
    return d;
}

ComplexMatrix from_int(const IntMatrix& m) {
    ComplexMatrix c(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) c.at(i, j) = m.at(i, j).get_d();
    return c;
}

std::vector<double> advance(const IntMatrix& e, std::vector<double> x, int steps) {
    for (int s = 0; s < steps; ++s) {
        std::vector<double> next(x.size(), 0.0);
        for (int i = 0; i < e.dim; ++i) {
            double acc = 0;
            for (int j = 0; j < e.dim; ++j) acc += e.at(i, j).get_d() * x[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = acc - std::floor(acc);
        }
        x = std::move(next);
    }
    return x;
}

} // namespace

TEST_CASE("symbol of the worked three-letter example") {
    // 0 -> 012, 1 -> 202, 2 -> 111
    Substitution z = substitution_from_strings({"012", "202", "111"});
    SymbolMatrix sym = build_symbol(z);

    // entry (1,2): occurrences of 2 in 202 at positions 1 and 3, prefixes
    // empty and "20"
    const auto& e12 = sym.entry(1, 2);
    REQUIRE(e12.size() == 2);
    CHECK(e12[0].freq == std::vector<long>{0, 0, 0});
    CHECK(e12[1].freq == std::vector<long>{1, 0, 1});

    // entry (2,1): 1 + e(xi_1) + e(2 xi_1)
    const auto& e21 = sym.entry(2, 1);
    REQUIRE(e21.size() == 3);
    CHECK(e21[0].freq == std::vector<long>{0, 0, 0});
    CHECK(e21[1].freq == std::vector<long>{0, 1, 0});
    CHECK(e21[2].freq == std::vector<long>{0, 2, 0});

    CHECK(sym.entry(1, 1).empty());
    CHECK(sym.entry(2, 0).empty());
    CHECK(sym.entry(2, 2).empty());

    for (int b = 0; b < 3; ++b)
        CHECK(sym.row_weight(b) == static_cast<long>(z.rules[static_cast<std::size_t>(b)].size()));
}

TEST_CASE("Fibonacci symbol and evaluation at zero") {
    Substitution fib = substitution_from_strings({"01", "0"});
    SymbolMatrix sym = build_symbol(fib);
    REQUIRE(sym.entry(0, 0).size() == 1);
    REQUIRE(sym.entry(0, 1).size() == 1);
    CHECK(sym.entry(0, 1)[0].freq == std::vector<long>{1, 0});
    REQUIRE(sym.entry(1, 0).size() == 1);
    CHECK(sym.entry(1, 1).empty());

    ComplexMatrix at_zero = evaluate(sym, {0.0, 0.0});
    CHECK(mat_dist(at_zero, from_int(substitution_matrix(fib).transposed())) < 1e-12);
}

TEST_CASE("evaluation at zero equals the transposed substitution matrix, random") {
    CounterRng rng(5, 21);
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng.word(ctr++) % 2);
        Substitution z;
        z.alphabet_size = d;
        for (int a = 0; a < d; ++a) {
            int len = 1 + static_cast<int>(rng.word(ctr++) % 5);
            std::vector<int> w;
            for (int i = 0; i < len; ++i)
                w.push_back(static_cast<int>(rng.word(ctr++) % static_cast<std::uint64_t>(d)));
            z.rules.push_back(std::move(w));
        }
        SymbolMatrix sym = build_symbol(z);
        CHECK(mat_dist(evaluate(sym, std::vector<double>(static_cast<std::size_t>(d), 0.0)),
                       from_int(substitution_matrix(z).transposed())) < 1e-12);
    }
}

TEST_CASE("cocycle product: power consistency and cocycle law") {
    CounterRng rng(17, 22);
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 15; ++trial) {
        int d = 2 + static_cast<int>(rng.word(ctr++) % 2);
        Substitution z;
        z.alphabet_size = d;
        for (int a = 0; a < d; ++a) {
            int len = 1 + static_cast<int>(rng.word(ctr++) % 5);
            std::vector<int> w;
            for (int i = 0; i < len; ++i)
                w.push_back(static_cast<int>(rng.word(ctr++) % static_cast<std::uint64_t>(d)));
            z.rules.push_back(std::move(w));
        }
        SymbolMatrix sym = build_symbol(z);
        IntMatrix st = substitution_matrix(z).transposed();
        std::vector<double> s(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) s[static_cast<std::size_t>(i)] = rng.uniform(ctr++);
        int n = 1 + static_cast<int>(rng.word(ctr++) % 4);

        // M_zeta(s, n) = M_{zeta^n}(s)
        ComplexMatrix lhs = cocycle_product(sym, st, s, n);
        ComplexMatrix rhs = evaluate(build_symbol(power(z, n)), s);
        CHECK(mat_dist(lhs, rhs) < 1e-9);

        // cocycle law M(s, a+b) = M(E^a s, b) M(s, a)
        int a = 1 + static_cast<int>(rng.word(ctr++) % 2);
        int b = 1 + static_cast<int>(rng.word(ctr++) % 2);
        ComplexMatrix law_lhs = cocycle_product(sym, st, s, a + b);
        ComplexMatrix law_rhs = cocycle_product(sym, st, advance(st, s, a), b) * cocycle_product(sym, st, s, a);
        CHECK(mat_dist(law_lhs, law_rhs) < 1e-9);
    }
}

TEST_CASE("Z^d periodicity of the evaluation") {
    Substitution z = substitution_from_strings({"012", "202", "111"});
    SymbolMatrix sym = build_symbol(z);
    std::vector<double> s{0.37, 0.11, 0.83};
    std::vector<double> shifted{0.37 + 2.0, 0.11 - 1.0, 0.83 + 5.0};
    CHECK(mat_dist(evaluate(sym, s), evaluate(sym, shifted)) < 1e-11);
}

TEST_CASE("essential symbol") {
    SUBCASE("identity basis keeps the symbol") {
        FamilyParams p;
        p.family = FamilyTag::ZetaM;
        p.m = 4;
        Substitution z = make_family(p);
        IntMatrix st = substitution_matrix(z).transposed();
        RatVec ones(3, Rat(1));
        MinimalSubspace v = cyclic_subspace(st, ones);
        REQUIRE(v.rank == 3);
        SymbolMatrix sym = build_symbol(z);
        SymbolMatrix ess = essential_symbol(sym, v);
        CHECK(ess.entries == sym.entries);
    }

    SUBCASE("sigma_m essential evaluation matches M(s0, s0, s1)") {
        FamilyParams p;
        p.family = FamilyTag::SigmaM;
        p.m = 2;
        Substitution z = make_family(p);
        IntMatrix st = substitution_matrix(z).transposed();
        MinimalSubspace v = cyclic_subspace(st, RatVec(3, Rat(1)));
        REQUIRE(v.rank == 2);
        SymbolMatrix sym = build_symbol(z);
        SymbolMatrix ess = essential_symbol(sym, v);
        CounterRng rng(7, 23);
        for (int t = 0; t < 10; ++t) {
            double s0 = rng.uniform(2 * static_cast<std::uint64_t>(t));
            double s1 = rng.uniform(2 * static_cast<std::uint64_t>(t) + 1);
            CHECK(mat_dist(evaluate(ess, {s0, s1}), evaluate(sym, {s0, s0, s1})) < 1e-9);
        }
    }

    SUBCASE("rank-one example collapses to a single variable") {
        Substitution z = substitution_from_strings({"01", "01"});
        IntMatrix st = substitution_matrix(z).transposed();
        MinimalSubspace v = cyclic_subspace(st, RatVec(2, Rat(1)));
        REQUIRE(v.rank == 1);
        SymbolMatrix ess = essential_symbol(build_symbol(z), v);
        // [[1, e(s)], [1, e(s)]]
        CHECK(ess.entry(0, 0)[0].freq == std::vector<long>{0});
        CHECK(ess.entry(0, 1)[0].freq == std::vector<long>{1});
        CHECK(ess.entry(1, 0)[0].freq == std::vector<long>{0});
        CHECK(ess.entry(1, 1)[0].freq == std::vector<long>{1});
    }

    SUBCASE("general essential/full consistency via the basis map") {
        FamilyParams p;
        p.family = FamilyTag::SigmaM;
        p.m = 3;
        Substitution z = make_family(p);
        IntMatrix st = substitution_matrix(z).transposed();
        MinimalSubspace v = cyclic_subspace(st, RatVec(3, Rat(1)));
        SymbolMatrix sym = build_symbol(z);
        SymbolMatrix ess = essential_symbol(sym, v);
        CounterRng rng(9, 24);
        for (int t = 0; t < 8; ++t) {
            std::vector<double> s(static_cast<std::size_t>(v.rank));
            for (int i = 0; i < v.rank; ++i)
                s[static_cast<std::size_t>(i)] = rng.uniform(static_cast<std::uint64_t>(8 * t + i));
            // phi^{-1}(s) = G s mod 1
            std::vector<double> ambient(3, 0.0);
            for (int j = 0; j < v.rank; ++j)
                for (int i = 0; i < 3; ++i)
                    ambient[static_cast<std::size_t>(i)] +=
                        v.lattice_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].get_d() *
                        s[static_cast<std::size_t>(j)];
            for (double& x : ambient) x -= std::floor(x);
            CHECK(mat_dist(evaluate(ess, s), evaluate(sym, ambient)) < 1e-9);
        }
    }
}

TEST_CASE("fixed-point torus arithmetic") {
    SUBCASE("doubling a dyadic quarter") {
        FixedTorusPoint x = FixedTorusPoint::zero(256, 1);
        x.coords[0] = Int(1) << 254; // 1/4
        IntMatrix two = IntMatrix::from_rows({{2}});
        CHECK(x.to_doubles()[0] == doctest::Approx(0.25).epsilon(1e-12));
        x.step(two);
        CHECK(x.to_doubles()[0] == doctest::Approx(0.5).epsilon(1e-12));
        x.step(two);
        CHECK(x.to_doubles()[0] == doctest::Approx(0.0).epsilon(1e-12));
    }

    SUBCASE("near-1/3 alternates under doubling for many steps") {
        // nearest 256-bit dyadic to 1/3; exact iteration shadows 1/3, 2/3, ...
        Int third = ((Int(1) << 256) + 1) / 3;
        FixedTorusPoint x = FixedTorusPoint::zero(256, 1);
        x.coords[0] = third;
        IntMatrix two = IntMatrix::from_rows({{2}});
        for (int i = 0; i < 10; ++i) {
            double expect = (i % 2 == 0) ? 1.0 / 3.0 : 2.0 / 3.0;
            CHECK(std::abs(x.to_doubles()[0] - expect) < 1e-12);
            x.step(two);
        }
    }

    SUBCASE("limb round trip") {
        CounterRng rng(99, 25);
        auto limbs = rng.limbs(0, 4096);
        CHECK(limbs.size() == 64);
        FixedTorusPoint x = FixedTorusPoint::from_limbs(4096, {limbs});
        CHECK(x.coords[0] >= 0);
        CHECK(x.coords[0] < (Int(1) << 4096));
        double d = x.to_doubles()[0];
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
}
