#include "doctest.h"

#include <cmath>

#include "specto/laurent.hpp"
#include "specto/rng.hpp"

using namespace specto;

namespace {

MinimalSubspace ones_subspace(const Substitution& z) {
    IntMatrix st = substitution_matrix(z).transposed();
    return cyclic_subspace(st, RatVec(static_cast<std::size_t>(z.alphabet_size), Rat(1)));
}

Substitution family(FamilyTag tag, long m) {
    FamilyParams p;
    p.family = tag;
    p.m = m;
    return make_family(p);
}

Substitution family3(long m, std::vector<int> a, std::vector<int> b) {
    FamilyParams p;
    p.family = FamilyTag::ZetaMAB;
    p.m = m;
    p.word_a = std::move(a);
    p.word_b = std::move(b);
    return make_family(p);
}

// |geometric sum 1 + x^s + ... + x^{(len-1)s}|^2 and friends, built by hand
LaurentPoly geo(int vars, const std::vector<long>& step, long len, const std::vector<long>& start) {
    LaurentPoly p(vars);
    std::vector<long> cur = start;
    for (long i = 0; i < len; ++i) {
        p.add_term(cur, 1);
        for (std::size_t k = 0; k < cur.size(); ++k) cur[k] += step[k];
    }
    return p;
}

} // namespace

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly a(2);
    a.add_term({1, 0}, 2);
    a.add_term({0, 0}, -1);
    LaurentPoly b = conj(a);
    CHECK(b.terms.at({-1, 0}) == 2);
    LaurentPoly sq = squared_modulus(a);
    CHECK(sq.constant_term() == 5); // 4 + 1
    CHECK(sq.conjugate_symmetric());

    auto q = divide_by_binomial(geo(2, {1, 0}, 5, {0, 0}) * clearing_binomial({{1, 0}, 1}, 2), {1, 0});
    REQUIRE(q.has_value());
    // (1+...+x^4)(x-1) = x^5-1; dividing back recovers the geometric sum
    CHECK(*q == geo(2, {1, 0}, 5, {0, 0}));

    CHECK_FALSE(divide_by_binomial(LaurentPoly::monomial(2, {3, 0}), {1, 0}).has_value());
}

TEST_CASE("gram of the rank-one example is the constant 4") {
    Substitution z = substitution_from_strings({"01", "01"});
    SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
    LaurentPoly g = gram_polynomial(ess);
    CHECK(g.terms.size() == 1);
    CHECK(g.constant_term() == 4);
}

TEST_CASE("gram matches the evaluated squared Frobenius norm") {
    Substitution z = family(FamilyTag::SigmaM, 2);
    SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
    LaurentPoly g = gram_polynomial(ess);
    CHECK(g.conjugate_symmetric());
    CounterRng rng(31, 41);
    for (int t = 0; t < 10; ++t) {
        std::vector<double> s{rng.uniform(2 * static_cast<std::uint64_t>(t)),
                              rng.uniform(2 * static_cast<std::uint64_t>(t) + 1)};
        double direct = 0;
        ComplexMatrix m = evaluate(ess, s);
        for (const auto& v : m.a) direct += std::norm(v);
        CHECK(std::abs(evaluate(g, s).real() - direct) < 1e-9);
        CHECK(std::abs(evaluate(g, s).imag()) < 1e-9);
    }
}

TEST_CASE("zeta_m gram equals the closed form") {
    // |1+...+z0^{m-1}|^2 + |1+...+z1^{2m-1}|^2 + |z2+1|^2 + 6
    long m = 4;
    Substitution z = family(FamilyTag::ZetaM, m);
    LaurentPoly g = gram_polynomial(build_symbol(z)); // full symbol: V is all of R^3
    LaurentPoly expected =
        squared_modulus(geo(3, {1, 0, 0}, m, {0, 0, 0})) +
        squared_modulus(geo(3, {0, 1, 0}, 2 * m, {0, 0, 0})) +
        squared_modulus(geo(3, {0, 0, 1}, 2, {0, 0, 0})) + LaurentPoly::constant(3, 6);
    CHECK(g == expected);
}

TEST_CASE("run detection") {
    SUBCASE("zeta_m proposes |z0-1|^2 and |z1-1|^2 and |z2-1|^2") {
        Substitution z = family(FamilyTag::ZetaM, 5);
        auto proposals = detect_geometric_runs(build_symbol(z));
        CHECK(proposals.size() == 3);
        CHECK(proposals[0] == ClearingFactor{{0, 0, 1}, 1});
        CHECK(proposals[1] == ClearingFactor{{0, 1, 0}, 1});
        CHECK(proposals[2] == ClearingFactor{{1, 0, 0}, 1});
    }
    SUBCASE("sigma_m essential proposes the step-2 clearing |z0^2-1|^2") {
        Substitution z = family(FamilyTag::SigmaM, 3);
        auto proposals = detect_geometric_runs(essential_symbol(build_symbol(z), ones_subspace(z)));
        REQUIRE(proposals.size() == 2);
        CHECK(proposals[0] == ClearingFactor{{1, 0}, 1}); // from 1+z0+...+z0^{2m+1}
        CHECK(proposals[1] == ClearingFactor{{1, 0}, 2}); // from q(z0^2)
    }
    SUBCASE("single-exponential entries propose nothing") {
        Substitution z = substitution_from_strings({"01", "0"});
        CHECK(detect_geometric_runs(build_symbol(z)).empty());
    }
}

TEST_CASE("cleared Jensen constants of the paper families") {
    SUBCASE("zeta_m: constant term 40 for every m") {
        // the |1+z2|^2 entry stays expanded, exactly as in the hand algebra
        std::vector<ClearingFactor> paper_clearings{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}};
        for (long m : {3L, 5L, 20L}) {
            Substitution z = family(FamilyTag::ZetaM, m);
            SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
            CertifiedBound b = cleared_jensen_bound(ess, paper_clearings, 1);
            CHECK(b.constant_term == 40);
            CHECK(b.method == "cleared");
            CHECK(b.bound == doctest::Approx(0.5 * std::log(40.0)).epsilon(1e-12));
        }
    }
    SUBCASE("sigma_m: constant term 16 for every m") {
        std::vector<ClearingFactor> paper_clearings{{{1, 0}, 2}};
        for (long m : {1L, 2L, 8L, 10L}) {
            Substitution z = family(FamilyTag::SigmaM, m);
            SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
            CertifiedBound b = cleared_jensen_bound(ess, paper_clearings, 1, true);
            CHECK(b.constant_term == 16);
        }
    }
    SUBCASE("no clearings reduces to the Jensen bound") {
        Substitution z = substitution_from_strings({"01", "01"});
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        CertifiedBound b = cleared_jensen_bound(ess, {}, 1);
        CHECK(b.method == "jensen");
        CHECK(b.constant_term == 4);
        CHECK(b.bound == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }
    SUBCASE("strict mode rejects an insufficient clearing set") {
        Substitution z = family(FamilyTag::SigmaM, 2);
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        // |z0-1|^2 alone cannot absorb the step-2 runs of q(z0^2)
        CHECK_THROWS_WITH_AS(cleared_jensen_bound(ess, {{{1, 0}, 1}}, 1, true),
                             doctest::Contains("entry (0,0)"), std::invalid_argument);
    }
}

TEST_CASE("cleared gram exactness: multiplying back reproduces gram * clearing factors") {
    auto check_exactness = [](const SymbolMatrix& sym, const std::vector<ClearingFactor>& cl) {
        LaurentPoly lhs = cleared_gram(sym, cl);
        LaurentPoly rhs = gram_polynomial(sym);
        for (const auto& c : cl) rhs = rhs * squared_modulus(clearing_binomial(c, sym.num_vars));
        CHECK(lhs == rhs);
    };
    {
        Substitution z = family(FamilyTag::ZetaM, 3);
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        check_exactness(ess, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}});
    }
    {
        Substitution z = family(FamilyTag::SigmaM, 2);
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        check_exactness(ess, {{{1, 0}, 2}});
        check_exactness(ess, {});
    }
}

TEST_CASE("automatic clearing selection reproduces the paper's choices") {
    SUBCASE("zeta_20 picks both one-step clearings, constant 40") {
        Substitution z = family(FamilyTag::ZetaM, 20);
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        CertifiedBound b = best_certified_bound(ess);
        CHECK(b.constant_term == 40);
        CHECK(b.method == "cleared");
        CHECK(b.clearings.size() == 2);
    }
    SUBCASE("zeta_3 is better served by the raw Jensen constant 17") {
        Substitution z = family(FamilyTag::ZetaM, 3);
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        CertifiedBound b = best_certified_bound(ess);
        CHECK(b.constant_term == 17); // 3m+8 at m=3
        CHECK(b.method == "jensen");
    }
    SUBCASE("sigma_8 picks only |z0^2-1|^2, constant 16") {
        Substitution z = family(FamilyTag::SigmaM, 8);
        SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
        CertifiedBound b = best_certified_bound(ess);
        CHECK(b.constant_term == 16);
        REQUIRE(b.clearings.size() == 1);
        CHECK(b.clearings[0] == ClearingFactor{{1, 0}, 2});
    }
}

TEST_CASE("jensen_bound at higher cocycle depth stays a valid bound") {
    Substitution z = substitution_from_strings({"01", "01"});
    MinimalSubspace v = ones_subspace(z);
    CertifiedBound b1 = jensen_bound(z, v, 1);
    CHECK(b1.constant_term == 4);
    CertifiedBound b2 = jensen_bound(z, v, 2);
    // zeta^2 sends both letters to 0101; the essential entries are 1+z^2 and
    // z+z^3, so the depth-2 Parseval mass is 8 (validity, not monotonicity,
    // is the contract)
    CHECK(b2.k == 2);
    CHECK(b2.constant_term == 8);
    CHECK(b2.bound == doctest::Approx(std::log(8.0) / 4).epsilon(1e-12));
}

TEST_CASE("parseval: constant term equals the Monte Carlo mean of the squared norm") {
    Substitution z = family(FamilyTag::SigmaM, 2);
    SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
    LaurentPoly g = gram_polynomial(ess);
    CounterRng rng(20260810, static_cast<std::uint64_t>(RngStream::ParsevalCheck));
    long n = 10000;
    double mean = 0, m2 = 0;
    for (long i = 0; i < n; ++i) {
        std::vector<double> s{rng.uniform(2 * static_cast<std::uint64_t>(i)),
                              rng.uniform(2 * static_cast<std::uint64_t>(i) + 1)};
        double v = 0;
        ComplexMatrix mm = evaluate(ess, s);
        for (const auto& x : mm.a) v += std::norm(x);
        double delta = v - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (v - mean);
    }
    double se = std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
    CHECK(std::abs(mean - g.constant_term().get_d()) <= 5 * se);
}

TEST_CASE("family-3 majorant") {
    long m = 30, k = 1;
    LaurentPoly maj = family3_majorant(m, k);
    CHECK(maj.constant_term() == 8 * k * k + 8 * k + 14);

    std::vector<int> a(29, 0);
    a.push_back(1);
    std::vector<int> b(30, 1);
    Substitution z = family3(m, a, b);
    SymbolMatrix ess = essential_symbol(build_symbol(z), ones_subspace(z));
    std::vector<ClearingFactor> clearings{{{1, 0}, 1}};

    SUBCASE("grid check passes and the bound is (1/2) log(8k^2+8k+14)") {
        CertifiedBound bound = majorant_bound(ess, maj, clearings, 128); // unit-test grid
        CHECK(bound.method == "majorant-grid");
        CHECK(bound.constant_term == 30);
        CHECK(bound.bound == doctest::Approx(0.5 * std::log(30.0)).epsilon(1e-12));
    }
    SUBCASE("the cleared gram itself passes as its own majorant") {
        LaurentPoly self = cleared_gram(ess, clearings);
        CertifiedBound bound = majorant_bound(ess, self, clearings, 64);
        CHECK(bound.constant_term == self.constant_term());
    }
    SUBCASE("an impossible majorant reports the worst grid point") {
        LaurentPoly zero(2);
        CHECK_THROWS_WITH_AS(majorant_bound(ess, zero, clearings, 32),
                             doctest::Contains("grid point"), std::runtime_error);
    }
}

TEST_CASE("quadrature of a constant integrand is exact") {
    Substitution z = substitution_from_strings({"01", "01"});
    MinimalSubspace v = ones_subspace(z);
    SymbolMatrix ess = essential_symbol(build_symbol(z), v);
    QuadratureEstimate q = quadrature_log_norm(ess, v.restriction, 1, 200, 7);
    CHECK(std::abs(q.estimate - std::log(2.0)) < 1e-12);
    CHECK(q.std_error < 1e-12);
}

TEST_CASE("quadrature respects the zeta_20 certified bound") {
    Substitution z = family(FamilyTag::ZetaM, 20);
    MinimalSubspace v = ones_subspace(z);
    SymbolMatrix ess = essential_symbol(build_symbol(z), v);
    QuadratureEstimate q = quadrature_log_norm(ess, v.restriction, 1, 400, 20260810);
    CHECK(q.estimate <= 0.5 * std::log(40.0) + 3 * q.std_error);
}

TEST_CASE("quadrature determinism across thread counts") {
    Substitution z = family(FamilyTag::SigmaM, 3);
    MinimalSubspace v = ones_subspace(z);
    SymbolMatrix ess = essential_symbol(build_symbol(z), v);
    QuadratureEstimate a = quadrature_log_norm(ess, v.restriction, 2, 300, 99, 1);
    QuadratureEstimate b = quadrature_log_norm(ess, v.restriction, 2, 300, 99, 8);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("midpoint Mahler check") {
    double v = mahler_midpoint_check(4096);
    CHECK(std::abs(v) <= 1e-3);
}
