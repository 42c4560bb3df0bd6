#include "doctest.h"

#include <cmath>
#include <complex>

#include "specto/lyapunov.hpp"
#include "specto/rng.hpp"

using namespace specto;

namespace {

MinimalSubspace ones_subspace(const Substitution& z) {
    IntMatrix st = substitution_matrix(z).transposed();
    return cyclic_subspace(st, RatVec(static_cast<std::size_t>(z.alphabet_size), Rat(1)));
}

Substitution zeta_m(long m) {
    FamilyParams p;
    p.family = FamilyTag::ZetaM;
    p.m = m;
    return make_family(p);
}

FixedTorusPoint random_point(int bits, int dim, std::uint64_t seed) {
    CounterRng rng = make_rng(seed, RngStream::OmegaSample);
    std::vector<std::vector<std::uint64_t>> limbs;
    for (int i = 0; i < dim; ++i) limbs.push_back(rng.limbs(static_cast<std::uint64_t>(i), bits));
    return FixedTorusPoint::from_limbs(bits, limbs);
}

} // namespace

TEST_CASE("rank-one substitution: a.e. exponent is the Mahler measure 0 of 1+z") {
    // ||M~(s,n)|| = 2 * prod |1+e(s_i)| along the doubling orbit, so the
    // Birkhoff average of log|1+e(s)| (= 0) is the exponent; the 2^n growth
    // happens only at the atypical fixed point s = 0.
    Substitution z = substitution_from_strings({"01", "01"});
    MinimalSubspace v = ones_subspace(z);
    LyapunovEstimate est = mc_exponent(z, v, 500, 40, 20260810);
    CHECK(std::abs(est.value) < 0.05);
    CHECK(est.value <= std::log(2.0) + 3 * est.std_error); // certified k=1 bound

    // the s = 0 fixed point gives the 2^n scaling instead
    FixedTorusPoint zero = FixedTorusPoint::zero(required_orbit_bits(200, substitution_matrix(z).transposed()), 2);
    double chi_plus_zero = pointwise_upper_exponent(z, zero, 200);
    CHECK(std::abs(chi_plus_zero - std::log(2.0)) < 1e-6);
}

TEST_CASE("renormalized accumulation equals the direct product for n <= 50") {
    Substitution fib = substitution_from_strings({"01", "0"});
    MinimalSubspace v = ones_subspace(fib);
    SymbolMatrix sym = essential_symbol(build_symbol(fib), v);
    CounterRng rng(4, 51);
    std::vector<double> s{rng.uniform(0), rng.uniform(1)};

    ComplexMatrix direct = ComplexMatrix::identity(2);
    ComplexMatrix renorm = ComplexMatrix::identity(2);
    double logsum = 0;
    std::vector<double> x = s;
    IntMatrix b = v.restriction;
    for (int n = 1; n <= 50; ++n) {
        ComplexMatrix m = evaluate(sym, x);
        direct = m * direct;
        renorm = m * renorm;
        double nf = renorm.frobenius();
        logsum += std::log(nf);
        renorm.scale(1.0 / nf);
        // advance in doubles, same formula both paths
        std::vector<double> next(2, 0.0);
        for (int i = 0; i < 2; ++i) {
            double acc = 0;
            for (int j = 0; j < 2; ++j) acc += b.at(i, j).get_d() * x[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = acc - std::floor(acc);
        }
        x = next;
        CHECK(std::abs(std::exp(logsum) - direct.frobenius()) <= 1e-6 * direct.frobenius());
    }
}

TEST_CASE("mc_exponent determinism and error paths") {
    Substitution fib = substitution_from_strings({"01", "0"});
    MinimalSubspace v = ones_subspace(fib);
    LyapunovEstimate a = mc_exponent(fib, v, 120, 12, 42, 1);
    LyapunovEstimate b = mc_exponent(fib, v, 120, 12, 42, 8);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);

    CHECK_THROWS_AS(mc_exponent(fib, v, 5, 12, 42), std::invalid_argument);
    CHECK_THROWS_AS(mc_exponent(fib, v, 120, 1, 42), std::invalid_argument);
}

TEST_CASE("Fibonacci estimates agree across seeds and respect the certified bound") {
    Substitution fib = substitution_from_strings({"01", "0"});
    MinimalSubspace v = ones_subspace(fib);
    CertifiedBound bound = jensen_bound(fib, v, 1); // (1/2)log 3
    std::vector<LyapunovEstimate> runs;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) runs.push_back(mc_exponent(fib, v, 400, 32, seed));
    for (std::size_t i = 0; i < runs.size(); ++i) {
        CHECK(runs[i].value <= bound.bound + 3 * runs[i].std_error);
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            double combined = std::sqrt(runs[i].std_error * runs[i].std_error +
                                        runs[j].std_error * runs[j].std_error);
            CHECK(std::abs(runs[i].value - runs[j].value) <= 3 * combined);
        }
    }
}

TEST_CASE("pointwise exponent at the fixed point is log theta1") {
    Substitution fib = substitution_from_strings({"01", "0"});
    IntMatrix st = substitution_matrix(fib).transposed();
    long n = 2000;
    FixedTorusPoint zero = FixedTorusPoint::zero(required_orbit_bits(n, st), 2);
    double value = pointwise_upper_exponent(fib, zero, n);
    double log_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(std::abs(value - log_phi) < 0.01);
}

TEST_CASE("pointwise exponent enforces its precision precondition") {
    Substitution fib = substitution_from_strings({"01", "0"});
    FixedTorusPoint w = FixedTorusPoint::zero(128, 2);
    CHECK_THROWS_WITH_AS(pointwise_upper_exponent(fib, w, 2000), doctest::Contains("bits"),
                         std::invalid_argument);
}

TEST_CASE("pointwise exponent on a periodic dyadic orbit matches the period product") {
    Substitution fib = substitution_from_strings({"01", "0"});
    IntMatrix st = substitution_matrix(fib).transposed();
    SymbolMatrix sym = build_symbol(fib);
    long n = 400;
    int bits = required_orbit_bits(n, st);
    FixedTorusPoint w = FixedTorusPoint::zero(bits, 2);
    w.coords[0] = Int(1) << (bits - 2); // (1/4, 1/4)
    w.coords[1] = Int(1) << (bits - 2);

    // oracle: find the period, multiply the symbol along it, take the
    // spectral radius of the 2x2 period product via its eigenvalues
    std::vector<std::vector<double>> orbit;
    FixedTorusPoint x = w;
    for (int i = 0; i < 64; ++i) {
        orbit.push_back(x.to_doubles());
        x.step(st);
        if (x.coords == w.coords) break;
    }
    long period = static_cast<long>(orbit.size());
    REQUIRE(period < 64);
    ComplexMatrix prod = ComplexMatrix::identity(2);
    for (const auto& pt : orbit) prod = evaluate(sym, pt) * prod;
    Cplx tr = prod.at(0, 0) + prod.at(1, 1);
    Cplx det2 = prod.at(0, 0) * prod.at(1, 1) - prod.at(0, 1) * prod.at(1, 0);
    Cplx disc = std::sqrt(tr * tr - 4.0 * det2);
    double rho = std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
    REQUIRE(rho > 1e-9);
    double expected = std::log(rho) / static_cast<double>(period);

    double value = pointwise_upper_exponent(fib, w, n);
    CHECK(std::abs(value - expected) < 0.02);
}

TEST_CASE("pointwise exponents along omega * (1,1) are bounded by chi, statistically") {
    Substitution fib = substitution_from_strings({"01", "0"});
    MinimalSubspace v = ones_subspace(fib);
    LyapunovEstimate chi = mc_exponent(fib, v, 400, 32, 5);
    IntMatrix st = substitution_matrix(fib).transposed();
    long n = 2000;
    int bits = required_orbit_bits(n, st);
    int ok = 0;
    for (std::uint64_t i = 0; i < 10; ++i) {
        CounterRng rng = make_rng(1000 + i, RngStream::OmegaSample);
        auto limbs = rng.limbs(0, bits);
        FixedTorusPoint w = FixedTorusPoint::from_limbs(bits, {limbs, limbs}); // omega * (1,1)
        double chi_plus = pointwise_upper_exponent(fib, w, n);
        if (chi_plus <= chi.value + 3 * chi.std_error + 0.05) ++ok;
    }
    CHECK(ok >= 8);
}
