#pragma once

#include <cstdint>
#include <vector>

#include "specto/cocycle.hpp"
#include "specto/laurent.hpp"

namespace specto {

struct LyapunovEstimate {
    double value = 0;
    double std_error = 0;
    long n_steps = 0;
    long n_samples = 0;
    std::uint64_t seed = 0;
    std::vector<CertifiedBound> certified_upper_bounds;
};

// Bits needed so that an N-step exact dyadic orbit stays faithful to the real
// point it approximates: N * ceil(log2(d * max|entry| * d)) + 64.
int required_orbit_bits(long n_steps, const IntMatrix& endomorphism);

// Furstenberg-Kesten Monte Carlo for the essential Lyapunov exponent:
// per sample, a uniform random torus point is iterated under the restriction
// endomorphism (exact dyadic orbit) while the cocycle matrix is accumulated
// with per-step Frobenius renormalization and compensated log summation.
// Deterministic given the seed; thread count never changes the result.
LyapunovEstimate mc_exponent(const Substitution& z, const MinimalSubspace& v, long n_steps,
                             long n_samples, std::uint64_t seed, int threads = 1);

// limsup proxy for the pointwise upper exponent along one exact orbit:
// max of (1/n) log||M(w,n)|| over the last quarter of the steps.
// Enforces the precision precondition; throws with the required bit count.
double pointwise_upper_exponent(const Substitution& z, const FixedTorusPoint& w, long n_steps);

} // namespace specto
