#include "specto/lyapunov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specto/parallel.hpp"
#include "specto/rng.hpp"

namespace specto {

int required_orbit_bits(long n_steps, const IntMatrix& endomorphism) {
    Int scale = endomorphism.max_abs_entry();
    if (scale == 0) scale = 1;
    scale *= endomorphism.dim;
    scale *= endomorphism.dim;
    int bits_per_step = 0;
    Int one = 1;
    while ((one << bits_per_step) < scale) ++bits_per_step;
    long total = n_steps * static_cast<long>(bits_per_step) + 64;
    if (total > (1L << 30)) throw std::invalid_argument("required_orbit_bits: unreasonable step count");
    return static_cast<int>(total);
}

namespace {

// Kahan-compensated accumulator for the log-norm sums.
struct CompensatedSum {
    double sum = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

} // namespace

LyapunovEstimate mc_exponent(const Substitution& z, const MinimalSubspace& v, long n_steps,
                             long n_samples, std::uint64_t seed, int threads) {
    if (n_steps < 10) throw std::invalid_argument("mc_exponent: n_steps must be >= 10");
    if (n_samples < 2) throw std::invalid_argument("mc_exponent: n_samples must be >= 2");

    const IntMatrix& b = v.restriction;
    if (det(b) == 0)
        throw std::invalid_argument("mc_exponent: restriction is singular; project first");
    SymbolMatrix sym = essential_symbol(build_symbol(z), v);

    // orbit bits: enough that the dyadic orbit does not degenerate within
    // n_steps (each step consumes at most log2(row sum) bits)
    Int row_bound = 1;
    for (int i = 0; i < b.dim; ++i) {
        Int row = 0;
        for (int j = 0; j < b.dim; ++j) row += abs(b.at(i, j));
        row_bound = std::max(row_bound, row);
    }
    int step_bits = 1;
    while ((Int(1) << step_bits) < row_bound) ++step_bits;
    long total_bits = n_steps * static_cast<long>(step_bits + 1) + 128;
    if (total_bits > (1L << 26))
        throw std::invalid_argument("mc_exponent: n_steps too large for exact orbit arithmetic");
    int bits = static_cast<int>(total_bits);

    CounterRng rng = make_rng(seed, RngStream::McTorusSample);
    int r = v.rank;
    std::vector<double> per_sample(static_cast<std::size_t>(n_samples));
    parallel_for_index(static_cast<std::size_t>(n_samples), threads, [&](std::size_t i) {
        std::vector<std::vector<std::uint64_t>> limbs;
        limbs.reserve(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c)
            limbs.push_back(rng.limbs(i * static_cast<std::size_t>(r) + static_cast<std::size_t>(c), bits));
        FixedTorusPoint s = FixedTorusPoint::from_limbs(bits, limbs);
        ComplexMatrix acc = ComplexMatrix::identity(sym.dim);
        CompensatedSum logsum;
        for (long step = 0; step < n_steps; ++step) {
            acc = evaluate(sym, s.to_doubles()) * acc;
            double nf = acc.frobenius();
            logsum.add(std::log(nf));
            acc.scale(1.0 / nf);
            s.step(b);
        }
        per_sample[i] = logsum.sum / static_cast<double>(n_steps);
    });

    double mean = 0;
    for (double x : per_sample) mean += x;
    mean /= static_cast<double>(n_samples);
    double var = 0;
    for (double x : per_sample) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n_samples - 1);

    LyapunovEstimate est;
    est.value = mean;
    est.std_error = std::sqrt(var / static_cast<double>(n_samples));
    est.n_steps = n_steps;
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

double pointwise_upper_exponent(const Substitution& z, const FixedTorusPoint& w, long n_steps) {
    if (n_steps < 8) throw std::invalid_argument("pointwise_upper_exponent: n_steps must be >= 8");
    IntMatrix st = substitution_matrix(z).transposed();
    if (static_cast<int>(w.coords.size()) != st.dim)
        throw std::invalid_argument("pointwise_upper_exponent: point dimension mismatch");
    int needed = required_orbit_bits(n_steps, st);
    if (w.bits < needed)
        throw std::invalid_argument("pointwise_upper_exponent: insufficient precision (" +
                                    std::to_string(w.bits) + " bits, need >= " + std::to_string(needed) + ")");

    SymbolMatrix sym = build_symbol(z);
    FixedTorusPoint x = w;
    ComplexMatrix acc = ComplexMatrix::identity(sym.dim);
    CompensatedSum logsum;
    double best = -1e300;
    long window_start = n_steps - n_steps / 4;
    for (long n = 1; n <= n_steps; ++n) {
        acc = evaluate(sym, x.to_doubles()) * acc;
        double nf = acc.frobenius();
        logsum.add(std::log(nf));
        acc.scale(1.0 / nf);
        x.step(st);
        if (n > window_start) best = std::max(best, logsum.sum / static_cast<double>(n));
    }
    return best;
}

} // namespace specto
