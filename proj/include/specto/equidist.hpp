#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specto/cocycle.hpp"
#include "specto/int_matrix.hpp"

namespace specto {

enum class UDFail { None, DependentIterates, Degenerate, UnitRootEigenvalue, Singular };

std::string to_string(UDFail f);

// Explicit obstruction: <A^n v, h> = scale * x_n where (x_n) vanishes on the
// multiples of k (degenerate case) or equals rho^n with rho of order k
// (unit-root case).
struct UDWitness {
    IntVec h;
    int k = 1;
};

struct UDVerdict {
    bool holds = false;
    UDFail failed = UDFail::None;
    std::optional<UDWitness> witness;
    std::string notes;
};

// The a.e.-omega equidistribution trichotomy for (A^n omega v) mod 1:
// checks, in order, nonsingularity, independence of the first d iterates,
// non-degeneracy, absence of unit-root eigenvalues.
UDVerdict ud_conditions(const IntMatrix& a, const RatVec& v);

// Integer h with <A^{kn} v, h> = 0 for all n, built from the kernel of the
// subsampled-recurrence matrix; the vanishing is re-verified exactly for
// n <= 50 before returning.
IntVec degenerate_witness(const IntMatrix& a, const RatVec& v, int k);

// Integer linear recurrence with exact terms.
struct RecurrenceSeq {
    int order = 0;
    std::vector<Int> coeffs; // alpha_0..alpha_{d-1}, alpha_0 != 0
    std::vector<Int> initial;

    static RecurrenceSeq from_matrix(const IntMatrix& a, std::vector<Int> initial);
    std::vector<Int> terms(long n) const;
};

// Number of unordered coincident pairs among the first terms.
long multiplicity_diagnostic(const std::vector<Int>& terms);

// Exact dyadic orbit snapshots x, Ax, A^2 x, ... mod 1 (doubles for output;
// the iteration itself is exact integer arithmetic).
std::vector<std::vector<double>> orbit_mod1(const IntMatrix& a, const FixedTorusPoint& x0, long n);

struct WeylResult {
    double max_modulus = 0;
    std::vector<long> argmax;
};

// max over nonzero |h|_inf <= h_max of |N^-1 sum_n exp(2 pi i <h, x_n>)|
WeylResult weyl_sums(const std::vector<std::vector<double>>& points, int h_max);

// Fraction of 0 <= n < N with frac(<A^n v, h> * omega) in [0, 1/(2k)],
// computed exactly in fixed point. This is the quantity the degenerate
// witness pushes above 1/k.
double witness_hit_frequency(const IntMatrix& a, const IntVec& v, const IntVec& h, int k,
                             const Int& omega_numerator, int omega_bits, long n);

} // namespace specto
