#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specto/cocycle.hpp"
#include "specto/int_poly.hpp"

namespace specto {

// Sparse multivariate Laurent polynomial with unbounded-integer coefficients.
// No zero coefficients are stored. A squared modulus is conjugate-symmetric:
// coeff(e) == coeff(-e).
struct LaurentPoly {
    int num_vars = 0;
    std::map<std::vector<long>, Int> terms;

    explicit LaurentPoly(int vars = 0) : num_vars(vars) {}
    static LaurentPoly constant(int vars, Int c);
    static LaurentPoly monomial(int vars, const std::vector<long>& e, Int c = 1);

    void add_term(const std::vector<long>& e, const Int& c);
    bool is_zero() const { return terms.empty(); }
    Int constant_term() const;
    bool conjugate_symmetric() const;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly conj(const LaurentPoly& a);          // negate exponents
LaurentPoly squared_modulus(const LaurentPoly& a); // a * conj(a)

// value at s with the z_j = exp(-2*pi*i*s_j) convention
Cplx evaluate(const LaurentPoly& p, const std::vector<double>& s);

// Exact quotient p / (x^v - 1); nullopt when not divisible. Works per
// v-residue class by telescoping partial sums.
std::optional<LaurentPoly> divide_by_binomial(const LaurentPoly& p, const std::vector<long>& v);

// Denotes the Mahler-measure-zero factor |x^{a*w} - 1|^2.
struct ClearingFactor {
    std::vector<long> w; // primitive direction, w != 0
    long a = 1;

    std::vector<long> combined() const; // a*w
    bool operator<(const ClearingFactor& o) const {
        return std::tie(w, a) < std::tie(o.w, o.a);
    }
    bool operator==(const ClearingFactor& o) const { return w == o.w && a == o.a; }
};

// x^{a w} - 1 (one-sided part of the clearing factor)
LaurentPoly clearing_binomial(const ClearingFactor& c, int vars);

// Maximal arithmetic progression of frequencies inside one entry:
// start, start+step, ..., start+(len-1)*step, all with coefficient `mult`.
struct GeometricRun {
    std::vector<long> start;
    std::vector<long> step; // empty when len == 1
    long len = 1;
    long mult = 1;
};

std::vector<GeometricRun> decompose_runs(const std::vector<FreqTerm>& entry);

// Clearing proposals from the runs of all entries (normalized: primitive
// direction, multiplicity in `a`). Heuristic input for cleared_jensen_bound.
std::vector<ClearingFactor> detect_geometric_runs(const SymbolMatrix& sym);

// Exact squared Frobenius norm of the symbol as a Laurent polynomial;
// its constant term is the Parseval mass sum of squared multiplicities.
LaurentPoly gram_polynomial(const SymbolMatrix& sym);

struct CertifiedBound {
    double bound = 0;     // (1/2k) log(constant term)
    Int constant_term;    // exact
    int k = 1;
    std::vector<ClearingFactor> clearings;
    std::string method;   // jensen | cleared | majorant-grid | monte-carlo
    std::string note;
};

double log_of(const Int& v); // natural log of a positive bignum

// Plain Jensen+Parseval bound at cocycle depth k: builds zeta^k, reads the
// essential gram's constant term.
CertifiedBound jensen_bound(const Substitution& z, const MinimalSubspace& v, int k);

// Gram of the symbol multiplied by the clearing factors, with every
// geometric run re-summed into closed numerator form. Entries whose run
// denominators do not divide the clearing product stay expanded (the bound
// is still valid); with strict=true that raises std::invalid_argument naming
// the entry.
LaurentPoly cleared_gram(const SymbolMatrix& sym, const std::vector<ClearingFactor>& clearings,
                         bool strict = false);

CertifiedBound cleared_jensen_bound(const SymbolMatrix& sym,
                                    const std::vector<ClearingFactor>& clearings, int k = 1,
                                    bool strict = false);

// Enumerates subsets of the detected clearing proposals and keeps the one
// with the smallest exact constant term (this reproduces the hand algebra
// for the built-in families).
CertifiedBound best_certified_bound(const SymbolMatrix& sym, int k = 1);

// Verifies cleared_gram <= majorant on a uniform grid (within tol), then
// bounds by the majorant's constant term. Grid-checked, not a proof; the
// result is flagged by its method string.
CertifiedBound majorant_bound(const SymbolMatrix& sym, const LaurentPoly& majorant,
                              const std::vector<ClearingFactor>& clearings,
                              int grid_per_dim = 512, double tol = 1e-9);

// The closed-form family-3 majorant with constant term 8k^2+8k+14
// (in the 2-variable essential coordinates).
LaurentPoly family3_majorant(long m, long k);

struct QuadratureEstimate {
    double estimate = 0;
    double std_error = 0;
    int k = 1;
    long samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of (1/k) * integral of log ||M~(s,k)|| over T^r;
// deterministic given the seed, independent of thread count.
QuadratureEstimate quadrature_log_norm(const SymbolMatrix& sym, const IntMatrix& e, int k,
                                       long samples, std::uint64_t seed, int threads = 1);

// Midpoint-rule check of the 1-variable Mahler integral of log|e(t)-1|^2
// (exact value 0, the rule avoids the t=0 singularity by construction).
double mahler_midpoint_check(long n);

} // namespace specto
