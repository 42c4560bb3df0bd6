#include "specto/equidist.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace specto {

std::string to_string(UDFail f) {
    switch (f) {
        case UDFail::None: return "none";
        case UDFail::DependentIterates: return "dependent_iterates";
        case UDFail::Degenerate: return "degenerate";
        case UDFail::UnitRootEigenvalue: return "unit_root_eigenvalue";
        case UDFail::Singular: return "singular";
    }
    return "?";
}

namespace {

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// scale a rational solution to a primitive integer vector
IntVec to_primitive_integer(const RatVec& s) {
    Int lcm = 1;
    for (const auto& x : s) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntVec h(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        Rat scaled = s[i] * Rat(lcm);
        scaled.canonicalize();
        h[i] = scaled.get_num();
    }
    Int g = 0;
    for (const auto& x : h) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : h) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return h;
}

// solve <A^i v, s> = rhs_i for i = 0..d-1 (iterates independent)
RatVec solve_against_iterates(const IntMatrix& a, const RatVec& v, const RatVec& rhs) {
    int d = a.dim;
    std::vector<RatVec> cols(static_cast<std::size_t>(d));
    RatVec w = v;
    for (int i = 0; i < d; ++i) {
        // column i of the system matrix (as a function of s) is A^i v placed
        // as a row; build the transposed system instead
        cols[static_cast<std::size_t>(i)] = w;
        w = a * w;
    }
    // system: M s = rhs with M rows = (A^i v)^t, i.e. columns of M are
    // coordinate slices; reuse solve_in_span on the transposed arrangement
    std::vector<RatVec> tcols(static_cast<std::size_t>(d), RatVec(static_cast<std::size_t>(d), Rat(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) tcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    auto s = solve_in_span(tcols, rhs);
    if (!s) throw InternalError("solve_against_iterates: inconsistent system despite independence");
    return *s;
}

} // namespace

UDVerdict ud_conditions(const IntMatrix& a, const RatVec& v) {
    if (static_cast<int>(v.size()) != a.dim) throw std::invalid_argument("ud_conditions: dimension mismatch");
    if (is_zero_vec(v)) throw std::invalid_argument("ud_conditions: zero vector");
    UDVerdict verdict;

    if (det(a) == 0) {
        verdict.failed = UDFail::Singular;
        verdict.notes = "matrix is singular; the trichotomy assumes a nonsingular matrix";
        return verdict;
    }

    std::vector<RatVec> iterates;
    RatVec w = v;
    for (int i = 0; i < a.dim; ++i) {
        iterates.push_back(w);
        w = a * w;
    }
    if (rank_of_columns(iterates, a.dim) < a.dim) {
        verdict.failed = UDFail::DependentIterates;
        verdict.notes = "iterates v, Av, ..., A^{d-1}v span a proper subspace";
        return verdict;
    }

    if (auto k = is_degenerate(a)) {
        verdict.failed = UDFail::Degenerate;
        verdict.witness = UDWitness{degenerate_witness(a, v, *k), *k};
        verdict.notes = "two distinct eigenvalues have a ratio of order " + std::to_string(*k);
        return verdict;
    }

    if (auto k = has_unit_root(char_poly(a))) {
        // non-degenerate with a unit-root eigenvalue forces rho = +/-1
        verdict.failed = UDFail::UnitRootEigenvalue;
        long rho = (*k == 1) ? 1 : -1;
        RatVec rhs(static_cast<std::size_t>(a.dim));
        Rat p(1);
        for (int i = 0; i < a.dim; ++i) {
            rhs[static_cast<std::size_t>(i)] = p;
            p *= rho;
        }
        verdict.witness = UDWitness{to_primitive_integer(solve_against_iterates(a, v, rhs)), *k};
        verdict.notes = "eigenvalue " + std::to_string(rho) + " pins <A^n v, h> to a constant modulus";
        return verdict;
    }

    verdict.holds = true;
    return verdict;
}

IntVec degenerate_witness(const IntMatrix& a, const RatVec& v, int k) {
    if (k < 2) throw std::invalid_argument("degenerate_witness: ratio order must be >= 2");
    int d = a.dim;
    IntPoly p = char_poly(a);
    if (p.coeff(0) == 0) throw std::invalid_argument("degenerate_witness: matrix is singular");

    // companion acting on state (x_n, ..., x_{n+d-1}); x_m = e_0^t C^m state_0
    IntMatrix c(d);
    for (int i = 0; i + 1 < d; ++i) c.at(i, i + 1) = 1;
    for (int j = 0; j < d; ++j) c.at(d - 1, j) = -p.coeff(j);

    IntMatrix ck = mat_pow(c, k);
    // beta matrix: row i = first row of C^{ik}
    std::vector<IntVec> beta_cols(static_cast<std::size_t>(d), IntVec(static_cast<std::size_t>(d), Int(0)));
    IntMatrix power = IntMatrix::identity(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) beta_cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = power.at(0, j);
        power = power * ck;
    }
    std::vector<IntVec> kernel = integer_kernel(beta_cols, d);
    if (kernel.empty())
        throw InternalError("degenerate_witness: subsampling matrix is nonsingular despite degeneracy");
    const IntVec& z = kernel.front();

    RatVec rhs(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) rhs[static_cast<std::size_t>(i)] = Rat(z[static_cast<std::size_t>(i)]);
    IntVec h = to_primitive_integer(solve_against_iterates(a, v, rhs));

    // exact vanishing check along the arithmetic subsequence
    RatVec w = v;
    for (long n = 0; n <= 50L * k; ++n) {
        if (n % k == 0) {
            Rat dot(0);
            for (int i = 0; i < d; ++i) dot += w[static_cast<std::size_t>(i)] * Rat(h[static_cast<std::size_t>(i)]);
            if (dot != 0) throw InternalError("degenerate_witness: verification failed at n=" + std::to_string(n));
        }
        w = a * w;
    }
    return h;
}

RecurrenceSeq RecurrenceSeq::from_matrix(const IntMatrix& a, std::vector<Int> initial) {
    IntPoly p = char_poly(a);
    if (p.coeff(0) == 0)
        throw std::invalid_argument("RecurrenceSeq: singular matrix gives alpha_0 = 0");
    RecurrenceSeq r;
    r.order = a.dim;
    r.coeffs.resize(static_cast<std::size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i) r.coeffs[static_cast<std::size_t>(i)] = -p.coeff(i);
    if (static_cast<int>(initial.size()) != a.dim)
        throw std::invalid_argument("RecurrenceSeq: need exactly d initial values");
    r.initial = std::move(initial);
    return r;
}

std::vector<Int> RecurrenceSeq::terms(long n) const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n && i < order; ++i) out.push_back(initial[static_cast<std::size_t>(i)]);
    for (long i = order; i < n; ++i) {
        Int next = 0;
        for (int j = 0; j < order; ++j)
            next += coeffs[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(i - order + j)];
        out.push_back(std::move(next));
    }
    return out;
}

long multiplicity_diagnostic(const std::vector<Int>& terms) {
    if (terms.size() > 100000) throw std::invalid_argument("multiplicity_diagnostic: N must be <= 1e5");
    std::map<Int, long> groups;
    for (const Int& t : terms) ++groups[t];
    long pairs = 0;
    for (const auto& [value, count] : groups) pairs += count * (count - 1) / 2;
    return pairs;
}

std::vector<std::vector<double>> orbit_mod1(const IntMatrix& a, const FixedTorusPoint& x0, long n) {
    if (x0.bits < 64)
        throw std::invalid_argument("orbit_mod1: precision shortfall, need at least 64 bits");
    if (static_cast<int>(x0.coords.size()) != a.dim) throw std::invalid_argument("orbit_mod1: dimension mismatch");
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(n));
    FixedTorusPoint x = x0;
    for (long i = 0; i < n; ++i) {
        out.push_back(x.to_doubles());
        x.step(a);
    }
    return out;
}

WeylResult weyl_sums(const std::vector<std::vector<double>>& points, int h_max) {
    if (points.empty()) throw std::invalid_argument("weyl_sums: no points");
    if (h_max < 1) throw std::invalid_argument("weyl_sums: h_max must be >= 1");
    int r = static_cast<int>(points[0].size());
    long base = 2L * h_max + 1;
    long combos = 1;
    for (int i = 0; i < r; ++i) {
        combos *= base;
        if (combos > 2'000'000) throw std::invalid_argument("weyl_sums: frequency box too large");
    }

    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<Cplx> acc(static_cast<std::size_t>(combos), Cplx(0));
    std::vector<Cplx> table(static_cast<std::size_t>(r) * static_cast<std::size_t>(base));
    for (const auto& x : points) {
        for (int dim = 0; dim < r; ++dim) {
            Cplx unit = std::polar(1.0, two_pi * x[static_cast<std::size_t>(dim)]);
            Cplx cur = std::polar(1.0, -two_pi * h_max * x[static_cast<std::size_t>(dim)]);
            for (long t = 0; t < base; ++t) {
                table[static_cast<std::size_t>(dim) * static_cast<std::size_t>(base) + static_cast<std::size_t>(t)] = cur;
                cur *= unit;
            }
        }
        for (long idx = 0; idx < combos; ++idx) {
            long rem = idx;
            Cplx prod(1);
            for (int dim = 0; dim < r; ++dim) {
                long digit = rem % base;
                rem /= base;
                prod *= table[static_cast<std::size_t>(dim) * static_cast<std::size_t>(base) + static_cast<std::size_t>(digit)];
            }
            acc[static_cast<std::size_t>(idx)] += prod;
        }
    }

    WeylResult best;
    long center = 0;
    for (int i = 0, p = 1; i < r; ++i, p *= static_cast<int>(base)) center += h_max * p;
    for (long idx = 0; idx < combos; ++idx) {
        if (idx == center) continue; // h = 0
        double mod = std::abs(acc[static_cast<std::size_t>(idx)]) / static_cast<double>(points.size());
        if (mod > best.max_modulus) {
            best.max_modulus = mod;
            best.argmax.assign(static_cast<std::size_t>(r), 0);
            long rem = idx;
            for (int dim = 0; dim < r; ++dim) {
                best.argmax[static_cast<std::size_t>(dim)] = rem % base - h_max;
                rem /= base;
            }
        }
    }
    return best;
}

double witness_hit_frequency(const IntMatrix& a, const IntVec& v, const IntVec& h, int k,
                             const Int& omega_numerator, int omega_bits, long n) {
    if (k < 1) throw std::invalid_argument("witness_hit_frequency: k must be >= 1");
    Int modulus = Int(1) << omega_bits;
    Int threshold = modulus / (2 * k); // [0, 1/(2k)] in fixed point
    IntVec w = v;
    long hits = 0;
    for (long i = 0; i < n; ++i) {
        Int dot = 0;
        for (std::size_t j = 0; j < w.size(); ++j) dot += w[j] * h[j];
        Int pos = dot * omega_numerator;
        mpz_fdiv_r_2exp(pos.get_mpz_t(), pos.get_mpz_t(), static_cast<mp_bitcnt_t>(omega_bits));
        if (pos <= threshold) ++hits;
        w = a * w;
    }
    return static_cast<double>(hits) / static_cast<double>(n);
}

} // namespace specto
