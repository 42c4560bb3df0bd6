#pragma once

#include <complex>
#include <vector>

#include "specto/int_matrix.hpp"
#include "specto/substitution.hpp"

namespace specto {

using Cplx = std::complex<double>;

struct ComplexMatrix {
    int dim = 0;
    std::vector<Cplx> a;

    explicit ComplexMatrix(int d = 0) : dim(d), a(static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {}
    static ComplexMatrix identity(int d);

    Cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
    const Cplx& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)];
    }
    double frobenius() const;
    void scale(double s);
};

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);

// One collected exponential: coefficient `mult`, frequency vector `freq`
// (integer exponents of the torus variables).
struct FreqTerm {
    std::vector<long> freq;
    long mult = 1;

    bool operator==(const FreqTerm& o) const { return freq == o.freq && mult == o.mult; }
};

// Exact symbolic form of the matrix-valued function behind the spectral
// cocycle: entry (b,c) is a sum of exponentials exp(-2*pi*i <freq, vars>),
// one per occurrence of c in zeta(b), with the prefix abelianization as
// frequency. Evaluation at 0 gives the transposed substitution matrix.
struct SymbolMatrix {
    int dim = 0;
    int num_vars = 0;
    std::vector<std::vector<FreqTerm>> entries; // dim*dim, row-major

    const std::vector<FreqTerm>& entry(int b, int c) const {
        return entries[static_cast<std::size_t>(b) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)];
    }
    long row_weight(int b) const; // total multiplicity of row b = |zeta(b)|
};

SymbolMatrix build_symbol(const Substitution& z);

// Rewrites frequencies in lattice-basis coordinates: f -> G^t f with G the
// basis matrix of V, so evaluation at s equals evaluation of the full symbol
// at G s. Z^r-periodic since the basis is integral.
SymbolMatrix essential_symbol(const SymbolMatrix& sym, const MinimalSubspace& v);

ComplexMatrix evaluate(const SymbolMatrix& sym, const std::vector<double>& point);

// Left cocycle product M(E^{n-1}s) ... M(s); the orbit advances by
// s -> E s mod 1 in doubles.
ComplexMatrix cocycle_product(const SymbolMatrix& sym, const IntMatrix& e,
                              const std::vector<double>& s, int n);

// P-bit dyadic point of T^r; the endomorphism step x -> E x mod 2^P is exact
// integer arithmetic for any number of steps.
struct FixedTorusPoint {
    int bits = 0;
    std::vector<Int> coords; // each in [0, 2^bits)

    static FixedTorusPoint from_limbs(int bits, const std::vector<std::vector<std::uint64_t>>& limbs);
    static FixedTorusPoint zero(int bits, int dim);

    void step(const IntMatrix& e); // x <- E x mod 2^bits
    std::vector<double> to_doubles() const;
};

} // namespace specto
