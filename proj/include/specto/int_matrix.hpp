#pragma once

#include <optional>
#include <vector>

#include "specto/int_poly.hpp"

namespace specto {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Square integer matrix with exact entries, row-major.
struct IntMatrix {
    int dim = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    explicit IntMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), Int(0)) {}
    static IntMatrix identity(int d);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; }
    const Int& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)];
    }

    bool operator==(const IntMatrix& o) const { return dim == o.dim && a == o.a; }

    IntMatrix transposed() const;
    bool nonnegative() const;
    Int max_abs_entry() const;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_pow(const IntMatrix& x, int e);
IntVec operator*(const IntMatrix& m, const IntVec& v);
RatVec operator*(const IntMatrix& m, const RatVec& v);

Int det(const IntMatrix& a);

// Monic characteristic polynomial det(xI - A), Faddeev-LeVerrier (all
// divisions exact over Z).
IntPoly char_poly(const IntMatrix& a);

// --- exact rational elimination -------------------------------------------

int rank_of_columns(const std::vector<RatVec>& cols, int dim);

// Solve sum_j cols[j]*x[j] = rhs. nullopt if inconsistent; when the columns
// are independent the solution is unique.
std::optional<RatVec> solve_in_span(const std::vector<RatVec>& cols, const RatVec& rhs);
std::optional<RatVec> solve_in_span(const std::vector<IntVec>& cols, const RatVec& rhs);

// --- lattices ---------------------------------------------------------------

// Canonical column-style Hermite normal form of the lattice generated by the
// given integer columns; pivot rows increase, pivots positive, entries left
// of a pivot reduced into [0, pivot).
std::vector<IntVec> hnf_basis(const std::vector<IntVec>& cols, int dim);

// Basis of {x in Z^n : A x = 0} for the m x n map given by columns
// (each of length m). Kernels of integer maps are saturated by construction.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& map_columns, int codomain_dim);

// Basis of Span(generators) intersected with Z^d (free-abelian basis in which
// every integer vector of the span has integer coordinates). Dual-HNF method:
// the span's integer orthogonal complement is computed first, the saturation
// is its kernel. Throws std::invalid_argument on empty/zero input.
std::vector<IntVec> saturate_lattice(const std::vector<RatVec>& generators, int dim);

// Restriction matrix B with A*basis = basis*B, exact. Throws
// std::invalid_argument if the span is not A-invariant (reports the violating
// column) or the coordinates are non-integral (basis not saturated).
IntMatrix restrict_to_basis(const IntMatrix& a, const std::vector<IntVec>& basis);

struct MinimalSubspace {
    int ambient_dim = 0;
    int rank = 0;
    std::vector<IntVec> lattice_basis; // columns, canonical HNF
    IntMatrix restriction;

    RatVec from_coords(const RatVec& coords) const;   // basis * coords
    std::optional<RatVec> to_coords(const RatVec& ambient) const;
};

// Minimal subspace of a nonzero rational vector: the cyclic span
// {v, Av, ..., A^{d-1}v} with saturated lattice basis and exact restriction.
MinimalSubspace cyclic_subspace(const IntMatrix& a, const RatVec& v);

// Splits off the nilpotent part of A on the cyclic subspace of v: returns
// (v1, m) with A^n v = A^n v1 for all n >= m and A nonsingular on the cyclic
// subspace of v1 (when v1 != 0). m = 0 returns v unchanged.
std::pair<RatVec, int> project_remark_b(const IntMatrix& a, const RatVec& v);

// min_i (Au)_i / u_i : rigorous lower bound for the Perron-Frobenius
// eigenvalue of a nonnegative matrix; improves monotonically under u <- Au.
Rat collatz_wielandt_lower(const IntMatrix& a, const std::vector<Rat>& u);

// Wielandt: A primitive iff A^((d-1)^2+1) > 0, over booleanized powers.
bool is_primitive(const IntMatrix& a);

// Smallest k such that two distinct eigenvalues have a ratio that is a
// primitive k-th root of unity; nullopt means non-degenerate.
std::optional<int> is_degenerate(const IntMatrix& a);

// Smallest k with A^k non-degenerate (lcm of all witness orders; 1 if none).
int nondegenerate_power(const IntMatrix& a);

} // namespace specto
