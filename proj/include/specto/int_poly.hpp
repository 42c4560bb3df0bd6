#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace specto {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an internal consistency expectation breaks (CLI exit 3).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Dense integer polynomial, constant term first.
// Invariant: empty (the zero polynomial) or nonzero leading coefficient.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
    static IntPoly x_power(int k, Int lead = 1);

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& leading() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Int& coeff(int i) const {
        static const Int zero = 0;
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : zero;
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    std::string to_string() const; // human form, e.g. "x^2 - x - 1"
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& s, const IntPoly& a);
IntPoly operator-(const IntPoly& a);

IntPoly derivative(const IntPoly& p);
Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p); // sign-normalized, leading > 0

// Exact quotient in Z[x]; nullopt if the division leaves a remainder or a
// fractional coefficient.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);
bool divides(const IntPoly& q, const IntPoly& p);

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b); // primitive, leading > 0
IntPoly squarefree_part(const IntPoly& p);

Int eval(const IntPoly& p, const Int& x);
Rat eval(const IntPoly& p, const Rat& x);
std::complex<long double> eval(const IntPoly& p, std::complex<long double> x);

long euler_phi(long k);
const IntPoly& cyclotomic(int k); // cached; throws std::invalid_argument for k < 1

// Smallest k with gcd(p, Phi_k) nontrivial (equivalently Phi_k | p since
// Phi_k is irreducible), searching every k with phi(k) <= deg p.
std::optional<int> has_unit_root(const IntPoly& p);

// Ratio polynomial machinery for degeneracy tests. From the squarefree,
// zero-root-free part q of a characteristic polynomial, ratio_poly returns
// Res_y(q(y), q(x*y)) / (x-1)^deg(q), whose roots are the ratios of distinct
// eigenvalues.
IntPoly ratio_poly(const IntPoly& q_squarefree_nonzero_roots);

// All k such that some eigenvalue ratio of the polynomial's roots is a
// primitive k-th root of unity (k >= 2), ascending. Input: any nonzero p;
// zero roots and multiplicities are stripped internally.
std::vector<int> unit_ratio_orders(const IntPoly& p);

// Isolating box for one root. radius == 0 means the root was identified
// exactly (integer roots only).
struct RootBox {
    std::complex<long double> center;
    long double radius = 0;
    bool exact = false;

    bool is_real() const { return exact || std::abs(center.imag()) <= radius; }
};

struct RootSet {
    std::vector<RootBox> boxes;
    int perron = -1; // index of the dominant real positive root, if any
};

// Aberth-Ehrlich isolation of all roots of a squarefree polynomial.
// Boxes are pairwise disjoint; throws std::runtime_error when the requested
// radius cannot be certified.
RootSet roots_numeric(const IntPoly& p, long double target_radius = 1e-10L);

// Irreducible integer factor of p vanishing on the boxed root, found by
// subset reconstruction from the numeric roots and verified by exact
// division. Minimal verified degree wins.
IntPoly minimal_poly_of_root(const IntPoly& p, const RootBox& box);

} // namespace specto
