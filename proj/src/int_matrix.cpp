#include "specto/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace specto {

IntMatrix IntMatrix::identity(int d) {
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.dim)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < m.dim; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::nonnegative() const {
    for (const auto& v : a)
        if (v < 0) return false;
    return true;
}

Int IntMatrix::max_abs_entry() const {
    Int m = 0;
    for (const auto& v : a) m = std::max(m, Int(abs(v)));
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.dim; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

IntMatrix mat_pow(const IntMatrix& x, int e) {
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    IntMatrix r = IntMatrix::identity(x.dim), base = x;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

IntVec operator*(const IntMatrix& m, const IntVec& v) {
    IntVec r(static_cast<std::size_t>(m.dim), Int(0));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) r[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

RatVec operator*(const IntMatrix& m, const RatVec& v) {
    RatVec r(static_cast<std::size_t>(m.dim), Rat(0));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            r[static_cast<std::size_t>(i)] += Rat(m.at(i, j)) * v[static_cast<std::size_t>(j)];
    return r;
}

IntPoly char_poly(const IntMatrix& a) {
    int d = a.dim;
    std::vector<Int> c(static_cast<std::size_t>(d) + 1, Int(0));
    c[static_cast<std::size_t>(d)] = 1;
    if (d == 0) return IntPoly(std::move(c));
    IntMatrix m = a;
    Int tr = 0;
    for (int i = 0; i < d; ++i) tr += m.at(i, i);
    c[static_cast<std::size_t>(d - 1)] = -tr;
    for (int k = 2; k <= d; ++k) {
        for (int i = 0; i < d; ++i) m.at(i, i) += c[static_cast<std::size_t>(d - k + 1)];
        m = a * m;
        tr = 0;
        for (int i = 0; i < d; ++i) tr += m.at(i, i);
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[static_cast<std::size_t>(d - k)] = -ck;
    }
    return IntPoly(std::move(c));
}

Int det(const IntMatrix& a) {
    Int p0 = char_poly(a).coeff(0);
    return (a.dim % 2 == 0) ? p0 : Int(-p0);
}

namespace {

std::vector<RatVec> to_rat_columns(const std::vector<IntVec>& cols) {
    std::vector<RatVec> out;
    out.reserve(cols.size());
    for (const auto& c : cols) {
        RatVec rc(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) rc[i] = Rat(c[i]);
        out.push_back(std::move(rc));
    }
    return out;
}

} // namespace

int rank_of_columns(const std::vector<RatVec>& cols, int dim) {
    std::vector<RatVec> rows(static_cast<std::size_t>(dim), RatVec(cols.size(), Rat(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < dim; ++i) rows[static_cast<std::size_t>(i)][j] = cols[j][static_cast<std::size_t>(i)];
    int rank = 0;
    std::size_t ncols = cols.size();
    for (std::size_t col = 0; col < ncols && rank < dim; ++col) {
        int piv = -1;
        for (int i = rank; i < dim; ++i)
            if (rows[static_cast<std::size_t>(i)][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        Rat inv = rows[static_cast<std::size_t>(rank)][col];
        for (int i = rank + 1; i < dim; ++i) {
            Rat f = rows[static_cast<std::size_t>(i)][col] / inv;
            if (f == 0) continue;
            for (std::size_t j = col; j < ncols; ++j)
                rows[static_cast<std::size_t>(i)][j] -= f * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<RatVec> solve_in_span(const std::vector<RatVec>& cols, const RatVec& rhs) {
    int dim = static_cast<int>(rhs.size());
    std::size_t n = cols.size();
    // augmented [cols | rhs], eliminate rows
    std::vector<RatVec> m(static_cast<std::size_t>(dim), RatVec(n + 1, Rat(0)));
    for (int i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][j] = cols[j][static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(i)][n] = rhs[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (std::size_t col = 0; col < n && row < dim; ++col) {
        int piv = -1;
        for (int i = row; i < dim; ++i)
            if (m[static_cast<std::size_t>(i)][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(piv)]);
        Rat inv = m[static_cast<std::size_t>(row)][col];
        for (std::size_t j = col; j <= n; ++j) m[static_cast<std::size_t>(row)][j] /= inv;
        for (int i = 0; i < dim; ++i) {
            if (i == row) continue;
            Rat f = m[static_cast<std::size_t>(i)][col];
            if (f == 0) continue;
            for (std::size_t j = col; j <= n; ++j)
                m[static_cast<std::size_t>(i)][j] -= f * m[static_cast<std::size_t>(row)][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (int i = row; i < dim; ++i)
        if (m[static_cast<std::size_t>(i)][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int i = 0; i < row; ++i)
        x[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] = m[static_cast<std::size_t>(i)][n];
    return x;
}

std::optional<RatVec> solve_in_span(const std::vector<IntVec>& cols, const RatVec& rhs) {
    return solve_in_span(to_rat_columns(cols), rhs);
}

namespace {

struct HnfState {
    std::vector<IntVec> m; // columns, each of length dim
    std::vector<IntVec> u; // transform columns, length n
    int dim;

    void combine(std::size_t c0, std::size_t c1, const Int& s, const Int& t, const Int& mv,
                 const Int& mu) {
        // (col0, col1) <- (s*col0 + t*col1, -mv*col0 + mu*col1), det = +1
        auto apply = [&](std::vector<IntVec>& mat) {
            IntVec& a = mat[c0];
            IntVec& b = mat[c1];
            for (std::size_t i = 0; i < a.size(); ++i) {
                Int na = s * a[i] + t * b[i];
                Int nb = -mv * a[i] + mu * b[i];
                a[i] = std::move(na);
                b[i] = std::move(nb);
            }
        };
        apply(m);
        apply(u);
    }

    void negate(std::size_t c) {
        for (auto& v : m[c]) v = -v;
        for (auto& v : u[c]) v = -v;
    }

    void axpy(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m[dst].size(); ++i) m[dst][i] -= q * m[src][i];
        for (std::size_t i = 0; i < u[dst].size(); ++i) u[dst][i] -= q * u[src][i];
    }
};

// Column HNF with unimodular transform; returns rank.
int hnf_inplace(HnfState& st) {
    std::size_t n = st.m.size();
    std::size_t col = 0;
    for (int row = 0; row < st.dim && col < n; ++row) {
        std::size_t j0 = col;
        while (j0 < n && st.m[j0][static_cast<std::size_t>(row)] == 0) ++j0;
        if (j0 == n) continue;
        if (j0 != col) {
            std::swap(st.m[col], st.m[j0]);
            std::swap(st.u[col], st.u[j0]);
        }
        for (std::size_t j = col + 1; j < n; ++j) {
            const Int& a = st.m[col][static_cast<std::size_t>(row)];
            const Int& b = st.m[j][static_cast<std::size_t>(row)];
            if (b == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int mu, mv;
            mpz_divexact(mu.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(mv.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
            st.combine(col, j, s, t, mv, mu);
        }
        if (st.m[col][static_cast<std::size_t>(row)] < 0) st.negate(col);
        const Int& pivot = st.m[col][static_cast<std::size_t>(row)];
        for (std::size_t p = 0; p < col; ++p) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), st.m[p][static_cast<std::size_t>(row)].get_mpz_t(), pivot.get_mpz_t());
            st.axpy(p, col, q);
        }
        ++col;
    }
    return static_cast<int>(col);
}

HnfState make_state(const std::vector<IntVec>& cols, int dim) {
    HnfState st;
    st.dim = dim;
    st.m = cols;
    std::size_t n = cols.size();
    st.u.assign(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) st.u[i][i] = 1;
    return st;
}

} // namespace

std::vector<IntVec> hnf_basis(const std::vector<IntVec>& cols, int dim) {
    HnfState st = make_state(cols, dim);
    int rank = hnf_inplace(st);
    st.m.resize(static_cast<std::size_t>(rank));
    return st.m;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& map_columns, int codomain_dim) {
    std::size_t n = map_columns.size();
    HnfState st = make_state(map_columns, codomain_dim);
    int rank = hnf_inplace(st);
    std::vector<IntVec> kernel(st.u.begin() + rank, st.u.end());
    return hnf_basis(kernel, static_cast<int>(n));
}

std::vector<IntVec> saturate_lattice(const std::vector<RatVec>& generators, int dim) {
    if (generators.empty()) throw std::invalid_argument("saturate_lattice: no generators");
    std::vector<IntVec> cols;
    cols.reserve(generators.size());
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("saturate_lattice: generator of wrong dimension");
        Int lcm = 1;
        for (const auto& x : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        IntVec c(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            Rat scaled = g[i] * Rat(lcm);
            scaled.canonicalize();
            c[i] = scaled.get_num();
        }
        cols.push_back(std::move(c));
    }
    // rows of the orthogonal complement, then its kernel = saturation
    std::vector<IntVec> transpose_cols(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        IntVec col(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) col[i] = cols[i][static_cast<std::size_t>(j)];
        transpose_cols[static_cast<std::size_t>(j)] = std::move(col);
    }
    std::vector<IntVec> complement = integer_kernel(transpose_cols, static_cast<int>(cols.size()));
    if (complement.size() == static_cast<std::size_t>(dim))
        throw std::invalid_argument("saturate_lattice: generators span the zero subspace");
    std::vector<IntVec> comp_as_map(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        IntVec col(complement.size());
        for (std::size_t i = 0; i < complement.size(); ++i) col[i] = complement[i][static_cast<std::size_t>(j)];
        comp_as_map[static_cast<std::size_t>(j)] = std::move(col);
    }
    return integer_kernel(comp_as_map, static_cast<int>(complement.size()));
}

IntMatrix restrict_to_basis(const IntMatrix& a, const std::vector<IntVec>& basis) {
    int r = static_cast<int>(basis.size());
    IntMatrix b(r);
    for (int j = 0; j < r; ++j) {
        IntVec w = a * basis[static_cast<std::size_t>(j)];
        RatVec rhs(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) rhs[i] = Rat(w[i]);
        auto x = solve_in_span(basis, rhs);
        if (!x)
            throw std::invalid_argument("restrict_to_basis: span not invariant (image of column " +
                                        std::to_string(j) + " leaves the span)");
        for (int i = 0; i < r; ++i) {
            Rat& xi = (*x)[static_cast<std::size_t>(i)];
            xi.canonicalize();
            if (xi.get_den() != 1)
                throw std::invalid_argument("restrict_to_basis: non-integer coordinate; basis not saturated (column " +
                                            std::to_string(j) + ")");
            b.at(i, j) = xi.get_num();
        }
    }
    return b;
}

RatVec MinimalSubspace::from_coords(const RatVec& coords) const {
    RatVec out(static_cast<std::size_t>(ambient_dim), Rat(0));
    for (std::size_t j = 0; j < lattice_basis.size(); ++j)
        for (int i = 0; i < ambient_dim; ++i)
            out[static_cast<std::size_t>(i)] += Rat(lattice_basis[j][static_cast<std::size_t>(i)]) * coords[j];
    return out;
}

std::optional<RatVec> MinimalSubspace::to_coords(const RatVec& ambient) const {
    return solve_in_span(lattice_basis, ambient);
}

MinimalSubspace cyclic_subspace(const IntMatrix& a, const RatVec& v) {
    bool zero = true;
    for (const auto& x : v)
        if (x != 0) zero = false;
    if (zero) throw std::invalid_argument("cyclic_subspace: zero vector");
    if (static_cast<int>(v.size()) != a.dim)
        throw std::invalid_argument("cyclic_subspace: dimension mismatch");

    std::vector<RatVec> iterates{v};
    RatVec w = v;
    for (int i = 1; i < a.dim; ++i) {
        w = a * w;
        iterates.push_back(w);
        if (rank_of_columns(iterates, a.dim) < static_cast<int>(iterates.size())) {
            iterates.pop_back();
            break;
        }
    }
    MinimalSubspace ms;
    ms.ambient_dim = a.dim;
    ms.rank = static_cast<int>(iterates.size());
    ms.lattice_basis = saturate_lattice(iterates, a.dim);
    ms.restriction = restrict_to_basis(a, ms.lattice_basis);
    return ms;
}

namespace {

// dense rational polynomial helpers for the Bezout split
using RatPoly = std::vector<Rat>;

void rp_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rp_normalize(a);
    }
    return a;
}

RatPoly rp_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    // a - q*b
    RatPoly out = a;
    if (!q.empty() && !b.empty()) {
        out.resize(std::max(out.size(), q.size() + b.size() - 1), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    rp_normalize(out);
    return out;
}

RatPoly rp_quot(RatPoly a, const RatPoly& b) {
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rp_normalize(a);
    }
    return q;
}

// extended Euclid over Q[x]: g = s*a + t*b
void rp_xgcd(RatPoly a, RatPoly b, RatPoly& g, RatPoly& s, RatPoly& t) {
    RatPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    while (!b.empty()) {
        RatPoly q = rp_quot(a, b);
        RatPoly r = rp_sub_mul(a, q, b);
        RatPoly s2 = rp_sub_mul(s0, q, s1);
        RatPoly t2 = rp_sub_mul(t0, q, t1);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

std::vector<RatVec> rat_identity(int d) {
    std::vector<RatVec> m(static_cast<std::size_t>(d), RatVec(static_cast<std::size_t>(d), Rat(0)));
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

std::vector<RatVec> rat_mul(const std::vector<RatVec>& x, const std::vector<RatVec>& y) {
    int d = static_cast<int>(x.size());
    std::vector<RatVec> r(static_cast<std::size_t>(d), RatVec(static_cast<std::size_t>(d), Rat(0)));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const Rat& v = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (v == 0) continue;
            for (int j = 0; j < d; ++j)
                r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    v * y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    return r;
}

} // namespace

std::pair<RatVec, int> project_remark_b(const IntMatrix& a, const RatVec& v) {
    MinimalSubspace ms = cyclic_subspace(a, v);
    IntPoly p = char_poly(ms.restriction);
    int m = 0;
    while (m <= p.degree() && p.coeff(m) == 0) ++m;
    if (m == 0) return {v, 0};

    int r = ms.rank;
    RatPoly q(static_cast<std::size_t>(p.degree() - m) + 1);
    for (int i = m; i <= p.degree(); ++i) q[static_cast<std::size_t>(i - m)] = Rat(p.coeff(i));
    RatPoly xm(static_cast<std::size_t>(m) + 1, Rat(0));
    xm.back() = 1;
    RatPoly g, s, t;
    rp_xgcd(xm, q, g, s, t);
    if (g.size() != 1) throw InternalError("project_remark_b: x^m and q(x) not coprime");
    for (auto& c : s) c /= g[0]; // now s*x^m + (t/g)*q = 1

    // projection onto ker q(B) along ker B^m is s(B) * B^m
    std::vector<RatVec> bmat(static_cast<std::size_t>(r), RatVec(static_cast<std::size_t>(r), Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            bmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(ms.restriction.at(i, j));
    std::vector<RatVec> proj = rat_identity(r);
    // Horner for s(B)
    std::vector<RatVec> sb(static_cast<std::size_t>(r), RatVec(static_cast<std::size_t>(r), Rat(0)));
    for (std::size_t i = s.size(); i-- > 0;) {
        sb = rat_mul(sb, bmat);
        for (int k = 0; k < r; ++k) sb[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] += s[i];
    }
    proj = sb;
    for (int i = 0; i < m; ++i) proj = rat_mul(proj, bmat);

    auto coords = ms.to_coords(v);
    if (!coords) throw InternalError("project_remark_b: v not in its own cyclic span");
    RatVec pc(static_cast<std::size_t>(r), Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            pc[static_cast<std::size_t>(i)] +=
                proj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * (*coords)[static_cast<std::size_t>(j)];
    return {ms.from_coords(pc), m};
}

Rat collatz_wielandt_lower(const IntMatrix& a, const std::vector<Rat>& u) {
    if (!a.nonnegative()) throw std::invalid_argument("collatz_wielandt_lower: matrix has negative entries");
    if (static_cast<int>(u.size()) != a.dim)
        throw std::invalid_argument("collatz_wielandt_lower: dimension mismatch");
    for (const auto& x : u)
        if (x <= 0) throw std::invalid_argument("collatz_wielandt_lower: u must be positive");
    RatVec au = a * u;
    Rat best = au[0] / u[0];
    for (int i = 1; i < a.dim; ++i) best = std::min(best, Rat(au[static_cast<std::size_t>(i)] / u[static_cast<std::size_t>(i)]));
    return best;
}

bool is_primitive(const IntMatrix& a) {
    if (!a.nonnegative()) throw std::invalid_argument("is_primitive: matrix has negative entries");
    int d = a.dim;
    int w = (d - 1) * (d - 1) + 1;
    std::vector<bool> cur(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int i = 0; i < d * d; ++i) cur[static_cast<std::size_t>(i)] = (a.a[static_cast<std::size_t>(i)] != 0);
    auto mul = [d](const std::vector<bool>& x, const std::vector<bool>& y) {
        std::vector<bool> r(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), false);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (!x[static_cast<std::size_t>(i * d + k)]) continue;
                for (int j = 0; j < d; ++j)
                    if (y[static_cast<std::size_t>(k * d + j)]) r[static_cast<std::size_t>(i * d + j)] = true;
            }
        return r;
    };
    std::vector<bool> acc(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), false);
    for (int i = 0; i < d; ++i) acc[static_cast<std::size_t>(i * d + i)] = true;
    std::vector<bool> base = cur;
    int e = w;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    for (int i = 0; i < d * d; ++i)
        if (!acc[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::optional<int> is_degenerate(const IntMatrix& a) {
    bool all_zero = true;
    for (const auto& v : a.a)
        if (v != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("is_degenerate: zero matrix");
    std::vector<int> orders = unit_ratio_orders(char_poly(a));
    if (orders.empty()) return std::nullopt;
    return orders.front();
}

int nondegenerate_power(const IntMatrix& a) {
    bool all_zero = true;
    for (const auto& v : a.a)
        if (v != 0) all_zero = false;
    if (all_zero) return 1;
    std::vector<int> orders = unit_ratio_orders(char_poly(a));
    long k = 1;
    for (int o : orders) k = std::lcm(k, static_cast<long>(o));
    return static_cast<int>(k);
}

} // namespace specto
