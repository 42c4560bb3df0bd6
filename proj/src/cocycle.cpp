#include "specto/cocycle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace specto {

ComplexMatrix ComplexMatrix::identity(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

double ComplexMatrix::frobenius() const {
    double s = 0;
    for (const Cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

void ComplexMatrix::scale(double s) {
    for (Cplx& v : a) v *= s;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("complex matrix product: dimension mismatch");
    ComplexMatrix r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            Cplx v = x.at(i, k);
            if (v == Cplx(0)) continue;
            for (int j = 0; j < x.dim; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

long SymbolMatrix::row_weight(int b) const {
    long w = 0;
    for (int c = 0; c < dim; ++c)
        for (const FreqTerm& t : entry(b, c)) w += t.mult;
    return w;
}

namespace {

std::vector<FreqTerm> collect(std::map<std::vector<long>, long>& acc) {
    std::vector<FreqTerm> out;
    out.reserve(acc.size());
    for (auto& [f, m] : acc) out.push_back(FreqTerm{f, m});
    return out;
}

} // namespace

SymbolMatrix build_symbol(const Substitution& z) {
    z.validate();
    int d = z.alphabet_size;
    SymbolMatrix sym;
    sym.dim = d;
    sym.num_vars = d;
    std::vector<std::map<std::vector<long>, long>> acc(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int b = 0; b < d; ++b) {
        std::vector<long> prefix(static_cast<std::size_t>(d), 0);
        for (int c : z.rules[static_cast<std::size_t>(b)]) {
            acc[static_cast<std::size_t>(b * d + c)][prefix] += 1;
            prefix[static_cast<std::size_t>(c)] += 1;
        }
    }
    sym.entries.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) sym.entries[i] = collect(acc[i]);
    return sym;
}

SymbolMatrix essential_symbol(const SymbolMatrix& sym, const MinimalSubspace& v) {
    if (sym.num_vars != v.ambient_dim)
        throw std::invalid_argument("essential_symbol: symbol variables do not match the ambient dimension");
    SymbolMatrix out;
    out.dim = sym.dim;
    out.num_vars = v.rank;
    out.entries.resize(sym.entries.size());
    for (std::size_t e = 0; e < sym.entries.size(); ++e) {
        std::map<std::vector<long>, long> acc;
        for (const FreqTerm& t : sym.entries[e]) {
            std::vector<long> g(static_cast<std::size_t>(v.rank), 0);
            for (int j = 0; j < v.rank; ++j) {
                Int s = 0;
                for (int i = 0; i < v.ambient_dim; ++i)
                    s += v.lattice_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                         t.freq[static_cast<std::size_t>(i)];
                if (!s.fits_slong_p()) throw InternalError("essential_symbol: frequency overflow");
                g[static_cast<std::size_t>(j)] = s.get_si();
            }
            acc[g] += t.mult;
        }
        out.entries[e] = collect(acc);
    }
    return out;
}

ComplexMatrix evaluate(const SymbolMatrix& sym, const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != sym.num_vars)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    constexpr double two_pi = 6.283185307179586476925286766559;
    ComplexMatrix m(sym.dim);
    for (int b = 0; b < sym.dim; ++b)
        for (int c = 0; c < sym.dim; ++c) {
            Cplx s = 0;
            for (const FreqTerm& t : sym.entry(b, c)) {
                double dot = 0;
                for (std::size_t k = 0; k < t.freq.size(); ++k)
                    dot += static_cast<double>(t.freq[k]) * point[k];
                s += static_cast<double>(t.mult) * std::polar(1.0, -two_pi * dot);
            }
            m.at(b, c) = s;
        }
    return m;
}

ComplexMatrix cocycle_product(const SymbolMatrix& sym, const IntMatrix& e,
                              const std::vector<double>& s, int n) {
    if (e.dim != sym.num_vars)
        throw std::invalid_argument("cocycle_product: endomorphism does not match symbol variables");
    if (n < 1) throw std::invalid_argument("cocycle_product: n must be >= 1");
    std::vector<double> x = s;
    ComplexMatrix prod = evaluate(sym, x);
    for (int step = 1; step < n; ++step) {
        std::vector<double> next(x.size(), 0.0);
        for (int i = 0; i < e.dim; ++i) {
            double acc = 0;
            for (int j = 0; j < e.dim; ++j) acc += e.at(i, j).get_d() * x[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = acc - std::floor(acc);
        }
        x = std::move(next);
        prod = evaluate(sym, x) * prod;
    }
    return prod;
}

FixedTorusPoint FixedTorusPoint::zero(int bits, int dim) {
    FixedTorusPoint p;
    p.bits = bits;
    p.coords.assign(static_cast<std::size_t>(dim), Int(0));
    return p;
}

FixedTorusPoint FixedTorusPoint::from_limbs(int bits, const std::vector<std::vector<std::uint64_t>>& limbs) {
    FixedTorusPoint p;
    p.bits = bits;
    p.coords.reserve(limbs.size());
    for (const auto& words : limbs) {
        Int v = 0;
        for (std::size_t w = words.size(); w-- > 0;) {
            v <<= 64;
            v += Int(static_cast<unsigned long>(words[w]));
        }
        mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        p.coords.push_back(std::move(v));
    }
    return p;
}

void FixedTorusPoint::step(const IntMatrix& e) {
    if (e.dim != static_cast<int>(coords.size()))
        throw std::invalid_argument("FixedTorusPoint::step: dimension mismatch");
    std::vector<Int> next(coords.size(), Int(0));
    for (int i = 0; i < e.dim; ++i) {
        Int acc = 0;
        for (int j = 0; j < e.dim; ++j) acc += e.at(i, j) * coords[static_cast<std::size_t>(j)];
        mpz_fdiv_r_2exp(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        next[static_cast<std::size_t>(i)] = std::move(acc);
    }
    coords = std::move(next);
}

std::vector<double> FixedTorusPoint::to_doubles() const {
    std::vector<double> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        // leading 64 bits are plenty for trigonometric evaluation
        Int top = coords[i] >> (bits > 64 ? bits - 64 : 0);
        double denom = std::ldexp(1.0, bits > 64 ? 64 : bits);
        out[i] = top.get_d() / denom;
        if (out[i] >= 1.0) out[i] = std::nextafter(1.0, 0.0);
    }
    return out;
}

} // namespace specto
