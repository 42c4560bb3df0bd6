#include "specto/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "specto/parallel.hpp"
#include "specto/rng.hpp"

namespace specto {

LaurentPoly LaurentPoly::constant(int vars, Int c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms.emplace(std::vector<long>(static_cast<std::size_t>(vars), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(int vars, const std::vector<long>& e, Int c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms.emplace(e, std::move(c));
    return p;
}

void LaurentPoly::add_term(const std::vector<long>& e, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Int LaurentPoly::constant_term() const {
    auto it = terms.find(std::vector<long>(static_cast<std::size_t>(num_vars), 0));
    return it == terms.end() ? Int(0) : it->second;
}

bool LaurentPoly::conjugate_symmetric() const {
    for (const auto& [e, c] : terms) {
        std::vector<long> neg(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        auto it = terms.find(neg);
        if (it == terms.end() || it->second != c) return false;
    }
    return true;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, Int(-c));
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.num_vars);
    std::vector<long> e(static_cast<std::size_t>(a.num_vars));
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_vars == b.num_vars && a.terms == b.terms;
}

LaurentPoly conj(const LaurentPoly& a) {
    LaurentPoly r(a.num_vars);
    std::vector<long> e(static_cast<std::size_t>(a.num_vars));
    for (const auto& [ea, c] : a.terms) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = -ea[i];
        r.terms.emplace(e, c);
    }
    return r;
}

LaurentPoly squared_modulus(const LaurentPoly& a) { return a * conj(a); }

Cplx evaluate(const LaurentPoly& p, const std::vector<double>& s) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    Cplx acc = 0;
    for (const auto& [e, c] : p.terms) {
        double dot = 0;
        for (std::size_t i = 0; i < e.size(); ++i) dot += static_cast<double>(e[i]) * s[i];
        acc += c.get_d() * std::polar(1.0, -two_pi * dot);
    }
    return acc;
}

std::optional<LaurentPoly> divide_by_binomial(const LaurentPoly& p, const std::vector<long>& v) {
    bool vzero = true;
    for (long x : v)
        if (x != 0) vzero = false;
    if (vzero) throw std::invalid_argument("divide_by_binomial: zero direction");
    if (p.is_zero()) return LaurentPoly(p.num_vars);

    // pick a coordinate where v is nonzero to index positions along the ray
    std::size_t j0 = 0;
    while (v[j0] == 0) ++j0;

    struct ClassData {
        std::map<long, Int> by_t; // position along v -> coefficient
    };
    std::map<std::vector<long>, ClassData> classes; // canonical representative -> data
    for (const auto& [e, c] : p.terms) {
        long t;
        {
            long num = e[j0];
            long den = v[j0];
            // floor division
            t = num / den;
            if ((num % den != 0) && ((num < 0) != (den < 0))) --t;
        }
        std::vector<long> rep(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) rep[i] = e[i] - t * v[i];
        classes[rep].by_t[t] += c;
    }

    LaurentPoly q(p.num_vars);
    std::vector<long> e(static_cast<std::size_t>(p.num_vars));
    for (const auto& [rep, data] : classes) {
        // p_class = (x^v - 1) * q_class needs coefficients c_t = q_{t-1} - q_t
        // with q supported on [t_min, t_max-1]; solve downward and require the
        // residual to vanish.
        long t_max = data.by_t.rbegin()->first;
        long t_min = data.by_t.begin()->first;
        Int carry = 0; // carry = q_{t-1} while descending
        for (long t = t_max; t >= t_min; --t) {
            auto it = data.by_t.find(t);
            Int c = (it == data.by_t.end()) ? Int(0) : it->second;
            carry += c; // q_{t-1} = c_t + q_t
            if (t == t_min) {
                if (carry != 0) return std::nullopt; // nonzero residual: not divisible
            } else {
                if (carry != 0) {
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rep[i] + (t - 1) * v[i];
                    q.add_term(e, carry);
                }
            }
        }
    }
    return q;
}

std::vector<long> ClearingFactor::combined() const {
    std::vector<long> e(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) e[i] = a * w[i];
    return e;
}

LaurentPoly clearing_binomial(const ClearingFactor& c, int vars) {
    bool zero = true;
    for (long x : c.w)
        if (x != 0) zero = false;
    if (zero || c.a < 1) throw std::invalid_argument("clearing factor must have w != 0 and a >= 1");
    if (static_cast<int>(c.w.size()) != vars)
        throw std::invalid_argument("clearing factor dimension mismatch");
    LaurentPoly p(vars);
    p.add_term(c.combined(), Int(1));
    p.add_term(std::vector<long>(static_cast<std::size_t>(vars), 0), Int(-1));
    return p;
}

std::vector<GeometricRun> decompose_runs(const std::vector<FreqTerm>& entry) {
    // classes of equal multiplicity are decomposed independently
    std::map<long, std::vector<std::vector<long>>> classes;
    for (const FreqTerm& t : entry) classes[t.mult].push_back(t.freq);

    std::vector<GeometricRun> runs;
    for (auto& [mult, freqs] : classes) {
        std::sort(freqs.begin(), freqs.end());
        std::set<std::vector<long>> pool(freqs.begin(), freqs.end());
        for (const auto& f : freqs) {
            if (pool.find(f) == pool.end()) continue;
            // longest arithmetic progression starting at f (the lex-smallest
            // remaining element, so every step is lex-positive)
            GeometricRun best;
            best.start = f;
            best.mult = mult;
            for (const auto& g : pool) {
                if (g == f) continue;
                std::vector<long> step(g.size());
                for (std::size_t i = 0; i < g.size(); ++i) step[i] = g[i] - f[i];
                long len = 1;
                std::vector<long> cur = f;
                for (;;) {
                    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += step[i];
                    if (pool.find(cur) == pool.end()) break;
                    ++len;
                }
                if (len > best.len || (len == best.len && (best.step.empty() || step < best.step))) {
                    best.len = len;
                    best.step = step;
                }
            }
            if (best.len < 2) best.step.clear();
            std::vector<long> cur = f;
            pool.erase(cur);
            for (long i = 1; i < best.len; ++i) {
                for (std::size_t k = 0; k < cur.size(); ++k) cur[k] += best.step[k];
                pool.erase(cur);
            }
            runs.push_back(std::move(best));
        }
    }
    return runs;
}

namespace {

ClearingFactor normalize_step(const std::vector<long>& step) {
    long g = 0;
    for (long x : step) g = std::gcd(g, x);
    ClearingFactor c;
    c.a = g;
    c.w.resize(step.size());
    for (std::size_t i = 0; i < step.size(); ++i) c.w[i] = step[i] / g;
    return c;
}

} // namespace

std::vector<ClearingFactor> detect_geometric_runs(const SymbolMatrix& sym) {
    std::set<ClearingFactor> found;
    for (const auto& entry : sym.entries)
        for (const GeometricRun& r : decompose_runs(entry))
            if (r.len >= 2) found.insert(normalize_step(r.step));
    return {found.begin(), found.end()};
}

LaurentPoly gram_polynomial(const SymbolMatrix& sym) {
    LaurentPoly g(sym.num_vars);
    for (const auto& entry : sym.entries) {
        LaurentPoly e(sym.num_vars);
        for (const FreqTerm& t : entry) e.add_term(t.freq, Int(t.mult));
        g = g + squared_modulus(e);
    }
    return g;
}

double log_of(const Int& v) {
    if (v <= 0) throw std::invalid_argument("log_of: nonpositive value");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * 0.69314718055994530941723212145818;
}

CertifiedBound jensen_bound(const Substitution& z, const MinimalSubspace& v, int k) {
    if (k < 1) throw std::invalid_argument("jensen_bound: k must be >= 1");
    Substitution zk = power(z, k);
    SymbolMatrix sym = essential_symbol(build_symbol(zk), v);
    CertifiedBound out;
    out.constant_term = gram_polynomial(sym).constant_term();
    out.k = k;
    out.bound = log_of(out.constant_term) / (2.0 * k);
    out.method = "jensen";
    return out;
}

LaurentPoly cleared_gram(const SymbolMatrix& sym, const std::vector<ClearingFactor>& clearings,
                         bool strict) {
    int vars = sym.num_vars;
    LaurentPoly d = LaurentPoly::constant(vars, 1);
    for (const ClearingFactor& c : clearings) d = d * clearing_binomial(c, vars);

    LaurentPoly total(vars);
    for (int b = 0; b < sym.dim; ++b)
        for (int col = 0; col < sym.dim; ++col) {
            const auto& entry = sym.entry(b, col);
            if (entry.empty()) continue;
            LaurentPoly numer(vars);
            for (const GeometricRun& run : decompose_runs(entry)) {
                if (run.len == 1) {
                    numer = numer + LaurentPoly::monomial(vars, run.start, Int(run.mult)) * d;
                    continue;
                }
                auto quotient = divide_by_binomial(d, run.step);
                if (!quotient) {
                    if (strict) {
                        std::ostringstream os;
                        os << "cleared_jensen_bound: clearing product not divisible by the run "
                              "denominator of entry ("
                           << b << "," << col << ")";
                        throw std::invalid_argument(os.str());
                    }
                    // keep the run expanded; the factor still has Mahler measure 0
                    LaurentPoly expanded(vars);
                    std::vector<long> cur = run.start;
                    for (long i = 0; i < run.len; ++i) {
                        expanded.add_term(cur, Int(run.mult));
                        for (std::size_t t = 0; t < cur.size(); ++t) cur[t] += run.step[t];
                    }
                    numer = numer + expanded * d;
                    continue;
                }
                // x^start (x^{len*step} - 1) * (D / (x^step - 1))
                LaurentPoly closed(vars);
                std::vector<long> top(run.start.size());
                for (std::size_t t = 0; t < top.size(); ++t)
                    top[t] = run.start[t] + run.len * run.step[t];
                closed.add_term(top, Int(run.mult));
                closed.add_term(run.start, Int(-run.mult));
                numer = numer + closed * (*quotient);
            }
            total = total + squared_modulus(numer);
        }
    return total;
}

CertifiedBound cleared_jensen_bound(const SymbolMatrix& sym,
                                    const std::vector<ClearingFactor>& clearings, int k,
                                    bool strict) {
    if (k < 1) throw std::invalid_argument("cleared_jensen_bound: k must be >= 1");
    CertifiedBound out;
    out.k = k;
    out.clearings = clearings;
    out.constant_term = cleared_gram(sym, clearings, strict).constant_term();
    out.bound = log_of(out.constant_term) / (2.0 * k);
    out.method = clearings.empty() ? "jensen" : "cleared";
    return out;
}

CertifiedBound best_certified_bound(const SymbolMatrix& sym, int k) {
    std::vector<ClearingFactor> proposals = detect_geometric_runs(sym);
    // keep the subset enumeration tractable; proposals beyond the cap are
    // dropped deterministically (sorted order)
    const std::size_t cap = 10;
    if (proposals.size() > cap) proposals.resize(cap);
    std::size_t n = proposals.size();
    CertifiedBound best;
    bool have = false;
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << n); ++mask) {
        std::vector<ClearingFactor> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (static_cast<std::size_t>(1) << i)) subset.push_back(proposals[i]);
        CertifiedBound cand = cleared_jensen_bound(sym, subset, k, false);
        if (!have || cand.constant_term < best.constant_term ||
            (cand.constant_term == best.constant_term && subset.size() < best.clearings.size())) {
            best = std::move(cand);
            have = true;
        }
    }
    if (!have) best = cleared_jensen_bound(sym, {}, k, false);
    return best;
}

CertifiedBound majorant_bound(const SymbolMatrix& sym, const LaurentPoly& majorant,
                              const std::vector<ClearingFactor>& clearings, int grid_per_dim,
                              double tol) {
    int r = sym.num_vars;
    if (majorant.num_vars != r) throw std::invalid_argument("majorant_bound: variable count mismatch");
    if (grid_per_dim < 2) throw std::invalid_argument("majorant_bound: grid too small");
    double total_points = std::pow(static_cast<double>(grid_per_dim), r);
    if (total_points > 2e7)
        throw std::invalid_argument("majorant_bound: grid of " + std::to_string(grid_per_dim) + "^" +
                                    std::to_string(r) + " points is too large; configure a smaller grid");

    LaurentPoly lhs = cleared_gram(sym, clearings, false);

    // twiddle table over the grid: exp(-2*pi*i*j/N)
    long n = grid_per_dim;
    std::vector<Cplx> tw(static_cast<std::size_t>(n));
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (long j = 0; j < n; ++j) tw[static_cast<std::size_t>(j)] = std::polar(1.0, -two_pi * static_cast<double>(j) / static_cast<double>(n));

    struct Term {
        std::vector<long> e; // reduced mod n, nonnegative
        double c;
    };
    auto prep = [&](const LaurentPoly& p) {
        std::vector<Term> out;
        out.reserve(p.terms.size());
        for (const auto& [e, c] : p.terms) {
            Term t;
            t.e.resize(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) t.e[i] = ((e[i] % n) + n) % n;
            t.c = c.get_d();
            out.push_back(std::move(t));
        }
        return out;
    };
    std::vector<Term> tl = prep(lhs), tr = prep(majorant);

    std::vector<long> idx(static_cast<std::size_t>(r), 0);
    double worst_gap = -1e300;
    std::vector<long> worst_idx(static_cast<std::size_t>(r), 0);
    bool violated = false;
    for (;;) {
        auto value = [&](const std::vector<Term>& ts) {
            Cplx acc = 0;
            for (const Term& t : ts) {
                long phase = 0;
                for (int i = 0; i < r; ++i) phase = (phase + t.e[static_cast<std::size_t>(i)] * idx[static_cast<std::size_t>(i)]) % n;
                acc += t.c * tw[static_cast<std::size_t>(phase)];
            }
            return acc.real();
        };
        double gap = value(tl) - value(tr);
        if (gap > worst_gap) {
            worst_gap = gap;
            worst_idx = idx;
        }
        if (gap > tol) violated = true;
        int dim = 0;
        for (; dim < r; ++dim) {
            if (++idx[static_cast<std::size_t>(dim)] < n) break;
            idx[static_cast<std::size_t>(dim)] = 0;
        }
        if (dim == r) break;
    }
    if (violated) {
        std::ostringstream os;
        os << "majorant_bound: majorant violated by " << worst_gap << " at grid point (";
        for (int i = 0; i < r; ++i)
            os << (i ? "," : "") << worst_idx[static_cast<std::size_t>(i)] << "/" << n;
        os << ")";
        throw std::runtime_error(os.str());
    }

    CertifiedBound out;
    out.k = 1;
    out.clearings = clearings;
    out.constant_term = majorant.constant_term();
    out.bound = log_of(out.constant_term) / 2.0;
    out.method = "majorant-grid";
    std::ostringstream os;
    os << "grid " << n << "^" << r << ", worst margin " << -worst_gap;
    out.note = os.str();
    return out;
}

LaurentPoly family3_majorant(long m, long k) {
    // (2+2k)|z0^m - 1|^2 + (4k^2+2k+3)|z0 - 1|^2 + |1+z1|^2 |z0-1|^2,
    // constant term (2+2k)*2 + (4k^2+2k+3)*2 + 4 = 8k^2 + 8k + 14
    auto abs2_binomial = [](long e0, long e1, long sign) {
        // |x^(e0,e1) + sign|^2 = 2 + sign*(x^e + x^-e)
        LaurentPoly p(2);
        p.add_term({0, 0}, Int(2));
        p.add_term({e0, e1}, Int(sign));
        p.add_term({-e0, -e1}, Int(sign));
        return p;
    };
    LaurentPoly out(2);
    out = LaurentPoly::constant(2, Int(2 + 2 * k)) * abs2_binomial(m, 0, -1);
    out = out + LaurentPoly::constant(2, Int(4 * k * k + 2 * k + 3)) * abs2_binomial(1, 0, -1);
    out = out + abs2_binomial(0, 1, +1) * abs2_binomial(1, 0, -1);
    return out;
}

QuadratureEstimate quadrature_log_norm(const SymbolMatrix& sym, const IntMatrix& e, int k,
                                       long samples, std::uint64_t seed, int threads) {
    if (samples < 100) throw std::invalid_argument("quadrature_log_norm: need at least 100 samples");
    if (k < 1) throw std::invalid_argument("quadrature_log_norm: k must be >= 1");
    if (e.dim != sym.num_vars)
        throw std::invalid_argument("quadrature_log_norm: endomorphism does not match symbol");

    // exact dyadic orbit: enough bits that k steps stay faithful
    Int row_bound = 0;
    for (int i = 0; i < e.dim; ++i) {
        Int row = 0;
        for (int j = 0; j < e.dim; ++j) row += abs(e.at(i, j));
        row_bound = std::max(row_bound, row);
    }
    int step_bits = 1;
    while ((Int(1) << step_bits) < row_bound) ++step_bits;
    int bits = 128 + k * (step_bits + 1);

    CounterRng rng = make_rng(seed, RngStream::QuadratureSample);
    int r = sym.num_vars;
    std::vector<double> values(static_cast<std::size_t>(samples));
    parallel_for_index(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
        std::vector<std::vector<std::uint64_t>> limbs;
        limbs.reserve(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c)
            limbs.push_back(rng.limbs(i * static_cast<std::size_t>(r) + static_cast<std::size_t>(c), bits));
        FixedTorusPoint s = FixedTorusPoint::from_limbs(bits, limbs);
        ComplexMatrix prod = ComplexMatrix::identity(sym.dim);
        double logsum = 0;
        for (int step = 0; step < k; ++step) {
            prod = evaluate(sym, s.to_doubles()) * prod;
            double nf = prod.frobenius();
            logsum += std::log(nf);
            prod.scale(1.0 / nf);
            s.step(e);
        }
        values[i] = logsum / k;
    });

    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(samples);
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(samples - 1);
    QuadratureEstimate out;
    out.estimate = mean;
    out.std_error = std::sqrt(var / static_cast<double>(samples));
    out.k = k;
    out.samples = samples;
    out.seed = seed;
    return out;
}

double mahler_midpoint_check(long n) {
    if (n < 1) throw std::invalid_argument("mahler_midpoint_check: n must be >= 1");
    constexpr double two_pi = 6.283185307179586476925286766559;
    double acc = 0;
    for (long j = 0; j < n; ++j) {
        double t = (static_cast<double>(j) + 0.5) / static_cast<double>(n);
        acc += std::log(2.0 - 2.0 * std::cos(two_pi * t));
    }
    return acc / static_cast<double>(n);
}

} // namespace specto
