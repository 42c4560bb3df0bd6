#include "specto/int_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace specto {

IntPoly IntPoly::x_power(int k, Int lead) {
    std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
    c.back() = std::move(lead);
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
    if (s == 0) return IntPoly();
    std::vector<Int> c = a.c;
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) { return Int(-1) * a; }

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<Int> c(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) c[i - 1] = Int(static_cast<long>(i)) * p.c[i];
    return IntPoly(std::move(c));
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& v : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> c = p.c;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree()) return std::nullopt;
    std::vector<Int> rem = p.c;
    std::vector<Int> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Int(0));
    const Int& lead = q.leading();
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + q.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Int f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quot[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= q.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= f * q.c[static_cast<std::size_t>(i)];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& q, const IntPoly& p) { return divide_exact(p, q).has_value(); }

namespace {

// Pseudo-remainder: lc(b)^(da-db+1) * a mod b, exact in Z[x].
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int top = a.leading();
        for (auto& v : a.c) v *= lb;
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<std::size_t>(shift + i)] -= top * b.c[static_cast<std::size_t>(i)];
        a.normalize();
    }
    return a;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v);
        u = std::move(v);
        v = r.is_zero() ? IntPoly() : primitive_part(r);
    }
    return cg * u;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    IntPoly pp = primitive_part(p);
    if (pp.degree() < 1) return IntPoly::constant(1);
    IntPoly g = poly_gcd(pp, derivative(pp));
    auto q = divide_exact(pp, g);
    if (!q) throw InternalError("squarefree_part: gcd does not divide the polynomial");
    return *q;
}

Int eval(const IntPoly& p, const Int& x) {
    Int r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

Rat eval(const IntPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

namespace {

// ~106-bit conversion: exact for |v| < 2^53, two-term split beyond.
long double to_ld(const Int& v) {
    double hi = v.get_d();
    Int hi_int(hi);
    double lo = Int(v - hi_int).get_d();
    return static_cast<long double>(hi) + static_cast<long double>(lo);
}

} // namespace

std::complex<long double> eval(const IntPoly& p, std::complex<long double> x) {
    std::complex<long double> r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + to_ld(*it);
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = coeff(i);
        if (v == 0) continue;
        Int a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

long euler_phi(long k) {
    long res = k, n = k;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            res -= res / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) res -= res / n;
    return res;
}

namespace {

// assumes the cache lock is held; fills every divisor of k on the way up
const IntPoly& cyclotomic_locked(int k, std::map<int, IntPoly>& cache) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // x^k - 1 divided by all lower cyclotomics at divisors of k
    std::vector<Int> xk(static_cast<std::size_t>(k) + 1, Int(0));
    xk[0] = -1;
    xk.back() = 1;
    IntPoly num{std::move(xk)};
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto q = divide_exact(num, cyclotomic_locked(d, cache));
        if (!q) throw InternalError("cyclotomic: recursive division failed");
        num = std::move(*q);
    }
    return cache.emplace(k, std::move(num)).first->second;
}

} // namespace

const IntPoly& cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic: k must be >= 1");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    std::scoped_lock lk(mu);
    return cyclotomic_locked(k, cache);
}

std::optional<int> has_unit_root(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("has_unit_root: zero polynomial");
    int d = p.degree();
    if (d < 1) return std::nullopt;
    long kmax = 2L * d * d + 2;
    for (long k = 1; k <= kmax; ++k) {
        if (euler_phi(k) > d) continue;
        if (divides(cyclotomic(static_cast<int>(k)), p)) return static_cast<int>(k);
    }
    return std::nullopt;
}

namespace {

// Fraction-free determinant (Bareiss). Destroys its argument.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        const Int& pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                            m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_divexact(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(),
                             t.get_mpz_t(), prev.get_mpz_t());
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = pivot;
    }
    Int det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? Int(-det) : det;
}

// Newton interpolation at integer nodes; the result must be integral.
IntPoly interpolate_integer(const std::vector<Int>& nodes, const std::vector<Int>& values) {
    std::size_t n = nodes.size();
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(values[i]);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    std::vector<Rat> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly = poly*(x - nodes[i]) + dd[i]
        poly.insert(poly.begin(), Rat(0));
        Rat node(nodes[i]);
        for (std::size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= node * poly[j + 1];
        poly[0] += dd[i];
    }
    std::vector<Int> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        poly[i].canonicalize();
        if (poly[i].get_den() != 1)
            throw InternalError("interpolate_integer: non-integral coefficient");
        out[i] = poly[i].get_num();
    }
    return IntPoly(std::move(out));
}

} // namespace

IntPoly ratio_poly(const IntPoly& q) {
    int d = q.degree();
    if (d < 2) return IntPoly::constant(1);
    if (!q.is_monic()) throw InternalError("ratio_poly: expected a monic polynomial");
    if (q.coeff(0) == 0) throw InternalError("ratio_poly: expected a nonzero constant term");

    // R(t) = det(q(t*C)) with C the companion matrix of q; R has degree d^2
    // and vanishes at each eigenvalue ratio.
    int deg_r = d * d;
    std::vector<Int> nodes, values;
    nodes.reserve(static_cast<std::size_t>(deg_r) + 1);
    for (int j = 0; j <= deg_r; ++j) nodes.emplace_back(j - deg_r / 2);

    auto mat_mul = [d](const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b) {
        std::vector<std::vector<Int>> c(static_cast<std::size_t>(d),
                                        std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                const Int& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (v == 0) continue;
                for (int j = 0; j < d; ++j)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        v * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
        return c;
    };

    for (const Int& t : nodes) {
        // M = t * companion(q)
        std::vector<std::vector<Int>> m(static_cast<std::size_t>(d),
                                        std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
        for (int i = 0; i + 1 < d; ++i) m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = t;
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] = -t * q.coeff(i);
        // Horner: X = q(M)
        std::vector<std::vector<Int>> x(static_cast<std::size_t>(d),
                                        std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
        for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int i = d - 1; i >= 0; --i) {
            x = mat_mul(x, m);
            for (int r = 0; r < d; ++r)
                x[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] += q.coeff(i);
        }
        values.push_back(bareiss_det(x));
    }

    IntPoly r = interpolate_integer(nodes, values);
    // peel off the d trivial ratio-1 roots coming from pairing a root with itself
    IntPoly xm1({Int(-1), Int(1)});
    for (int i = 0; i < d; ++i) {
        auto qq = divide_exact(r, xm1);
        if (!qq) throw InternalError("ratio_poly: (x-1)^d division failed");
        r = std::move(*qq);
    }
    return r;
}

std::vector<int> unit_ratio_orders(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("unit_ratio_orders: zero polynomial");
    IntPoly sf = squarefree_part(p);
    // drop zero roots: ratios involving 0 are never roots of unity
    std::size_t shift = 0;
    while (shift < sf.c.size() && sf.c[shift] == 0) ++shift;
    if (shift > 0) sf = IntPoly(std::vector<Int>(sf.c.begin() + static_cast<long>(shift), sf.c.end()));
    if (sf.degree() < 2) return {};
    if (sf.leading() < 0) sf = -sf;
    IntPoly r = ratio_poly(sf);
    int dr = r.degree();
    if (dr < 1) return {};
    std::vector<int> orders;
    long kmax = 2L * dr * dr + 2;
    for (long k = 1; k <= kmax; ++k) {
        if (euler_phi(k) > dr) continue;
        if (divides(cyclotomic(static_cast<int>(k)), r)) orders.push_back(static_cast<int>(k));
    }
    return orders;
}

RootSet roots_numeric(const IntPoly& p, long double target_radius) {
    if (p.is_zero()) throw std::invalid_argument("roots_numeric: zero polynomial");
    int d = p.degree();
    RootSet out;
    if (d < 1) return out;

    using C = std::complex<long double>;
    std::vector<C> a(static_cast<std::size_t>(d) + 1);
    long double lead = to_ld(p.leading());
    for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = to_ld(p.coeff(i)) / lead;

    auto horner = [&](C z, C& val, C& der) {
        val = a[static_cast<std::size_t>(d)];
        der = 0;
        for (int i = d - 1; i >= 0; --i) {
            der = der * z + val;
            val = val * z + a[static_cast<std::size_t>(i)];
        }
    };

    long double bound = 0;
    for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(i)]));
    bound += 1;

    std::vector<C> z(static_cast<std::size_t>(d));
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < d; ++i) {
        long double ang = 2 * pi * (static_cast<long double>(i) + 0.25L) / d + 0.42L;
        z[static_cast<std::size_t>(i)] = 0.7L * bound * C(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0;
        for (int i = 0; i < d; ++i) {
            C val, der;
            horner(z[static_cast<std::size_t>(i)], val, der);
            if (std::abs(val) == 0) continue;
            C newton = (std::abs(der) == 0) ? C(1e-3L, 1e-3L) : val / der;
            C s = 0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                C diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-30L) diff = C(1e-30L, 0);
                s += C(1, 0) / diff;
            }
            C denom = C(1, 0) - newton * s;
            C w = (std::abs(denom) < 1e-30L) ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-21L * bound) break;
    }

    // Newton polish + a posteriori radius d*|p/p'| (valid for simple roots),
    // padded by a safety factor.
    std::vector<RootBox> boxes(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        C zi = z[static_cast<std::size_t>(i)];
        for (int k = 0; k < 3; ++k) {
            C val, der;
            horner(zi, val, der);
            if (std::abs(der) == 0) break;
            zi -= val / der;
        }
        C val, der;
        horner(zi, val, der);
        long double rad = (std::abs(der) == 0) ? 1e300L
                                               : 8.0L * d * std::abs(val) / std::abs(der);
        rad = std::max(rad, std::abs(zi) * 1e-17L + 1e-18L);
        boxes[static_cast<std::size_t>(i)] = RootBox{zi, rad, false};
    }

    // snap exactly representable integer roots (char polys are monic, so all
    // rational roots are integers)
    for (auto& b : boxes) {
        long double re = b.center.real();
        if (std::abs(b.center.imag()) > std::max(b.radius, 1e-9L)) continue;
        if (std::abs(re) > 4e18L) continue;
        long long n = std::llroundl(re);
        if (std::abs(re - static_cast<long double>(n)) > std::max(b.radius, 1e-9L)) continue;
        if (eval(p, Int(static_cast<long>(n))) == 0) {
            b.center = C(static_cast<long double>(n), 0);
            b.radius = 0;
            b.exact = true;
        }
    }

    std::sort(boxes.begin(), boxes.end(), [](const RootBox& x, const RootBox& y) {
        long double mx = std::abs(x.center), my = std::abs(y.center);
        if (mx != my) return mx > my;
        if (x.center.real() != y.center.real()) return x.center.real() > y.center.real();
        return x.center.imag() < y.center.imag();
    });

    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j) {
            long double dist = std::abs(boxes[i].center - boxes[j].center);
            if (dist <= boxes[i].radius + boxes[j].radius)
                throw std::runtime_error("roots_numeric: root boxes overlap (input not squarefree?)");
        }

    long double achieved = 0;
    for (const auto& b : boxes) achieved = std::max(achieved, b.radius);
    if (achieved > target_radius)
        throw std::runtime_error("roots_numeric: target radius " + std::to_string(static_cast<double>(target_radius)) +
                                 " unachievable, achieved " + std::to_string(static_cast<double>(achieved)));

    out.boxes = std::move(boxes);
    long double maxmod = 0;
    for (const auto& b : out.boxes) maxmod = std::max(maxmod, std::abs(b.center));
    int candidate = -1;
    int hits = 0;
    for (std::size_t i = 0; i < out.boxes.size(); ++i) {
        if (std::abs(out.boxes[i].center) >= maxmod * (1 - 1e-12L)) {
            ++hits;
            candidate = static_cast<int>(i);
        }
    }
    if (hits == 1 && out.boxes[static_cast<std::size_t>(candidate)].is_real() &&
        out.boxes[static_cast<std::size_t>(candidate)].center.real() > 0)
        out.perron = candidate;
    return out;
}

IntPoly minimal_poly_of_root(const IntPoly& p, const RootBox& box) {
    IntPoly sf = squarefree_part(p);
    if (sf.leading() < 0) sf = -sf;
    if (box.exact) {
        Int n(box.center.real() >= 0 ? static_cast<long>(std::llroundl(box.center.real()))
                                     : static_cast<long>(std::llroundl(box.center.real())));
        IntPoly lin({Int(-n), Int(1)});
        if (divides(lin, sf)) return lin;
    }

    RootSet rs = roots_numeric(sf, 1e-8L);
    int d = sf.degree();
    int i0 = -1;
    long double best = 1e300L;
    for (int i = 0; i < d; ++i) {
        long double dist = std::abs(rs.boxes[static_cast<std::size_t>(i)].center - box.center);
        if (dist < best) {
            best = dist;
            i0 = i;
        }
    }
    long double scale = 1 + std::abs(box.center);
    if (i0 < 0 || best > box.radius + rs.boxes[static_cast<std::size_t>(i0)].radius + 1e-6L * scale)
        throw std::invalid_argument("minimal_poly_of_root: box does not isolate a root of p");

    std::vector<int> others;
    for (int i = 0; i < d; ++i)
        if (i != i0) others.push_back(i);

    // subsets containing the boxed root, by increasing size; every candidate
    // is verified by exact division, so a wrong rounding cannot survive
    for (int size = 1; size <= d; ++size) {
        int pick = size - 1;
        std::vector<int> idx(static_cast<std::size_t>(pick));
        for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::vector<std::complex<long double>> prod{1};
            auto mul_root = [&](std::complex<long double> r) {
                prod.push_back(prod.back());
                for (std::size_t j = prod.size() - 2; j > 0; --j)
                    prod[j] = prod[j - 1] - r * prod[j];
                prod[0] = -r * prod[0];
            };
            mul_root(rs.boxes[static_cast<std::size_t>(i0)].center);
            for (int i : idx) mul_root(rs.boxes[static_cast<std::size_t>(others[static_cast<std::size_t>(i)])].center);

            bool ok = true;
            std::vector<Int> coeffs(prod.size());
            for (std::size_t j = 0; j < prod.size(); ++j) {
                long double re = prod[j].real();
                if (std::abs(prod[j].imag()) > 1e-4L || std::abs(re) > 4e18L ||
                    std::abs(re - std::llroundl(re)) > 1e-4L) {
                    ok = false;
                    break;
                }
                coeffs[j] = Int(static_cast<long>(std::llroundl(re)));
            }
            if (ok) {
                IntPoly cand(std::move(coeffs));
                if (cand.degree() == size && divides(cand, sf)) return cand;
            }

            // next combination
            int pos = pick - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(others.size()) - pick + pos)
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < pick; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    throw std::runtime_error("minimal_poly_of_root: no factor verified; increase root precision");
}

} // namespace specto
