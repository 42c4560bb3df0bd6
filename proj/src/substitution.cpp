#include "specto/substitution.hpp"

#include <algorithm>
#include <stdexcept>

namespace specto {

void Substitution::validate() const {
    if (alphabet_size < 2) throw std::invalid_argument("substitution: alphabet size must be >= 2");
    if (static_cast<int>(rules.size()) != alphabet_size)
        throw std::invalid_argument("substitution: expected one rule per letter");
    for (const auto& w : rules) {
        if (w.empty()) throw std::invalid_argument("substitution: empty rule word");
        for (int c : w)
            if (c < 0 || c >= alphabet_size)
                throw std::invalid_argument("substitution: rule letter out of range");
    }
}

std::size_t Substitution::total_rule_length() const {
    std::size_t n = 0;
    for (const auto& w : rules) n += w.size();
    return n;
}

Substitution substitution_from_strings(const std::vector<std::string>& rules) {
    Substitution z;
    z.alphabet_size = static_cast<int>(rules.size());
    for (const auto& s : rules) {
        std::vector<int> w;
        w.reserve(s.size());
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("substitution: digit rules must use 0-9");
            w.push_back(ch - '0');
        }
        z.rules.push_back(std::move(w));
    }
    z.validate();
    return z;
}

IntMatrix substitution_matrix(const Substitution& z) {
    z.validate();
    IntMatrix s(z.alphabet_size);
    for (int j = 0; j < z.alphabet_size; ++j)
        for (int c : z.rules[static_cast<std::size_t>(j)]) s.at(c, j) += 1;
    return s;
}

Substitution power(const Substitution& z, int n, std::size_t max_letters) {
    z.validate();
    if (n < 1) throw std::invalid_argument("power: n must be >= 1");
    Substitution cur = z;
    for (int step = 1; step < n; ++step) {
        Substitution next;
        next.alphabet_size = z.alphabet_size;
        next.rules.resize(static_cast<std::size_t>(z.alphabet_size));
        std::size_t total = 0;
        for (int a = 0; a < z.alphabet_size; ++a) {
            std::vector<int>& out = next.rules[static_cast<std::size_t>(a)];
            for (int c : cur.rules[static_cast<std::size_t>(a)]) {
                const auto& w = z.rules[static_cast<std::size_t>(c)];
                out.insert(out.end(), w.begin(), w.end());
            }
            total += out.size();
            if (total > max_letters)
                throw std::invalid_argument("power: word length cap exceeded (" +
                                            std::to_string(max_letters) + " letters)");
        }
        cur = std::move(next);
    }
    return cur;
}

Aperiodicity aperiodicity_gate(const Substitution& z) {
    IntMatrix s = substitution_matrix(z);
    if (!is_primitive(s)) throw std::invalid_argument("aperiodicity_gate: substitution is not primitive");
    IntPoly cp = char_poly(s);
    RootSet rs = roots_numeric(squarefree_part(cp), 1e-8L);
    if (rs.perron < 0) return Aperiodicity::Unknown;
    IntPoly mp = minimal_poly_of_root(cp, rs.boxes[static_cast<std::size_t>(rs.perron)]);
    return mp.degree() >= 2 ? Aperiodicity::Aperiodic : Aperiodicity::Unknown;
}

long family3_k(const FamilyParams& params) {
    auto minority = [](const std::vector<int>& w) {
        long zeros = static_cast<long>(std::count(w.begin(), w.end(), 0));
        long ones = static_cast<long>(w.size()) - zeros;
        return std::min(zeros, ones);
    };
    return std::max(minority(params.word_a), minority(params.word_b));
}

Substitution make_family(const FamilyParams& params) {
    Substitution z;
    z.alphabet_size = 3;
    z.rules.resize(3);
    long m = params.m;
    switch (params.family) {
        case FamilyTag::ZetaM: {
            if (m < 3) throw std::invalid_argument("zeta_m requires m >= 3");
            auto& r0 = z.rules[0];
            r0.assign(static_cast<std::size_t>(m), 0);
            r0.push_back(1);
            r0.push_back(2);
            auto& r1 = z.rules[1];
            r1.assign(static_cast<std::size_t>(2 * m), 1);
            r1.push_back(0);
            r1.push_back(2);
            z.rules[2] = {0, 1, 2, 2};
            break;
        }
        case FamilyTag::SigmaM: {
            if (m < 1) throw std::invalid_argument("sigma_m requires m >= 1");
            auto& r0 = z.rules[0];
            for (long i = 0; i < m; ++i) {
                r0.push_back(0);
                r0.push_back(1);
            }
            r0.push_back(2);
            auto& r1 = z.rules[1];
            r1.push_back(2);
            for (long i = 0; i < m; ++i) {
                r1.push_back(1);
                r1.push_back(0);
            }
            z.rules[2].assign(static_cast<std::size_t>(2 * m + 2), 1);
            break;
        }
        case FamilyTag::ZetaMAB: {
            if (m < 1) throw std::invalid_argument("zeta_mAB requires m >= 1");
            if (static_cast<long>(params.word_a.size()) != m || static_cast<long>(params.word_b.size()) != m)
                throw std::invalid_argument("zeta_mAB requires A, B of length m");
            for (int c : params.word_a)
                if (c != 0 && c != 1) throw std::invalid_argument("zeta_mAB: A must be over {0,1}");
            for (int c : params.word_b)
                if (c != 0 && c != 1) throw std::invalid_argument("zeta_mAB: B must be over {0,1}");
            if (std::count(params.word_a.begin(), params.word_a.end(), 0) == m)
                throw std::invalid_argument("zeta_mAB: A must differ from 0^m");
            long k = family3_k(params);
            if (8 * k * k + 8 * k + 14 > m)
                throw std::invalid_argument("zeta_mAB: constraint 8k^2+8k+14 <= m violated (k=" +
                                            std::to_string(k) + ", 8k^2+8k+14=" +
                                            std::to_string(8 * k * k + 8 * k + 14) + " > m=" +
                                            std::to_string(m) + ")");
            z.rules[0] = params.word_a;
            z.rules[0].push_back(2);
            z.rules[1] = {2};
            z.rules[1].insert(z.rules[1].end(), params.word_b.begin(), params.word_b.end());
            z.rules[2] = {0, 2, 2};
            break;
        }
    }
    z.validate();
    return z;
}

} // namespace specto
