#include "specto/verdict.hpp"

#include <cmath>
#include <sstream>

namespace specto {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::SingularCertified: return "SINGULAR_CERTIFIED";
        case Decision::SingularNumerical: return "SINGULAR_NUMERICAL";
        case Decision::Inconclusive: return "INCONCLUSIVE";
        case Decision::ConditionsFail: return "CONDITIONS_FAIL";
    }
    return "?";
}

namespace {

Rat rat_pow(const Rat& x, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

bool is_zero_rat(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

struct CompareResult {
    ChiBound chi;
    Rat theta_lower;
    Decision decision = Decision::Inconclusive;
    std::string note;
};

// champion certified bound over cocycle depths, then the exact comparison
// constant_term < theta_lower^k via Collatz-Wielandt refinement
CompareResult bound_and_compare(const Substitution& zk, const MinimalSubspace& v,
                                const IntMatrix& s_analyzed, const AnalyzeOptions& opt) {
    CompareResult out;
    CertifiedBound champion;
    bool have = false;
    for (int depth = 1; depth <= std::max(1, opt.k_max); ++depth) {
        SymbolMatrix sym = essential_symbol(build_symbol(power(zk, depth)), v);
        CertifiedBound cand = best_certified_bound(sym, depth);
        if (!have || cand.bound < champion.bound) {
            champion = std::move(cand);
            have = true;
        }
    }
    out.chi.value = champion.bound;
    out.chi.method = champion.method;
    out.chi.constant_term = champion.constant_term;
    out.chi.k = champion.k;
    out.chi.clearings = champion.clearings;

    RatVec u(static_cast<std::size_t>(s_analyzed.dim), Rat(1));
    Rat lower(0);
    Rat upper(0);
    bool certified = false;
    for (int round = 0; round < opt.cw_rounds; ++round) {
        lower = std::max(lower, collatz_wielandt_lower(s_analyzed, u));
        {
            RatVec au = s_analyzed * u;
            Rat mx = au[0] / u[0];
            for (int i = 1; i < s_analyzed.dim; ++i)
                mx = std::max(mx, Rat(au[static_cast<std::size_t>(i)] / u[static_cast<std::size_t>(i)]));
            upper = (round == 0) ? mx : std::min(upper, mx);
        }
        if (lower > 0 && Rat(champion.constant_term) < rat_pow(lower, champion.k)) {
            certified = true;
            break;
        }
        if (upper > 0 && Rat(champion.constant_term) >= rat_pow(upper, champion.k)) break; // provably unresolvable
        u = s_analyzed * u;
    }
    out.theta_lower = lower;

    if (certified) {
        out.decision = Decision::SingularCertified;
        return out;
    }
    if (upper > 0 && Rat(champion.constant_term) >= rat_pow(upper, champion.k))
        out.note = "certified bound exceeds the Perron comparison (constant term >= theta1^k)";
    else
        out.note = "Perron comparison unresolved within the refinement cap";

    if (opt.mc_samples > 0) {
        SymbolMatrix sym1 = essential_symbol(build_symbol(zk), v);
        QuadratureEstimate q = quadrature_log_norm(sym1, v.restriction, opt.mc_k, opt.mc_samples,
                                                   opt.seed, opt.threads);
        double half_log_theta = 0.5 * std::log(lower.get_d());
        if (q.estimate + 3 * q.std_error < half_log_theta) {
            out.decision = Decision::SingularNumerical;
            out.chi.value = q.estimate;
            out.chi.method = "monte-carlo";
            out.chi.k = q.k;
            out.chi.constant_term = 0;
            out.chi.clearings.clear();
            out.chi.mc_std_error = q.std_error;
            out.note += "; monte-carlo estimate + 3*se below log(theta1)/2";
            return out;
        }
        std::ostringstream os;
        os << "; monte-carlo estimate " << q.estimate << " +- " << q.std_error
           << " does not resolve either";
        out.note += os.str();
    }
    out.decision = Decision::Inconclusive;
    return out;
}

void apply_gate_downgrade(SingularityCertificate& cert, Aperiodicity gate) {
    if (gate == Aperiodicity::Aperiodic) return;
    if (cert.decision == Decision::SingularCertified || cert.decision == Decision::SingularNumerical) {
        cert.decision = Decision::Inconclusive;
        cert.notes += (cert.notes.empty() ? "" : "; ");
        cert.notes += "aperiodicity gate returned Unknown: the singularity theorem needs aperiodicity";
    }
}

} // namespace

SingularityCertificate analyze_z_action(const Substitution& z, const AnalyzeOptions& opt) {
    z.validate();
    IntMatrix s = substitution_matrix(z);
    if (!is_primitive(s)) throw std::invalid_argument("analyze_z_action: substitution is not primitive");

    SingularityCertificate cert;
    cert.action = "Z";
    cert.conditions.push_back({"primitive", true, ""});

    Aperiodicity gate = aperiodicity_gate(z);
    cert.conditions.push_back({"aperiodicity_gate", gate == Aperiodicity::Aperiodic,
                               gate == Aperiodicity::Aperiodic ? "irrational Perron eigenvalue"
                                                               : "sufficient criterion inconclusive"});

    IntMatrix st = s.transposed();
    RatVec ones(static_cast<std::size_t>(s.dim), Rat(1));

    // nilpotent projection when the restriction to the cyclic span is singular
    RatVec v = ones;
    bool remark_b = false;
    {
        MinimalSubspace v0 = cyclic_subspace(st, ones);
        if (det(v0.restriction) == 0) {
            auto [v1, m] = project_remark_b(st, ones);
            remark_b = true;
            std::ostringstream os;
            os << "restriction singular; replaced the all-ones vector by its projection (nilpotent order "
               << m << ")";
            cert.conditions.push_back({"restriction_nonsingular", true, os.str()});
            if (is_zero_rat(v1)) {
                cert.conditions.back().pass = false;
                cert.conditions.back().detail += "; projection is zero, orbit eventually vanishes";
                cert.decision = Decision::ConditionsFail;
                cert.notes = "first failed condition: restriction_nonsingular";
                cert.remark_b_applied = true;
                return cert;
            }
            v = v1;
        } else {
            cert.conditions.push_back({"restriction_nonsingular", true, ""});
        }
    }
    cert.remark_b_applied = remark_b;

    // power replacement when the restriction is degenerate
    Substitution zk = z;
    int power_used = 1;
    {
        MinimalSubspace ms = cyclic_subspace(st, v);
        if (auto witness = is_degenerate(ms.restriction)) {
            power_used = nondegenerate_power(ms.restriction);
            zk = power(z, power_used);
            std::ostringstream os;
            os << "restriction degenerate (ratio order " << *witness << "); replaced zeta by zeta^"
               << power_used;
            cert.conditions.push_back({"non_degenerate", true, os.str()});
        } else {
            cert.conditions.push_back({"non_degenerate", true, ""});
        }
    }
    cert.power_used = power_used;

    IntMatrix s_k = substitution_matrix(zk);
    IntMatrix st_k = s_k.transposed();
    MinimalSubspace v_final = cyclic_subspace(st_k, v);
    if (det(v_final.restriction) == 0)
        throw InternalError("analyze_z_action: restriction still singular after projection");
    if (is_degenerate(v_final.restriction))
        throw InternalError("analyze_z_action: restriction still degenerate after power replacement");

    if (auto unit = has_unit_root(char_poly(v_final.restriction))) {
        cert.conditions.push_back({"no_unit_root_eigenvalue", false,
                                   "restriction has a root-of-unity eigenvalue of order " +
                                       std::to_string(*unit)});
        cert.decision = Decision::ConditionsFail;
        cert.notes = "first failed condition: no_unit_root_eigenvalue";
        return cert;
    }
    cert.conditions.push_back({"no_unit_root_eigenvalue", true, ""});

    CompareResult res = bound_and_compare(zk, v_final, s_k, opt);
    cert.chi_bound = res.chi;
    cert.theta1_lower = res.theta_lower;
    cert.decision = res.decision;
    cert.notes = res.note;
    apply_gate_downgrade(cert, gate);
    return cert;
}

PFKernel pf_kernel_subspace(const IntMatrix& s) {
    if (!is_primitive(s)) throw std::invalid_argument("pf_kernel_subspace: matrix is not primitive");
    IntPoly cp = char_poly(s);
    RootSet rs = roots_numeric(squarefree_part(cp), 1e-8L);
    if (rs.perron < 0) throw InternalError("pf_kernel_subspace: no dominant positive eigenvalue found");

    PFKernel out;
    out.p_theta1 = minimal_poly_of_root(cp, rs.boxes[static_cast<std::size_t>(rs.perron)]);

    IntMatrix st = s.transposed();
    // p_theta1(S^t), Horner
    IntMatrix m(st.dim);
    for (int i = 0; i < st.dim; ++i) m.at(i, i) = out.p_theta1.leading();
    for (int i = out.p_theta1.degree() - 1; i >= 0; --i) {
        m = m * st;
        for (int j = 0; j < st.dim; ++j) m.at(j, j) += out.p_theta1.coeff(i);
    }
    std::vector<IntVec> cols(static_cast<std::size_t>(st.dim));
    for (int j = 0; j < st.dim; ++j) {
        IntVec col(static_cast<std::size_t>(st.dim));
        for (int i = 0; i < st.dim; ++i) col[static_cast<std::size_t>(i)] = m.at(i, j);
        cols[static_cast<std::size_t>(j)] = std::move(col);
    }
    std::vector<IntVec> basis = integer_kernel(cols, st.dim);
    if (static_cast<int>(basis.size()) != out.p_theta1.degree())
        throw InternalError("pf_kernel_subspace: kernel dimension differs from deg p_theta1");

    out.subspace.ambient_dim = st.dim;
    out.subspace.rank = static_cast<int>(basis.size());
    out.subspace.lattice_basis = std::move(basis);
    out.subspace.restriction = restrict_to_basis(st, out.subspace.lattice_basis);
    if (char_poly(out.subspace.restriction) != out.p_theta1)
        throw InternalError("pf_kernel_subspace: restriction char poly differs from p_theta1");

    // Perron direction of S^t by power iteration, with a contraction-based
    // radius; the direction is strictly positive for a primitive matrix.
    int d = st.dim;
    std::vector<double> u(static_cast<std::size_t>(d), 1.0);
    double delta = 1;
    for (int it = 0; it < 2000 && delta > 1e-14; ++it) {
        std::vector<double> next(static_cast<std::size_t>(d), 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                next[static_cast<std::size_t>(i)] += st.at(i, j).get_d() * u[static_cast<std::size_t>(j)];
        double sum = 0;
        for (double x : next) sum += x;
        for (double& x : next) x /= sum;
        delta = 0;
        for (int i = 0; i < d; ++i)
            delta = std::max(delta, std::abs(next[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i)]));
        u = std::move(next);
    }
    for (int i = 0; i < d; ++i)
        out.pf_vector_box.emplace_back(u[static_cast<std::size_t>(i)], 10 * delta + 1e-14);
    for (const auto& [c, r] : out.pf_vector_box)
        if (c - r <= 0) throw InternalError("pf_kernel_subspace: Perron vector enclosure not positive");
    return out;
}

SingularityCertificate analyze_r_action(const Substitution& z, const std::string& vector_spec,
                                        const std::optional<RatVec>& explicit_v,
                                        const AnalyzeOptions& opt) {
    z.validate();
    IntMatrix s = substitution_matrix(z);
    if (!is_primitive(s)) throw std::invalid_argument("analyze_r_action: substitution is not primitive");

    SingularityCertificate cert;
    cert.action = vector_spec == "pf" ? "R_selfsimilar" : "R_vector";
    cert.conditions.push_back({"primitive", true, ""});

    Aperiodicity gate = aperiodicity_gate(z);
    cert.conditions.push_back({"aperiodicity_gate", gate == Aperiodicity::Aperiodic,
                               gate == Aperiodicity::Aperiodic ? "irrational Perron eigenvalue"
                                                               : "sufficient criterion inconclusive"});

    PFKernel kern = pf_kernel_subspace(s);
    cert.conditions.push_back({"pf_kernel_dimension", true,
                               "dim ker p_theta1(S^t) = " + std::to_string(kern.subspace.rank)});

    if (vector_spec == "pf") {
        cert.conditions.push_back({"vector_positive", true, "Perron eigenvector (enclosure strictly positive)"});
    } else {
        if (!explicit_v) throw std::invalid_argument("analyze_r_action: explicit vector required");
        auto coords = kern.subspace.to_coords(*explicit_v);
        if (!coords)
            throw std::invalid_argument("analyze_r_action: vector is not in ker p_theta1(S^t)");
        for (const auto& x : *explicit_v)
            if (x <= 0) throw std::invalid_argument("analyze_r_action: vector must be strictly positive");
        cert.conditions.push_back({"vector_in_subspace", true, ""});
        cert.conditions.push_back({"vector_positive", true, ""});
    }

    // defensive: p_theta1 cannot be cyclotomic (theta1 > 1) and the
    // restriction is nonsingular with no unit-root eigenvalues
    if (det(kern.subspace.restriction) == 0) {
        cert.conditions.push_back({"restriction_nonsingular", false, "p_theta1(0) = 0"});
        cert.decision = Decision::ConditionsFail;
        cert.notes = "first failed condition: restriction_nonsingular";
        return cert;
    }
    cert.conditions.push_back({"restriction_nonsingular", true, ""});
    if (auto unit = has_unit_root(kern.p_theta1)) {
        cert.conditions.push_back({"no_unit_root_eigenvalue", false,
                                   "p_theta1 has a cyclotomic factor of order " + std::to_string(*unit)});
        cert.decision = Decision::ConditionsFail;
        cert.notes = "first failed condition: no_unit_root_eigenvalue";
        return cert;
    }
    cert.conditions.push_back({"no_unit_root_eigenvalue", true, ""});

    CompareResult res = bound_and_compare(z, kern.subspace, s, opt);
    cert.chi_bound = res.chi;
    cert.theta1_lower = res.theta_lower;
    cert.decision = res.decision;
    cert.notes = res.note;
    apply_gate_downgrade(cert, gate);
    return cert;
}

} // namespace specto
