#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specto/equidist.hpp"
#include "specto/laurent.hpp"
#include "specto/lyapunov.hpp"
#include "specto/substitution.hpp"

namespace specto {

enum class Decision { SingularCertified, SingularNumerical, Inconclusive, ConditionsFail };
std::string to_string(Decision d);

struct ConditionEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ChiBound {
    double value = 0;
    std::string method; // jensen | cleared | majorant-grid | monte-carlo
    Int constant_term;  // exact, certified methods only
    int k = 1;
    std::vector<ClearingFactor> clearings;
    double mc_std_error = 0;
};

struct SingularityCertificate {
    std::string action; // "Z" | "R_selfsimilar" | "R_vector"
    std::vector<ConditionEntry> conditions;
    ChiBound chi_bound;
    Rat theta1_lower = 0;
    int theta1_power = 1; // the comparison is constant_term < theta1_lower^(k*power)
    Decision decision = Decision::Inconclusive;
    int power_used = 1;
    bool remark_b_applied = false;
    std::string notes;
};

struct AnalyzeOptions {
    int k_max = 1;            // certified bound depth (cocycle power)
    long mc_samples = 0;      // > 0 enables the monte-carlo fallback
    int mc_k = 3;             // cocycle depth of the quadrature estimate
    std::uint64_t seed = 0;
    int threads = 1;
    int cw_rounds = 60;       // Collatz-Wielandt refinement cap
};

// Theorem-driven pipeline for the substitution Z-action: cyclic subspace of
// the all-ones vector, nilpotent projection when the restriction is singular,
// power replacement when it is degenerate, unit-root gate, then the sharpest
// certified chi bound against an exact Perron lower bound.
SingularityCertificate analyze_z_action(const Substitution& z, const AnalyzeOptions& opt = {});

struct PFKernel {
    IntPoly p_theta1;
    MinimalSubspace subspace; // ker p_theta1(S^t), saturated
    std::vector<std::pair<double, double>> pf_vector_box; // (center, radius) per coordinate
};

// Kernel of the Perron minimal polynomial at S^t with an enclosure of the
// Perron eigenvector direction.
PFKernel pf_kernel_subspace(const IntMatrix& s);

// R-action certificates: vector_spec "pf" analyzes the self-similar action,
// otherwise the explicit rational vector must lie in ker p_theta1(S^t) and be
// strictly positive.
SingularityCertificate analyze_r_action(const Substitution& z, const std::string& vector_spec,
                                        const std::optional<RatVec>& explicit_v,
                                        const AnalyzeOptions& opt = {});

} // namespace specto
