#pragma once

#include <string>
#include <vector>

#include "specto/int_matrix.hpp"

namespace specto {

// A substitution: one nonempty word per letter of {0..d-1}, d >= 2.
struct Substitution {
    int alphabet_size = 0;
    std::vector<std::vector<int>> rules;

    void validate() const; // throws std::invalid_argument
    std::size_t total_rule_length() const;
};

// d <= 10 shorthand, e.g. {"01", "0"} for the Fibonacci substitution.
Substitution substitution_from_strings(const std::vector<std::string>& rules);

// S[i][j] = number of occurrences of letter i in rules[j].
IntMatrix substitution_matrix(const Substitution& z);

// zeta^n by n-fold application; guards against runaway word growth.
Substitution power(const Substitution& z, int n, std::size_t max_letters = 10'000'000);

enum class Aperiodicity { Aperiodic, Unknown };

// Sufficient criterion only: aperiodic when the Perron eigenvalue is
// irrational (minimal polynomial of degree >= 2). Requires a primitive input.
Aperiodicity aperiodicity_gate(const Substitution& z);

enum class FamilyTag { ZetaM, SigmaM, ZetaMAB };

struct FamilyParams {
    FamilyTag family = FamilyTag::ZetaM;
    long m = 0;
    std::vector<int> word_a, word_b; // zeta_mAB only; entries in {0,1}
};

// Built-in families:
//   zeta_m:   0 -> 0^m 1 2,   1 -> 1^{2m} 0 2,  2 -> 0 1 2 2      (m >= 3)
//   sigma_m:  0 -> (01)^m 2,  1 -> 2 (10)^m,    2 -> 1^{2m+2}     (m >= 1)
//   zeta_mAB: 0 -> A 2,       1 -> 2 B,         2 -> 0 2 2
//             A,B in {0,1}^m, A != 0^m, minority letter count k per word
//             with 8k^2+8k+14 <= m
Substitution make_family(const FamilyParams& params);

// effective k of a zeta_mAB instance: max over A,B of the minority count
long family3_k(const FamilyParams& params);

} // namespace specto
