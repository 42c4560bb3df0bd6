#pragma once

#include <string>

#include "json.hpp"

#include "specto/equidist.hpp"
#include "specto/laurent.hpp"
#include "specto/lyapunov.hpp"
#include "specto/substitution.hpp"
#include "specto/verdict.hpp"

namespace specto {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// Malformed user input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// shortest round-trip decimal form; keeps reports byte-stable
std::string format_double(double v);

Json json_double(double v);
Json json_int(const Int& v);   // decimal string
Json json_rat(const Rat& v);   // "num/den" (or plain decimal string for integers)

Json to_json(const IntMatrix& m);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const Substitution& z);
Json to_json(const SymbolMatrix& sym);
Json to_json(const ClearingFactor& c);
Json to_json(const CertifiedBound& b);
Json to_json(const QuadratureEstimate& q);
Json to_json(const LyapunovEstimate& e);
Json to_json(const UDVerdict& v);
Json to_json(const SingularityCertificate& cert);

// Accepts {"alphabet_size":d,"rules":[[...],...]} (rules also as digit
// strings for d <= 10) or the family shorthand
// {"family":"zeta_m","m":20} / {"family":"zeta_mAB","m":30,"A":"0..","B":".."}.
Substitution substitution_from_json(const Json& j);

IntMatrix matrix_from_json(const Json& j);
RatVec rational_vector_from_json(const Json& j);
RatVec rational_vector_from_csv(const std::string& csv);

// Top-level report envelope shared by all CLI commands.
Json make_report(const std::string& command, Json input_echo, Json results, double elapsed_ms,
                 std::uint64_t seed);

std::string certificate_text(const SingularityCertificate& cert);

} // namespace specto
