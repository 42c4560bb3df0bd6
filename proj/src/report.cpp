#include "specto/report.hpp"

#include <charconv>
#include <sstream>

namespace specto {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Json json_double(double v) { return Json(format_double(v)); }

Json json_int(const Int& v) { return Json(v.get_str()); }

Json json_rat(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return Json(c.get_num().get_str());
    return Json(c.get_num().get_str() + "/" + c.get_den().get_str());
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim; ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(json_int(x));
    return out;
}

Json to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(json_rat(x));
    return out;
}

Json to_json(const Substitution& z) {
    Json rules = Json::array();
    for (const auto& w : z.rules) rules.push_back(w);
    return Json{{"alphabet_size", z.alphabet_size}, {"rules", std::move(rules)}};
}

Json to_json(const SymbolMatrix& sym) {
    Json entries = Json::array();
    for (int b = 0; b < sym.dim; ++b) {
        Json row = Json::array();
        for (int c = 0; c < sym.dim; ++c) {
            Json cell = Json::array();
            for (const FreqTerm& t : sym.entry(b, c))
                cell.push_back(Json{{"freq", t.freq}, {"mult", t.mult}});
            row.push_back(std::move(cell));
        }
        entries.push_back(std::move(row));
    }
    return Json{{"dim", sym.dim}, {"num_vars", sym.num_vars}, {"entries", std::move(entries)}};
}

Json to_json(const ClearingFactor& c) { return Json{{"w", c.w}, {"a", c.a}}; }

Json to_json(const CertifiedBound& b) {
    Json clearings = Json::array();
    for (const auto& c : b.clearings) clearings.push_back(to_json(c));
    Json out{{"bound", json_double(b.bound)},
             {"constant_term", json_int(b.constant_term)},
             {"k", b.k},
             {"clearings", std::move(clearings)},
             {"method", b.method}};
    if (!b.note.empty()) out["note"] = b.note;
    return out;
}

Json to_json(const QuadratureEstimate& q) {
    return Json{{"estimate", json_double(q.estimate)},
                {"std_error", json_double(q.std_error)},
                {"k", q.k},
                {"samples", q.samples},
                {"seed", q.seed},
                {"method", "monte-carlo"}};
}

Json to_json(const LyapunovEstimate& e) {
    Json bounds = Json::array();
    for (const auto& b : e.certified_upper_bounds) bounds.push_back(to_json(b));
    return Json{{"value", json_double(e.value)},
                {"std_error", json_double(e.std_error)},
                {"n_steps", e.n_steps},
                {"n_samples", e.n_samples},
                {"seed", e.seed},
                {"certified_upper_bounds", std::move(bounds)}};
}

Json to_json(const UDVerdict& v) {
    Json out{{"holds", v.holds}, {"failed_condition", to_string(v.failed)}};
    if (v.witness) {
        out["witness"] = Json{{"h", to_json(v.witness->h)}, {"k", v.witness->k}};
    }
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

Json to_json(const SingularityCertificate& cert) {
    Json conditions = Json::array();
    for (const auto& c : cert.conditions) {
        Json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        conditions.push_back(std::move(e));
    }
    Json chi;
    if (!cert.chi_bound.method.empty()) {
        chi = Json{{"value", json_double(cert.chi_bound.value)},
                   {"method", cert.chi_bound.method},
                   {"k", cert.chi_bound.k}};
        if (cert.chi_bound.method == "monte-carlo") {
            chi["std_error"] = json_double(cert.chi_bound.mc_std_error);
        } else {
            chi["constant_term"] = json_int(cert.chi_bound.constant_term);
            Json clearings = Json::array();
            for (const auto& c : cert.chi_bound.clearings) clearings.push_back(to_json(c));
            chi["clearings"] = std::move(clearings);
        }
    }
    Json out{{"action", cert.action},
             {"decision", to_string(cert.decision)},
             {"conditions", std::move(conditions)},
             {"chi_bound", std::move(chi)},
             {"theta1_lower", json_rat(cert.theta1_lower)},
             {"power_used", cert.power_used},
             {"remark_b_applied", cert.remark_b_applied}};
    if (!cert.notes.empty()) out["notes"] = cert.notes;
    return out;
}

namespace {

std::vector<int> word_from_json(const Json& j) {
    std::vector<int> w;
    if (j.is_string()) {
        for (char ch : j.get<std::string>()) {
            if (ch < '0' || ch > '9') throw InputError("rule words as strings must use digits 0-9");
            w.push_back(ch - '0');
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw InputError("rule letters must be integers");
            w.push_back(x.get<int>());
        }
    } else {
        throw InputError("rule must be an array of letters or a digit string");
    }
    return w;
}

} // namespace

Substitution substitution_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("substitution input must be a JSON object");
    if (j.contains("family")) {
        FamilyParams params;
        std::string fam = j.at("family").get<std::string>();
        if (fam == "zeta_m")
            params.family = FamilyTag::ZetaM;
        else if (fam == "sigma_m")
            params.family = FamilyTag::SigmaM;
        else if (fam == "zeta_mAB")
            params.family = FamilyTag::ZetaMAB;
        else
            throw InputError("unknown family '" + fam + "' (expected zeta_m, sigma_m, zeta_mAB)");
        if (!j.contains("m") || !j.at("m").is_number_integer())
            throw InputError("family shorthand requires an integer 'm'");
        params.m = j.at("m").get<long>();
        if (params.family == FamilyTag::ZetaMAB) {
            if (!j.contains("A") || !j.contains("B"))
                throw InputError("zeta_mAB requires words 'A' and 'B'");
            params.word_a = word_from_json(j.at("A"));
            params.word_b = word_from_json(j.at("B"));
        }
        try {
            return make_family(params);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (!j.contains("rules")) throw InputError("substitution input needs 'rules' or 'family'");
    Substitution z;
    for (const auto& r : j.at("rules")) z.rules.push_back(word_from_json(r));
    z.alphabet_size = j.contains("alphabet_size") ? j.at("alphabet_size").get<int>()
                                                  : static_cast<int>(z.rules.size());
    try {
        z.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return z;
}

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InputError("invalid integer literal '" + j.get<std::string>() + "'");
        }
    }
    throw InputError("expected an integer (number or decimal string)");
}

Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("invalid rational literal '" + s + "'");
    }
}

} // namespace

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
    int d = static_cast<int>(j.size());
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw InputError("matrix must be square");
        for (int c = 0; c < d; ++c) m.at(i, c) = int_from_json(row.at(static_cast<std::size_t>(c)));
    }
    return m;
}

RatVec rational_vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("vector must be a nonempty array");
    RatVec v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.emplace_back(x.get<long>());
        else if (x.is_string())
            v.push_back(rat_from_string(x.get<std::string>()));
        else
            throw InputError("vector entries must be integers or rational strings");
    }
    return v;
}

RatVec rational_vector_from_csv(const std::string& csv) {
    RatVec v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty entry in vector literal");
        v.push_back(rat_from_string(item));
    }
    if (v.empty()) throw InputError("empty vector literal");
    return v;
}

Json make_report(const std::string& command, Json input_echo, Json results, double elapsed_ms,
                 std::uint64_t seed) {
    return Json{{"tool_version", kToolVersion},
                {"schema_version", kSchemaVersion},
                {"command", command},
                {"input", std::move(input_echo)},
                {"results", std::move(results)},
                {"seed", seed},
                {"timing_ms", json_double(elapsed_ms)}};
}

std::string certificate_text(const SingularityCertificate& cert) {
    std::ostringstream os;
    os << cert.action << "-action: " << to_string(cert.decision) << "\n";
    for (const auto& c : cert.conditions) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    if (!cert.chi_bound.method.empty()) {
        os << "  chi bound " << format_double(cert.chi_bound.value) << " via " << cert.chi_bound.method;
        if (cert.chi_bound.method != "monte-carlo")
            os << " (constant term " << cert.chi_bound.constant_term.get_str() << ", k=" << cert.chi_bound.k
               << ")";
        os << "\n";
    }
    Rat tl = cert.theta1_lower;
    tl.canonicalize();
    os << "  theta1 lower bound " << format_double(tl.get_d()) << "\n";
    if (cert.power_used != 1) os << "  analyzed zeta^" << cert.power_used << "\n";
    if (cert.remark_b_applied) os << "  nilpotent projection applied\n";
    if (!cert.notes.empty()) os << "  notes: " << cert.notes << "\n";
    return os.str();
}

} // namespace specto
