#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zsum/block_monoid.hpp"
#include "zsum/group_atom.hpp"
#include "zsum/noether.hpp"
#include "zsum/theory_checks.hpp"

// JSON serialization with stable field order (ordered_json everywhere) so that
// repeated runs produce byte-identical machine-readable output.

namespace zsum {

using json = nlohmann::ordered_json;

inline std::int64_t to_int64_checked(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("coefficient does not fit a 64-bit integer");
    return static_cast<std::int64_t>(v);
}

inline json to_json(const ZsVector& v) { return json(v.multiplicities()); }

inline json tuple_to_json(const ElementTuple& t) {
    json arr = json::array();
    for (const auto& e : t.elements()) arr.push_back(e.residues());
    return arr;
}

inline json verdict_to_json(const ElementTuple& t, const GroupAtomVerdict& v) {
    json out;
    out["tuple"] = tuple_to_json(t);
    out["vector"] = to_json(v.vector);
    out["group_atom"] = v.is_group_atom;
    if (v.witness) {
        json w;
        json coeffs = json::array();
        for (const auto& c : v.witness->coeffs) coeffs.push_back(to_int64_checked(c));
        w["coeffs"] = std::move(coeffs);
        json gens = json::array();
        for (const auto& g : v.witness->generators) gens.push_back(g.multiplicities());
        w["generators"] = std::move(gens);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline json to_json(const SepNoetherResult& r) {
    json out;
    out["group"] = r.group.to_string();
    out["beta_sep"] = r.beta_sep;
    out["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
    auto m = r.match();
    out["match"] = m ? json(*m) : json(nullptr);
    json bounds;
    bounds["upper"] = r.bounds.upper;
    bounds["upper_equality_predicted"] = r.bounds.upper_equality_predicted;
    bounds["lower"] = r.bounds.lower ? json(*r.bounds.lower) : json(nullptr);
    out["bounds"] = std::move(bounds);
    json extremal = json::array();
    for (const auto& w : r.extremal) {
        json e;
        e["tuple"] = tuple_to_json(w.tuple);
        e["vector"] = to_json(w.vector);
        extremal.push_back(std::move(e));
    }
    out["extremal"] = std::move(extremal);
    out["subsets_scanned"] = r.subsets_scanned;
    out["automorphism_pruning"] = r.automorphism_pruning;
    return out;
}

inline json to_json(const TheoryCheckReport& r) {
    json out;
    out["lemma"] = r.lemma_id;
    out["applicable"] = r.applicable;
    out["instances_checked"] = r.instances_checked;
    out["violations"] = r.violations;
    out["notes"] = r.notes;
    return out;
}

inline json to_json(const DavenportResult& r) {
    json out;
    out["group"] = r.group.to_string();
    out["davenport"] = r.value;
    out["method"] = r.method == DavenportMethod::ExactEnumeration ? "exact-enumeration"
                                                                  : "rank2-formula";
    json extremal = json::array();
    for (const auto& a : r.extremal_atoms) extremal.push_back(a.multiplicities());
    out["extremal_atoms"] = std::move(extremal);
    return out;
}

/// Verify-sweep JSON deliberately omits wall-clock timings: the JSON contract
/// is byte-stable across runs. Timings live in the CSV output.
inline json to_json(const VerifySweep& s) {
    json out;
    out["l_range"] = json::array({s.l_range.first, s.l_range.second});
    out["n_range"] = json::array({s.n_range.first, s.n_range.second});
    json results = json::array();
    for (const auto& c : s.cells) {
        json cell;
        cell["l"] = c.l;
        cell["n"] = c.n;
        cell["group"] = c.group.to_string();
        std::int64_t predicted = c.l * c.n + c.n / least_prime_divisor(c.n);
        cell["predicted"] = predicted;
        if (c.skipped) {
            cell["beta_sep"] = nullptr;
            cell["status"] = "skipped";
        } else {
            cell["beta_sep"] = c.result->beta_sep;
            cell["status"] = c.result->beta_sep == predicted ? "ok" : "mismatch";
        }
        results.push_back(std::move(cell));
    }
    out["results"] = std::move(results);
    return out;
}

inline std::string verify_to_csv(const VerifySweep& s) {
    std::ostringstream out;
    out << "l,n,group,beta_sep,predicted,match,wall_time_ms\n";
    for (const auto& c : s.cells) {
        std::int64_t predicted = c.l * c.n + c.n / least_prime_divisor(c.n);
        out << c.l << ',' << c.n << ',' << c.group.to_string() << ',';
        if (c.skipped)
            out << ',' << predicted << ",skipped";
        else
            out << c.result->beta_sep << ',' << predicted << ','
                << (c.result->beta_sep == predicted ? "true" : "false");
        out << ',' << static_cast<std::int64_t>(c.wall_ms) << '\n';
    }
    return out.str();
}

inline std::string sep_result_to_csv(const SepNoetherResult& r, double wall_ms) {
    std::ostringstream out;
    out << "group,beta_sep,predicted,match,wall_time_ms\n";
    out << r.group.to_string() << ',' << r.beta_sep << ',';
    if (r.predicted)
        out << *r.predicted << ',' << (*r.match() ? "true" : "false");
    else
        out << ',';
    out << ',' << static_cast<std::int64_t>(wall_ms) << '\n';
    return out.str();
}

inline std::string reports_to_csv(const std::vector<TheoryCheckReport>& reports) {
    std::ostringstream out;
    out << "lemma,applicable,instances_checked,violations,notes\n";
    for (const auto& r : reports)
        out << r.lemma_id << ',' << (r.applicable ? "true" : "false") << ','
            << r.instances_checked << ',' << r.violations.size() << ",\"" << r.notes
            << "\"\n";
    return out.str();
}

}  // namespace zsum
