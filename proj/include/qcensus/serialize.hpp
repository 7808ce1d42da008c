#pragma once

// JSON and CSV emission.  All output is deterministic: object keys appear in
// a fixed order and coefficients print exactly (decimal strings once they
// leave the 64-bit range).

#include "qcensus/identities.hpp"

#include "json.hpp"

#include <limits>
#include <string>

namespace qcensus {

using Json = nlohmann::ordered_json;

inline Json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

inline Json series_to_json(const Series& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(json_int(s[k]));
    Json j;
    j["order"] = s.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json bivariate_to_json(const Bivariate& b) {
    Json coeffs = Json::array();
    for (int td = 0; td <= b.t_order(); ++td) {
        Json poly = Json::array();
        for (const Int& c : b[td]) poly.push_back(json_int(c));
        coeffs.push_back(std::move(poly));
    }
    Json j;
    j["t_order"] = b.t_order();
    j["q_cap"] = b.q_cap() ? Json(*b.q_cap()) : Json(nullptr);
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline std::string series_to_csv(const Series& s) {
    std::string out = "degree,coefficient\n";
    for (int k = 0; k <= s.order(); ++k)
        out += std::to_string(k) + "," + s[k].str() + "\n";
    return out;
}

inline std::string bivariate_to_csv(const Bivariate& b) {
    std::string out = "t_degree,q_degree,coefficient\n";
    for (int td = 0; td <= b.t_order(); ++td) {
        const QPoly& p = b[td];
        for (std::size_t k = 0; k < p.size(); ++k)
            out += std::to_string(td) + "," + std::to_string(k) + "," + p[k].str() + "\n";
    }
    return out;
}

inline Json params_to_json(const ParamMap& params) {
    Json j = Json::object();
    for (const auto& [key, value] : params.ints) j[key] = value;
    for (const auto& [key, value] : params.vecs) j[key] = value;
    return j;
}

// The comparison payload is everything except runtime_ms.
inline Json report_to_json(const Report& rep, bool include_runtime = true) {
    Json j;
    j["identity"] = rep.identity;
    j["params"] = params_to_json(rep.params);
    j["order"] = rep.order >= 0 ? Json(rep.order) : Json(nullptr);
    j["t_order"] = rep.t_order >= 0 ? Json(rep.t_order) : Json(nullptr);
    j["status"] = status_name(rep.status);
    if (rep.first_mismatch) {
        Json m;
        m["degree"] = rep.first_mismatch->degree;
        m["lhs"] = json_int(rep.first_mismatch->lhs);
        m["rhs"] = json_int(rep.first_mismatch->rhs);
        j["first_mismatch"] = std::move(m);
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["anchor"] = rep.anchor;
    j["note"] = rep.note.empty() ? Json(nullptr) : Json(rep.note);
    if (rep.refused_lhs) j["lhs"] = series_to_json(*rep.refused_lhs);
    if (include_runtime) j["runtime_ms"] = rep.runtime_ms;
    return j;
}

}  // namespace qcensus
