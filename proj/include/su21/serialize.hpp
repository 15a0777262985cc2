#pragma once

#include <json.hpp>

#include "liealg.hpp"

namespace su21 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCatalogSchemaVersion = "su21-catalog/1";
inline constexpr const char* kReportSchemaVersion = "su21-report/1";

/// A field element serializes as four [numerator, denominator] pairs of
/// decimal strings, one per power of z (exact and byte-stable).
inline Json to_json(const FieldElement& a) {
    Json arr = Json::array();
    for (int k = 0; k < 4; ++k)
        arr.push_back(Json::array({num_str(a.coeff(k)), den_str(a.coeff(k))}));
    return arr;
}

inline FieldElement field_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw io_failure("bad field element");
    std::array<Rational, 4> c;
    for (size_t k = 0; k < 4; ++k) {
        const Json& p = j[k];
        if (!p.is_array() || p.size() != 2) throw io_failure("bad rational pair");
        c[k] = rat_parse(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return FieldElement(c[0], c[1], c[2], c[3]);
}

/// Row-major 9-element array.
inline Json to_json(const Mat3& m) {
    Json arr = Json::array();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) arr.push_back(to_json(m.at(r, c)));
    return arr;
}

inline Mat3 mat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 9) throw io_failure("bad matrix");
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = field_from_json(j[static_cast<size_t>(3 * r + c)]);
    return m;
}

inline Json to_json(const Subalgebra& u) {
    Json j;
    j["label"] = u.label;
    j["scalar_domain"] = u.domain == Scalars::real ? "real" : "complex";
    Json basis = Json::array();
    for (const Mat3& m : u.basis) basis.push_back(to_json(m));
    j["basis"] = basis;
    if (!u.params.empty()) {
        Json p;
        for (const auto& [k, v] : u.params) p[k] = to_json(v);
        j["parameters"] = p;
    }
    return j;
}

} // namespace su21
