#pragma once

// JSON forms of field elements, functions and reports.  Emission is
// hand-assembled so the byte stream is deterministic (fixed key order);
// parsing goes through nlohmann::json.

#include <string>
#include <vector>

#include <json.hpp>

#include "unital/cyclotomic.hpp"
#include "unital/orbits.hpp"
#include "unital/unital_fn.hpp"
#include "unital/values.hpp"

namespace unital {

inline std::string to_json(const CycNum& a) {
    std::string out = "{\"n\":" + std::to_string(a.order()) + ",\"coeffs\":[";
    const auto& cs = a.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += "[\"" + cs[i].get_num().get_str() + "\",\"" + cs[i].get_den().get_str() + "\"]";
    }
    out += "]}";
    return out;
}

inline CycNum cycnum_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& pair : j.at("coeffs"))
        coeffs.push_back(rat_from_decimal(pair.at(0).get<std::string>(), pair.at(1).get<std::string>()));
    return CycNum::from_coeffs(n, std::move(coeffs));
}

// {"n":N,"constant":{...},"exponents":{"origin":e,"root:r":e,...}}; absent
// exponent keys mean zero.  Keys are emitted origin first, then ascending r.
inline std::string to_json(const UnitalFn& f) {
    std::string out = "{\"n\":" + std::to_string(f.order()) + ",\"constant\":" + to_json(f.constant()) +
                      ",\"exponents\":{";
    bool first = true;
    const auto emit = [&](const Site& s) {
        auto it = f.exps().find(s);
        if (it == f.exps().end()) return;
        if (!first) out += ",";
        first = false;
        out += "\"" + s.label() + "\":" + std::to_string(it->second);
    };
    emit(Site::origin());
    for (int r = 0; r < f.order(); ++r) emit(Site::root(r));
    out += "}}";
    return out;
}

inline UnitalFn unital_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    CycNum constant = cycnum_from_json(j.at("constant"));
    std::map<Site, int> exps;
    for (const auto& [key, val] : j.at("exponents").items()) {
        if (key == "origin")
            exps[Site::origin()] = val.get<int>();
        else if (key.rfind("root:", 0) == 0)
            exps[Site::root(std::stoi(key.substr(5)))] = val.get<int>();
        else
            throw ParseError("unknown exponent key: " + key);
    }
    return UnitalFn(n, std::move(constant), std::move(exps));
}

inline UnitalFn unital_from_json(const std::string& text) {
    return unital_from_json(nlohmann::json::parse(text));
}

inline std::string to_json(const P1Value& v) {
    if (v.infinite) return "{\"infinite\":true}";
    return "{\"infinite\":false,\"value\":" + to_json(v.value) + "}";
}

inline std::string to_json(const std::vector<P1Value>& vals) {
    std::string out = "[";
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += to_json(vals[i]);
    }
    out += "]";
    return out;
}

inline std::string to_json(const OrbitReport& o) {
    return "{\"generator\":" + to_json(o.generator) + ",\"size\":" + std::to_string(o.size) +
           ",\"members\":" + std::to_string(o.members.size()) + "}";
}

inline std::string to_json(const ConjectureReport& rep) {
    std::string out = "{\"n\":" + std::to_string(rep.order);
    out += ",\"match\":" + std::string(rep.match ? "true" : "false");
    out += ",\"cardinality\":" + std::to_string(rep.cardinality);
    out += ",\"bound\":" + std::to_string(rep.bound);
    out += ",\"bound_holds\":" + std::string(rep.bound_holds ? "true" : "false");
    out += ",\"computed\":" + to_json(rep.computed);
    out += ",\"conjectured\":" + to_json(rep.conjectured);
    if (!rep.note.empty()) out += ",\"note\":\"" + rep.note + "\"";
    out += "}";
    return out;
}

}  // namespace unital
