#pragma once

#include <json.hpp>

#include "sclift/optimize.hpp"
#include "sclift/window.hpp"

namespace sclift {

inline nlohmann::json to_json(const RegionCount& rc) {
    return {{"region", rc.region},
            {"case", rc.spec.case_l},
            {"alpha", rc.spec.alpha},
            {"beta", rc.spec.beta},
            {"w1", rc.spec.w1},
            {"w2", rc.spec.w2},
            {"w3", rc.spec.w3},
            {"w4", rc.spec.w4},
            {"points", rc.points}};
}

inline nlohmann::json to_json(const CountReport& r) {
    nlohmann::json per_region = nlohmann::json::array();
    for (const auto& rc : r.per_region)
        per_region.push_back(to_json(rc));
    nlohmann::json disc = nlohmann::json::array();
    for (const auto& d : r.discrepancies)
        disc.push_back(d);
    return {{"method", r.method},       {"p", r.p},
            {"gamma", r.gamma},         {"L", r.L},
            {"m", r.m},                 {"total", r.total},
            {"mu", r.mu},               {"per_region", per_region},
            {"discrepancies", disc},    {"seconds", r.seconds}};
}

inline nlohmann::json to_json(const WindowReport& r) {
    nlohmann::json positions = nlohmann::json::array();
    for (size_t i = 0; i < r.positions.size(); ++i) {
        const auto& pos = r.positions[i];
        positions.push_back({{"anchor", pos.anchor},
                             {"positions", {pos.pos_lo, pos.pos_hi}},
                             {"block_rows", {pos.row_lo, pos.row_hi}},
                             {"count", r.per_position[i]}});
    }
    return {{"p", r.p},
            {"L", r.L},
            {"m", r.m},
            {"S", r.S},
            {"stride", r.stride},
            {"method", r.method},
            {"positions", positions},
            {"total", r.total},
            {"standard_total", r.standard_total},
            {"r2", {{"num", r.r2_num}, {"den", r.r2_den}}},
            {"placement_note", r.placement_note}};
}

inline nlohmann::json to_json(const OptimizeResult& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& t : r.trace)
        trace.push_back({{"evaluations", t.evaluations}, {"value", t.value}});
    nlohmann::json bm = nlohmann::json::array();
    for (const auto& row : r.bm.entries)
        bm.push_back(row);
    return {{"bm", bm},
            {"report", to_json(r.report)},
            {"trace", trace},
            {"evaluations", r.evaluations},
            {"budget_exhausted", r.budget_exhausted},
            {"verified_brute", r.verified_brute}};
}

} // namespace sclift
