// Copyright 2026 The mmcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmcodes/report_json.h"

#include <cmath>

namespace mmcodes {

nlohmann::ordered_json bound_to_json(const DistanceBound &bound) {
    nlohmann::ordered_json j;
    j["lower"] = bound.lower;
    j["upper"] = bound.upper ? nlohmann::ordered_json(*bound.upper) : nlohmann::ordered_json(nullptr);
    if (bound.exact()) {
        j["status"] = "exact";
    } else if (bound.upper) {
        j["status"] = "upper_bound";
    } else {
        j["status"] = "lower_bound";
    }
    j["witness"] = bound.witness ? nlohmann::ordered_json(bound.witness->support()) : nlohmann::ordered_json(nullptr);
    return j;
}

nlohmann::ordered_json number_to_json(double value) {
    double whole = std::floor(value);
    if (whole == value && std::fabs(value) < 9e15) {
        return static_cast<int64_t>(whole);
    }
    return value;
}

nlohmann::ordered_json profile_to_json(const ConfinementProfile &profile) {
    nlohmann::ordered_json j;
    j["mode"] = profile.mode == ConfinementMode::Exact ? "exact" : "cluster";
    j["warning"] = profile.warning ? nlohmann::ordered_json(*profile.warning) : nlohmann::ordered_json(nullptr);
    j["values"] = nlohmann::ordered_json::array();
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto &e : profile.entries) {
        nlohmann::ordered_json entry;
        entry["w"] = e.weight;
        entry["value"] = e.value ? nlohmann::ordered_json(*e.value) : nlohmann::ordered_json(nullptr);
        entry["kind"] = entry_kind_name(e.kind);
        j["values"].push_back(entry["value"]);
        j["entries"].push_back(entry);
    }
    return j;
}

nlohmann::ordered_json report_to_json(const CodeReport &report) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["name"] = report.name;
    j["orders"] = report.orders;
    j["t"] = report.t;
    j["q"] = report.q;
    j["generators"] = report.generators;
    j["chain_dims"] = report.chain_dims;
    j["n"] = report.n;
    j["k"] = report.k;
    j["d_x"] = bound_to_json(report.d_x);
    j["d_z"] = bound_to_json(report.d_z);
    j["d_ss_x"] = report.d_ss_x ? bound_to_json(*report.d_ss_x) : json(nullptr);
    j["d_ss_z"] = report.d_ss_z ? bound_to_json(*report.d_ss_z) : json(nullptr);
    j["confinement_x"] = report.confinement_x ? profile_to_json(*report.confinement_x) : json(nullptr);
    j["confinement_z"] = report.confinement_z ? profile_to_json(*report.confinement_z) : json(nullptr);
    if (report.d_s) {
        j["d_s"] = {{"value", *report.d_s}, {"status", report.d_s_exact ? "exact" : "bound"}};
    } else {
        j["d_s"] = nullptr;
    }
    j["check_weights"] = {{"w_med_x", number_to_json(report.weights.w_med_x)},
                          {"w_med_z", number_to_json(report.weights.w_med_z)},
                          {"w_max_x", report.weights.w_max_x},
                          {"w_max_z", report.weights.w_max_z},
                          {"w_med", number_to_json(report.weights.w_med)},
                          {"w_max", report.weights.w_max}};
    const AnalysisOptions &o = report.options;
    j["settings"] = {{"seed", o.seed},
                     {"workers", o.workers},
                     {"w_exhaustive", o.w_exhaustive},
                     {"iterations", o.iterations},
                     {"single_shot", o.single_shot},
                     {"confinement_w", o.confinement_w ? json(*o.confinement_w) : json(nullptr)},
                     {"confinement_mode", o.confinement_mode == ConfinementMode::Exact ? "exact" : "cluster"}};
    if (o.timing) {
        j["timing_seconds"] = report.timings;
    }
    return j;
}

}  // namespace mmcodes
