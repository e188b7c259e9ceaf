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

#include "cli/config.h"

#include <set>

#include <yaml-cpp/yaml.h>

#include "mmcodes/errors.h"
#include "mmcodes/matrix_io.h"

namespace mmcodes::cli {

namespace {

const std::set<std::string> kBuildKeys = {"name", "t", "orders", "variables", "generators", "q_override", "expected"};
const std::set<std::string> kSearchKeys = {"term_range",  "require_k_min", "distance_budget",      "confinement_w_max",
                                           "max_candidates", "seed",        "workers", "structured_families"};

class Reader {
  public:
    Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const YAML::Node &node, const std::string &message) const {
        const YAML::Mark mark = node.Mark();
        if (mark.is_null()) {
            throw ParseError(origin_ + ": " + message);
        }
        throw ParseError(origin_ + ":" + std::to_string(mark.line + 1) + ":" + std::to_string(mark.column + 1) + ": " +
                         message);
    }

    template <typename T>
    T scalar(const YAML::Node &node, const std::string &key) const {
        if (!node.IsScalar()) {
            fail(node, "'" + key + "' must be a scalar");
        }
        try {
            return node.as<T>();
        } catch (const YAML::Exception &) {
            fail(node, "'" + key + "' has an invalid value '" + node.Scalar() + "'");
        }
    }

    size_t count(const YAML::Node &node, const std::string &key) const {
        auto v = scalar<long long>(node, key);
        if (v < 0) {
            fail(node, "'" + key + "' must be non-negative");
        }
        return static_cast<size_t>(v);
    }

    std::vector<uint32_t> orders(const YAML::Node &node) const {
        if (!node.IsSequence() || node.size() == 0) {
            fail(node, "'orders' must be a non-empty list of cyclic group orders");
        }
        std::vector<uint32_t> out;
        for (const auto &item : node) {
            size_t v = count(item, "orders");
            if (v == 0) {
                fail(item, "cyclic group orders must be positive");
            }
            out.push_back(static_cast<uint32_t>(v));
        }
        return out;
    }

    std::vector<std::string> strings(const YAML::Node &node, const std::string &key) const {
        if (!node.IsSequence()) {
            fail(node, "'" + key + "' must be a list");
        }
        std::vector<std::string> out;
        for (const auto &item : node) {
            out.push_back(scalar<std::string>(item, key));
        }
        return out;
    }

    const std::string &origin() const { return origin_; }

  private:
    std::string origin_;
};

YAML::Node load_yaml(const std::string &text, const std::string &origin) {
    try {
        YAML::Node root = YAML::Load(text);
        if (!root.IsMap()) {
            throw ParseError(origin + ": config must be a mapping of keys to values");
        }
        return root;
    } catch (const YAML::ParserException &e) {
        throw ParseError(origin + ":" + std::to_string(e.mark.line + 1) + ":" + std::to_string(e.mark.column + 1) +
                         ": " + e.msg);
    }
}

void check_keys(const Reader &r, const YAML::Node &root, bool allow_search) {
    for (const auto &kv : root) {
        std::string key = kv.first.as<std::string>();
        if (!kBuildKeys.count(key) && !(allow_search && kSearchKeys.count(key))) {
            r.fail(kv.first, "unknown key '" + key + "'");
        }
    }
}

std::optional<std::vector<std::string>> read_variables(const Reader &r, const YAML::Node &root) {
    if (!root["variables"]) {
        return std::nullopt;
    }
    auto names = r.strings(root["variables"], "variables");
    try {
        VariableNames check(names);
    } catch (const std::invalid_argument &e) {
        r.fail(root["variables"], e.what());
    }
    return names;
}

}  // namespace

VariableNames BuildConfig::names() const {
    return variables ? VariableNames(*variables) : VariableNames::defaults(orders.size());
}

BuildConfig parse_build_config(const std::string &text, const std::string &origin) {
    Reader r(origin);
    YAML::Node root = load_yaml(text, origin);
    check_keys(r, root, true);
    BuildConfig c;
    c.path = origin;
    c.name = root["name"] ? r.scalar<std::string>(root["name"], "name") : std::string();
    if (!root["t"]) {
        r.fail(root, "missing key 't'");
    }
    c.t = r.count(root["t"], "t");
    if (!root["orders"]) {
        r.fail(root, "missing key 'orders'");
    }
    c.orders = r.orders(root["orders"]);
    c.variables = read_variables(r, root);
    if (c.variables && c.variables->size() != c.orders.size()) {
        r.fail(root["variables"], "'variables' names " + std::to_string(c.variables->size()) +
                                      " variables but 'orders' has " + std::to_string(c.orders.size()));
    }
    if (!root["generators"]) {
        r.fail(root, "missing key 'generators'");
    }
    c.generators = r.strings(root["generators"], "generators");
    if (c.generators.size() != c.t) {
        r.fail(root["generators"], "t=" + std::to_string(c.t) + " but " + std::to_string(c.generators.size()) +
                                       " generators are given");
    }
    if (root["q_override"] && !root["q_override"].IsNull()) {
        c.q_override = r.count(root["q_override"], "q_override");
    }
    if (const YAML::Node e = root["expected"]) {
        if (!e.IsMap()) {
            r.fail(e, "'expected' must be a mapping");
        }
        for (const auto &kv : e) {
            std::string key = kv.first.as<std::string>();
            if (key == "w_med") {
                c.expected.w_med = r.scalar<double>(kv.second, "expected.w_med");
                continue;
            }
            size_t v = r.count(kv.second, "expected." + key);
            if (key == "n") {
                c.expected.n = v;
            } else if (key == "k") {
                c.expected.k = v;
            } else if (key == "d") {
                c.expected.d = v;
            } else if (key == "w_max") {
                c.expected.w_max = v;
            } else {
                r.fail(kv.first, "unknown key 'expected." + key + "'");
            }
        }
    }
    return c;
}

BuildConfig load_build_config(const std::string &path) {
    return parse_build_config(read_text_file(path), path);
}

std::vector<RingElem> parse_generators(const BuildConfig &config) {
    GroupSpec spec(config.orders);
    VariableNames names = config.names();
    std::vector<RingElem> gens;
    for (size_t i = 0; i < config.generators.size(); i++) {
        try {
            gens.push_back(parse_poly(config.generators[i], spec, names));
        } catch (const ParseError &e) {
            throw ParseError(config.path + ": generator " + std::to_string(i + 1) + " '" + config.generators[i] +
                             "': " + e.what());
        }
    }
    return gens;
}

MCssCode build_code(const BuildConfig &config) {
    GroupSpec spec(config.orders);
    std::vector<RingElem> gens = parse_generators(config);
    MCssCode code = build_mm_code(gens, spec, config.q_override, {config.name, config.path});
    code.variables = config.names();
    return code;
}

SearchConfig parse_search_config(const std::string &text, const std::string &origin) {
    Reader r(origin);
    YAML::Node root = load_yaml(text, origin);
    check_keys(r, root, true);
    SearchConfig c;
    if (root["t"]) {
        c.t = r.count(root["t"], "t");
    }
    if (!root["orders"]) {
        r.fail(root, "missing key 'orders'");
    }
    const YAML::Node orders = root["orders"];
    if (orders.IsSequence() && orders.size() > 0 && orders[0].IsSequence()) {
        for (const auto &item : orders) {
            c.orders.emplace_back(r.orders(item));
        }
    } else {
        c.orders.emplace_back(r.orders(orders));
    }
    if (auto names = read_variables(r, root)) {
        c.variables = VariableNames(*names);
    }
    if (root["q_override"] && !root["q_override"].IsNull()) {
        c.q_override = r.count(root["q_override"], "q_override");
    }
    if (const YAML::Node tr = root["term_range"]) {
        if (!tr.IsSequence() || tr.size() != 2) {
            r.fail(tr, "'term_range' must be [min, max]");
        }
        c.term_min = r.count(tr[0], "term_range");
        c.term_max = r.count(tr[1], "term_range");
    }
    if (root["require_k_min"]) {
        c.require_k_min = r.count(root["require_k_min"], "require_k_min");
    }
    if (const YAML::Node db = root["distance_budget"]) {
        if (!db.IsMap()) {
            r.fail(db, "'distance_budget' must map w_exhaustive and iterations");
        }
        if (db["w_exhaustive"]) {
            c.w_exhaustive = r.count(db["w_exhaustive"], "distance_budget.w_exhaustive");
        }
        if (db["iterations"]) {
            c.iterations = r.count(db["iterations"], "distance_budget.iterations");
        }
    }
    if (root["confinement_w_max"] && !root["confinement_w_max"].IsNull()) {
        c.confinement_w = r.count(root["confinement_w_max"], "confinement_w_max");
    }
    if (root["max_candidates"]) {
        c.max_candidates = r.count(root["max_candidates"], "max_candidates");
    }
    if (root["seed"]) {
        c.seed = r.scalar<uint64_t>(root["seed"], "seed");
    }
    if (root["workers"]) {
        c.workers = r.count(root["workers"], "workers");
    }
    if (root["structured_families"]) {
        c.structured_families = r.strings(root["structured_families"], "structured_families");
    }
    if (root["generators"]) {
        // Literal generators pin the search to exactly one candidate family.
        c.structured_families = r.strings(root["generators"], "generators");
    }
    try {
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(origin + ": " + e.what());
    }
    return c;
}

SearchConfig load_search_config(const std::string &path) {
    return parse_search_config(read_text_file(path), path);
}

}  // namespace mmcodes::cli
