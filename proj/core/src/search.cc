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

#include "mmcodes/search.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "mmcodes/errors.h"
#include "mmcodes/koszul.h"
#include "mmcodes/report_json.h"

namespace mmcodes {

void SearchConfig::validate() const {
    if (t < 2 || t > kMaxKoszulLength) {
        throw std::invalid_argument("t must be in 2.." + std::to_string(kMaxKoszulLength));
    }
    if (orders.empty()) {
        throw std::invalid_argument("search needs at least one group spec in 'orders'");
    }
    if (term_min < 1) {
        throw std::invalid_argument("term_range minimum must be at least 1");
    }
    if (term_min > term_max) {
        throw std::invalid_argument("term_range minimum exceeds its maximum");
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be at least 1");
    }
    if (q_override && (*q_override < 1 || *q_override + 1 > t)) {
        throw std::invalid_argument("q_override must be in 1..t-1");
    }
}

namespace {

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

RingElem sample_random(const GroupSpec &spec, size_t terms, Rng &rng) {
    size_t n = spec.size();
    if (terms > n) {
        throw std::invalid_argument("term count " + std::to_string(terms) + " exceeds the ring size " +
                                    std::to_string(n) + " of " + spec.str());
    }
    // Floyd's algorithm: a uniform subset of size `terms`.
    std::set<uint32_t> chosen;
    for (size_t j = n - terms; j < n; j++) {
        auto r = static_cast<uint32_t>(rng.below(j + 1));
        if (!chosen.insert(r).second) {
            chosen.insert(static_cast<uint32_t>(j));
        }
    }
    return RingElem::from_indices(spec, std::vector<uint32_t>(chosen.begin(), chosen.end()));
}

RingElem sample_template(const std::string &tmpl, const GroupSpec &spec, const VariableNames &names, Rng &rng) {
    std::vector<char> placeholders;
    for (size_t i = 0; i + 2 < tmpl.size(); i++) {
        if (tmpl[i] == 'v' && tmpl[i + 1] == '_' && std::isalpha(static_cast<unsigned char>(tmpl[i + 2]))) {
            if (std::find(placeholders.begin(), placeholders.end(), tmpl[i + 2]) == placeholders.end()) {
                placeholders.push_back(tmpl[i + 2]);
            }
        }
    }
    if (placeholders.size() > spec.num_vars()) {
        throw std::invalid_argument("template '" + tmpl + "' needs " + std::to_string(placeholders.size()) +
                                    " distinct variables but the ring has " + std::to_string(spec.num_vars()));
    }
    std::vector<size_t> vars(spec.num_vars());
    std::iota(vars.begin(), vars.end(), 0);
    rng.shuffle(vars);
    std::string text;
    for (size_t i = 0; i < tmpl.size(); i++) {
        if (i + 2 < tmpl.size() && tmpl[i] == 'v' && tmpl[i + 1] == '_' &&
            std::isalpha(static_cast<unsigned char>(tmpl[i + 2]))) {
            size_t slot = static_cast<size_t>(
                std::find(placeholders.begin(), placeholders.end(), tmpl[i + 2]) - placeholders.begin());
            text += "(" + names.name(vars[slot]) + ")";
            i += 2;
        } else {
            text += tmpl[i];
        }
    }
    return parse_poly(text, spec, names);
}

}  // namespace

std::vector<RingElem> sample_generators(const SearchConfig &config, const GroupSpec &spec, Rng &rng) {
    VariableNames names = config.variables ? *config.variables : VariableNames::defaults(spec.num_vars());
    std::vector<RingElem> gens;
    for (size_t i = 0; i < config.t; i++) {
        if (!config.structured_families.empty()) {
            const auto &tmpl = config.structured_families[i % config.structured_families.size()];
            gens.push_back(sample_template(tmpl, spec, names, rng));
        } else {
            size_t terms = config.term_min + static_cast<size_t>(rng.below(config.term_max - config.term_min + 1));
            gens.push_back(sample_random(spec, terms, rng));
        }
    }
    return gens;
}

std::string canonical_key(const GroupSpec &spec, const std::vector<RingElem> &gens) {
    std::vector<std::vector<uint32_t>> lists;
    for (const auto &g : gens) {
        lists.push_back(g.monomials());
    }
    std::sort(lists.begin(), lists.end());
    std::string key = spec.str();
    for (const auto &l : lists) {
        key += "|";
        for (size_t i = 0; i < l.size(); i++) {
            key += (i ? "," : "") + std::to_string(l[i]);
        }
    }
    return key;
}

Evaluation evaluate_candidate(const std::vector<RingElem> &gens, const GroupSpec &spec, const SearchConfig &config) {
    Evaluation ev;
    std::string key = canonical_key(spec, gens);
    uint64_t key_hash = fnv1a(key);
    MCssCode code;
    try {
        code = build_mm_code(gens, spec, config.q_override, {"candidate-" + hex64(key_hash), "search"});
        code.variables = config.variables;
    } catch (const std::exception &e) {
        ev.rejection = Rejection{1, e.what()};
        return ev;
    }

    AnalysisOptions opts;
    opts.w_exhaustive = config.w_exhaustive;
    opts.iterations = config.iterations;
    opts.seed = mix64(key_hash);
    opts.workers = 1;
    opts.single_shot = false;
    opts.confinement_w = config.confinement_w;

    size_t k_min = std::max<size_t>(1, config.require_k_min);
    auto hook = [&](std::string_view stage, const CodeReport &partial) {
        if (stage == "k" && partial.k < k_min) {
            ev.rejection = Rejection{2, "k=" + std::to_string(partial.k) + " below " + std::to_string(k_min)};
            return false;
        }
        if (stage == "exhaustive") {
            for (const DistanceBound *b : {&partial.d_x, &partial.d_z}) {
                if (b->upper && *b->upper < config.w_exhaustive) {
                    ev.rejection = Rejection{3, "logical of weight " + std::to_string(*b->upper)};
                    return false;
                }
            }
        }
        return true;
    };
    try {
        CodeReport report = analyze(code, opts, hook);
        if (!ev.rejection) {
            ev.report = std::move(report);
        }
    } catch (const BudgetError &e) {
        ev.rejection = Rejection{3, e.what()};
    }
    return ev;
}

SearchStats run_search(const SearchConfig &config, const std::function<void(const CodeReport &)> &emit) {
    config.validate();
    SearchStats stats;
    std::unordered_set<std::string> seen;
    const size_t batch_size = std::max<size_t>(64, config.workers * 8);

    struct Pending {
        GroupSpec spec;
        std::vector<RingElem> gens;
    };
    size_t next_draw = 0;
    while (next_draw < config.max_candidates) {
        std::vector<Pending> batch;
        while (next_draw < config.max_candidates && batch.size() < batch_size) {
            Rng rng(derive_seed(config.seed, next_draw++));
            stats.drawn++;
            const GroupSpec &spec = config.orders[static_cast<size_t>(rng.below(config.orders.size()))];
            auto gens = sample_generators(config, spec, rng);
            if (!seen.insert(canonical_key(spec, gens)).second) {
                stats.duplicates++;
                continue;
            }
            batch.push_back({spec, std::move(gens)});
        }

        std::vector<Evaluation> results(batch.size());
        std::atomic<size_t> next{0};
        auto work = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= batch.size()) {
                    return;
                }
                results[i] = evaluate_candidate(batch[i].gens, batch[i].spec, config);
            }
        };
        size_t workers = std::min(config.workers, std::max<size_t>(1, batch.size()));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (size_t t = 0; t < workers; t++) {
                pool.emplace_back(work);
            }
            for (auto &th : pool) {
                th.join();
            }
        }

        for (auto &r : results) {
            stats.evaluated++;
            if (r.report) {
                stats.accepted++;
                emit(*r.report);
            } else if (r.rejection) {
                stats.rejected_by_stage[static_cast<size_t>(r.rejection->stage)]++;
            }
        }
    }
    return stats;
}

SearchStats run_search_jsonl(const SearchConfig &config, std::ostream &out) {
    SearchStats stats = run_search(config, [&](const CodeReport &report) {
        out << report_to_json(report).dump() << '\n';
        if (!out) {
            throw Error("failed writing search output");
        }
    });
    nlohmann::ordered_json footer;
    footer["record"] = "footer";
    footer["seed"] = config.seed;
    footer["workers"] = config.workers;
    footer["drawn"] = stats.drawn;
    footer["duplicates"] = stats.duplicates;
    footer["evaluated"] = stats.evaluated;
    footer["accepted"] = stats.accepted;
    nlohmann::ordered_json by_stage;
    for (int s = 1; s <= kSearchStages; s++) {
        by_stage[std::to_string(s)] = stats.rejected_by_stage[static_cast<size_t>(s)];
    }
    footer["rejected_by_stage"] = by_stage;
    out << footer.dump() << '\n';
    out.flush();
    if (!out) {
        throw Error("failed writing search output");
    }
    return stats;
}

}  // namespace mmcodes
