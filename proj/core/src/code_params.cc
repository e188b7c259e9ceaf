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

#include "mmcodes/code_params.h"

#include <algorithm>
#include <chrono>
#include <initializer_list>

#include "mmcodes/enumeration.h"
#include "mmcodes/errors.h"
#include "mmcodes/gf2.h"

namespace mmcodes {

std::string pauli_name(PauliType type) {
    return type == PauliType::X ? "X" : "Z";
}

size_t logical_count(const MCssCode &code) {
    size_t rx = rank(code.p_x);
    size_t rz = rank(code.p_z);
    if (rx + rz > code.n) {
        throw VerificationError("check ranks exceed the number of qubits; P_X and P_Z are not orthogonal");
    }
    return code.n - rx - rz;
}

namespace {

const BitMatrix &check_for(const MCssCode &code, PauliType type) {
    return type == PauliType::Z ? code.p_x : code.p_z;
}

const BitMatrix &trivial_for(const MCssCode &code, PauliType type) {
    return type == PauliType::Z ? code.p_z : code.p_x;
}

}  // namespace

DistanceBound distance_exhaustive(const MCssCode &code, PauliType type, const ExhaustiveOptions &opts) {
    return min_weight_exhaustive(check_for(code, type), trivial_for(code, type), opts);
}

DistanceBound distance_randomized(const MCssCode &code, PauliType type, const RandomizedOptions &opts) {
    return min_weight_randomized(check_for(code, type), trivial_for(code, type), opts);
}

DistanceBound single_shot_distance(const MCssCode &code, PauliType type, const ExhaustiveOptions &exhaustive,
                                   const RandomizedOptions &randomized) {
    const auto &meta = type == PauliType::X ? code.m_x : code.m_z;
    if (!meta) {
        throw MissingMetacheckError("no metachecks: the code has no M_" + pauli_name(type) + " at t=" +
                                    std::to_string(code.t) + ", q=" + std::to_string(code.q));
    }
    BitMatrix syndromes = transpose(type == PauliType::X ? code.p_x : code.p_z);
    DistanceBound bound = min_weight_exhaustive(*meta, syndromes, exhaustive);
    if (bound.exact()) {
        return bound;
    }
    RandomizedOptions r = randomized;
    r.stop_at = bound.lower;
    return combine(bound, min_weight_randomized(*meta, syndromes, r));
}

ConfinementProfile confinement_profile(const MCssCode &code, PauliType type, const ConfinementOptions &opts) {
    return confinement(check_for(code, type), trivial_for(code, type), opts);
}

namespace {

void row_weight_stats(std::initializer_list<const BitMatrix *> mats, double *median, size_t *max) {
    std::vector<size_t> w;
    for (const BitMatrix *m : mats) {
        for (size_t r = 0; r < m->rows(); r++) {
            w.push_back(m->row_weight(r));
        }
    }
    if (w.empty()) {
        *median = 0;
        *max = 0;
        return;
    }
    std::sort(w.begin(), w.end());
    size_t mid = w.size() / 2;
    *median = w.size() % 2 ? static_cast<double>(w[mid]) : (static_cast<double>(w[mid - 1]) + static_cast<double>(w[mid])) / 2;
    *max = w.back();
}

}  // namespace

CheckWeightStats check_weight_stats(const MCssCode &code) {
    CheckWeightStats s;
    row_weight_stats({&code.p_x}, &s.w_med_x, &s.w_max_x);
    row_weight_stats({&code.p_z}, &s.w_med_z, &s.w_max_z);
    row_weight_stats({&code.p_x, &code.p_z}, &s.w_med, &s.w_max);
    return s;
}

std::optional<size_t> profile_minimum(const ConfinementProfile *x, const ConfinementProfile *z, bool *exact) {
    std::optional<size_t> best;
    bool all_exact = true;
    for (const ConfinementProfile *p : {x, z}) {
        if (p == nullptr) {
            continue;
        }
        for (const auto &e : p->entries) {
            if (e.kind != EntryKind::Exact && e.kind != EntryKind::None) {
                all_exact = false;
            }
            if (e.value && (!best || *e.value < *best)) {
                best = e.value;
            }
        }
    }
    if (exact != nullptr) {
        *exact = best.has_value() && all_exact;
    }
    return best;
}

CodeReport analyze(const MCssCode &code, const AnalysisOptions &opts, const StageHook &hook) {
    using Clock = std::chrono::steady_clock;
    CodeReport report;
    report.options = opts;
    report.name = code.provenance.name;
    if (code.spec) {
        report.orders = code.spec->orders();
    }
    for (const auto &g : code.generators) {
        report.generators.push_back(code.variables ? render(g, *code.variables) : render(g));
    }
    report.t = code.t;
    report.q = code.q;
    report.chain_dims = code.chain_dims;
    report.n = code.n;

    auto stage = [&](const std::string &name, auto &&fn) {
        auto start = Clock::now();
        fn();
        if (opts.timing) {
            report.timings[name] = std::chrono::duration<double>(Clock::now() - start).count();
        }
    };

    stage("k", [&] { report.k = logical_count(code); });
    report.weights = check_weight_stats(code);
    if (hook && !hook("k", report)) {
        return report;
    }

    ExhaustiveOptions ex;
    ex.w_max = opts.w_exhaustive;
    ex.workers = opts.workers;
    ex.budget = opts.budget;
    if (report.k == 0) {
        // No logicals: nothing qualifies at any weight.
        report.d_x.lower = code.n + 1;
        report.d_z.lower = code.n + 1;
    } else if (opts.w_exhaustive > 0) {
        stage("d_x_exhaustive", [&] { report.d_x = distance_exhaustive(code, PauliType::X, ex); });
        stage("d_z_exhaustive", [&] { report.d_z = distance_exhaustive(code, PauliType::Z, ex); });
    }
    if (hook && !hook("exhaustive", report)) {
        return report;
    }

    auto randomized = [&](PauliType type, DistanceBound &bound, uint64_t stream) {
        if (report.k == 0 || bound.exact() || opts.iterations == 0) {
            return;
        }
        RandomizedOptions r;
        r.iterations = opts.iterations;
        r.seed = derive_seed(opts.seed, stream);
        r.workers = opts.workers;
        r.stop_at = bound.lower;
        bound = combine(bound, distance_randomized(code, type, r));
    };
    stage("d_x_randomized", [&] { randomized(PauliType::X, report.d_x, 1); });
    stage("d_z_randomized", [&] { randomized(PauliType::Z, report.d_z, 2); });

    if (opts.single_shot) {
        RandomizedOptions r;
        r.iterations = opts.iterations;
        r.workers = opts.workers;
        if (code.m_x) {
            r.seed = derive_seed(opts.seed, 3);
            stage("d_ss_x", [&] { report.d_ss_x = single_shot_distance(code, PauliType::X, ex, r); });
        }
        if (code.m_z) {
            r.seed = derive_seed(opts.seed, 4);
            stage("d_ss_z", [&] { report.d_ss_z = single_shot_distance(code, PauliType::Z, ex, r); });
        }
    }

    if (opts.confinement_w) {
        ConfinementOptions c;
        c.w_max = *opts.confinement_w;
        c.mode = opts.confinement_mode;
        c.workers = opts.workers;
        c.enumeration_budget = opts.budget;
        c.seed = derive_seed(opts.seed, 5);
        stage("confinement_x", [&] { report.confinement_x = confinement_profile(code, PauliType::X, c); });
        c.seed = derive_seed(opts.seed, 6);
        stage("confinement_z", [&] { report.confinement_z = confinement_profile(code, PauliType::Z, c); });
        report.d_s = profile_minimum(&*report.confinement_x, &*report.confinement_z, &report.d_s_exact);
    }
    return report;
}

}  // namespace mmcodes
