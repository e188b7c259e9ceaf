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

#include "cli/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/bundle.h"
#include "cli/config.h"
#include "mmcodes/code_params.h"
#include "mmcodes/enumeration.h"
#include "mmcodes/errors.h"
#include "mmcodes/matrix_io.h"
#include "mmcodes/report_json.h"
#include "mmcodes/search.h"

namespace mmcodes::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Flags {
    std::string input;
    std::string out;
    std::string format;
    std::string bundle_format = "both";
    std::string type = "both";
    std::string mode = "exact";
    size_t w_exhaustive = 4;
    size_t iterations = 1000;
    uint64_t seed = 0;
    size_t workers = 1;
    std::optional<size_t> confinement_w;
    bool timing = false;
    bool no_ssdist = false;
    size_t max_t = kDefaultMaxT;
    std::optional<size_t> max_candidates;
    std::vector<int> rows;
    size_t table_w_exhaustive = 3;
    size_t table_iterations = 200;
    std::string fixtures = std::string(MMCODES_FIXTURES_DIR) + "/table2";
};

void write_output(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    write_text_file(path, text);
}

void emit_json(const json &j, const std::string &path, std::ostream &out) {
    write_output(j.dump(2) + "\n", path, out);
}

void check_t(size_t t, size_t max_t) {
    if (t > max_t) {
        throw std::invalid_argument("t=" + std::to_string(t) + " exceeds the CLI limit of " + std::to_string(max_t) +
                                    "; pass --max-t to raise it");
    }
}

LoadedCode load_checked(const Flags &f) {
    if (is_bundle(f.input)) {
        LoadedCode loaded{load_bundle(f.input), std::nullopt};
        check_t(loaded.code.t, f.max_t);
        return loaded;
    }
    BuildConfig config = load_build_config(f.input);
    check_t(config.t, f.max_t);
    MCssCode code = build_code(config);
    return {std::move(code), std::move(config)};
}

std::vector<PauliType> selected_types(const std::string &type) {
    if (type == "x") {
        return {PauliType::X};
    }
    if (type == "z") {
        return {PauliType::Z};
    }
    return {PauliType::X, PauliType::Z};
}

ConfinementMode parse_mode(const std::string &mode) {
    return mode == "cluster" ? ConfinementMode::Cluster : ConfinementMode::Exact;
}

std::string lower_name(PauliType type) {
    return type == PauliType::X ? "x" : "z";
}

json header(const MCssCode &code) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["name"] = code.provenance.name;
    j["n"] = code.n;
    return j;
}

json settings(const Flags &f) {
    return {{"seed", f.seed}, {"workers", f.workers}, {"w_exhaustive", f.w_exhaustive}, {"iterations", f.iterations}};
}

// ---------------------------------------------------------------- build

int cmd_build(const Flags &f, std::ostream &out) {
    BuildConfig config = load_build_config(f.input);
    check_t(config.t, f.max_t);
    MCssCode code = build_code(config);
    std::vector<MatrixFormat> formats;
    if (f.bundle_format == "mtx" || f.bundle_format == "both") {
        formats.push_back(MatrixFormat::Mtx);
    }
    if (f.bundle_format == "alist" || f.bundle_format == "both") {
        formats.push_back(MatrixFormat::Alist);
    }
    emit_json(write_bundle(code, f.out, formats), "", out);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Flags &f, std::ostream &out) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    json checks;
    bool ok = true;
    if (is_bundle(f.input)) {
        MCssCode code = load_bundle(f.input);
        j["name"] = code.provenance.name;
        checks["hashes_match"] = true;
        OrthogonalityReport orth = check_orthogonality(code);
        checks["px_pz_orthogonal"] = orth.px_pz;
        checks["mx_px_zero"] = orth.mx_px ? json(*orth.mx_px) : json(nullptr);
        checks["mz_pz_zero"] = orth.mz_pz ? json(*orth.mz_pz) : json(nullptr);
        ok = orth.ok();
    } else {
        BuildConfig config = load_build_config(f.input);
        check_t(config.t, f.max_t);
        j["name"] = config.name;
        GroupSpec spec(config.orders);
        std::vector<RingElem> gens = parse_generators(config);
        std::vector<BitMatrix> maps = instantiate(symbolic_boundaries(config.t), gens, spec);
        bool complex_ok = verify_complex(maps);
        checks["boundary_squares_zero"] = complex_ok;
        try {
            MCssCode code = extract_mcss(maps, config.t, config.q_override);
            OrthogonalityReport orth = check_orthogonality(code);
            checks["px_pz_orthogonal"] = orth.px_pz;
            checks["mx_px_zero"] = orth.mx_px ? json(*orth.mx_px) : json(nullptr);
            checks["mz_pz_zero"] = orth.mz_pz ? json(*orth.mz_pz) : json(nullptr);
            ok = complex_ok && orth.ok();
        } catch (const VerificationError &e) {
            checks["failed"] = e.what();
            ok = false;
        }
    }
    j["checks"] = checks;
    j["ok"] = ok;
    emit_json(j, f.out, out);
    return ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- params

AnalysisOptions analysis_options(const Flags &f) {
    AnalysisOptions o;
    o.w_exhaustive = f.w_exhaustive;
    o.iterations = f.iterations;
    o.seed = f.seed;
    o.workers = f.workers;
    o.single_shot = !f.no_ssdist;
    o.confinement_w = f.confinement_w;
    o.confinement_mode = parse_mode(f.mode);
    o.timing = f.timing;
    return o;
}

int cmd_params(const Flags &f, std::ostream &out) {
    LoadedCode loaded = load_checked(f);
    CodeReport report = analyze(loaded.code, analysis_options(f));
    emit_json(report_to_json(report), f.out, out);
    return kExitOk;
}

// ---------------------------------------------------------------- distance

int cmd_distance(const Flags &f, std::ostream &out) {
    LoadedCode loaded = load_checked(f);
    const MCssCode &code = loaded.code;
    json j = header(code);
    size_t k = logical_count(code);
    j["k"] = k;
    for (PauliType type : selected_types(f.type)) {
        DistanceBound bound;
        if (k == 0) {
            bound.lower = code.n + 1;
        } else {
            ExhaustiveOptions ex;
            ex.w_max = f.w_exhaustive;
            ex.workers = f.workers;
            if (f.w_exhaustive > 0) {
                bound = distance_exhaustive(code, type, ex);
            }
            if (!bound.exact() && f.iterations > 0) {
                RandomizedOptions r;
                r.iterations = f.iterations;
                r.seed = derive_seed(f.seed, type == PauliType::X ? 1 : 2);
                r.workers = f.workers;
                r.stop_at = bound.lower;
                bound = combine(bound, distance_randomized(code, type, r));
            }
        }
        j["d_" + lower_name(type)] = bound_to_json(bound);
    }
    j["settings"] = settings(f);
    emit_json(j, f.out, out);
    return kExitOk;
}

// ---------------------------------------------------------------- ssdist

int cmd_ssdist(const Flags &f, std::ostream &out) {
    LoadedCode loaded = load_checked(f);
    const MCssCode &code = loaded.code;
    json j = header(code);
    ExhaustiveOptions ex;
    ex.w_max = f.w_exhaustive;
    ex.workers = f.workers;
    RandomizedOptions r;
    r.iterations = f.iterations;
    r.workers = f.workers;
    std::vector<PauliType> types = selected_types(f.type);
    size_t computed = 0;
    std::string missing;
    for (PauliType type : types) {
        bool present = type == PauliType::X ? code.m_x.has_value() : code.m_z.has_value();
        std::string key = "d_ss_" + lower_name(type);
        if (!present && types.size() == 2) {
            j[key] = nullptr;
            missing += (missing.empty() ? "" : ", ") + std::string("M_") + pauli_name(type);
            continue;
        }
        r.seed = derive_seed(f.seed, type == PauliType::X ? 3 : 4);
        j[key] = bound_to_json(single_shot_distance(code, type, ex, r));
        computed++;
    }
    if (computed == 0) {
        throw MissingMetacheckError("code '" + code.provenance.name + "' has no metachecks at t=" +
                                    std::to_string(code.t) + ", q=" + std::to_string(code.q));
    }
    if (!missing.empty()) {
        j["absent"] = missing;
    }
    j["settings"] = settings(f);
    emit_json(j, f.out, out);
    return kExitOk;
}

// ---------------------------------------------------------------- confine

int cmd_confine(const Flags &f, std::ostream &out) {
    LoadedCode loaded = load_checked(f);
    const MCssCode &code = loaded.code;
    json j = header(code);
    ConfinementOptions c;
    c.w_max = f.confinement_w.value_or(4);
    c.mode = parse_mode(f.mode);
    c.workers = f.workers;
    std::optional<ConfinementProfile> px;
    std::optional<ConfinementProfile> pz;
    for (PauliType type : selected_types(f.type)) {
        c.seed = derive_seed(f.seed, type == PauliType::X ? 5 : 6);
        ConfinementProfile p = confinement_profile(code, type, c);
        j["confinement_" + lower_name(type)] = profile_to_json(p);
        (type == PauliType::X ? px : pz) = std::move(p);
    }
    bool exact = false;
    std::optional<size_t> d_s = profile_minimum(px ? &*px : nullptr, pz ? &*pz : nullptr, &exact);
    j["d_s"] = {{"value", d_s ? json(*d_s) : json(nullptr)}, {"status", exact ? "exact" : "upper_bound"}};
    j["settings"] = {{"seed", f.seed}, {"workers", f.workers}, {"confinement_w", c.w_max}, {"mode", f.mode}};
    emit_json(j, f.out, out);
    return kExitOk;
}

// ---------------------------------------------------------------- search

int cmd_search(const Flags &f, const CLI::App &sub, std::ostream &out, std::ostream &err) {
    SearchConfig config = load_search_config(f.input);
    if (sub.count("--seed")) {
        config.seed = f.seed;
    }
    if (sub.count("--workers")) {
        config.workers = f.workers;
    }
    if (sub.count("--w-exhaustive")) {
        config.w_exhaustive = f.w_exhaustive;
    }
    if (sub.count("--iterations")) {
        config.iterations = f.iterations;
    }
    if (f.max_candidates) {
        config.max_candidates = *f.max_candidates;
    }
    check_t(config.t, f.max_t);
    SearchStats stats;
    if (f.out.empty()) {
        stats = run_search_jsonl(config, out);
    } else {
        std::ofstream file(f.out, std::ios::binary);
        if (!file) {
            throw Error("cannot open '" + f.out + "' for writing");
        }
        stats = run_search_jsonl(config, file);
    }
    err << "search: drew " << stats.drawn << ", evaluated " << stats.evaluated << ", accepted " << stats.accepted
        << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- export

int cmd_export(const Flags &f, std::ostream &out) {
    LoadedCode loaded = load_checked(f);
    const MCssCode &code = loaded.code;
    if (f.format == "json") {
        json manifest = make_manifest(code, {});
        if (f.out.empty()) {
            emit_json(manifest, "", out);
        } else {
            fs::create_directories(f.out);
            emit_json(manifest, (fs::path(f.out) / "manifest.json").string(), out);
        }
        return kExitOk;
    }
    if (f.out.empty()) {
        throw std::invalid_argument("export --format " + f.format + " needs --out DIR");
    }
    fs::create_directories(f.out);
    json written = json::array();
    for (const auto &[name, mat] : named_matrices(code)) {
        std::string path = (fs::path(f.out) / (name + "." + f.format)).string();
        write_text_file(path, f.format == "alist" ? to_alist(*mat) : to_mtx(*mat));
        written.push_back(path);
    }
    emit_json(json{{"written", written}}, "", out);
    return kExitOk;
}

// ---------------------------------------------------------------- table2

struct RowResult {
    int row = 0;
    BuildConfig config;
    CodeReport report;
    size_t w_eff = 0;
    std::vector<std::string> mismatches;
    std::string status;
};

size_t effective_w(size_t n, size_t requested) {
    uint64_t budget = enumeration_budget();
    size_t w = requested;
    while (w > 0 && binomial_sum(n, w) > budget) {
        w--;
    }
    return w;
}

RowResult evaluate_row(int row, const std::string &path, const Flags &f) {
    RowResult r;
    r.row = row;
    r.config = load_build_config(path);
    check_t(r.config.t, f.max_t);
    MCssCode code = build_code(r.config);
    r.w_eff = effective_w(code.n, f.w_exhaustive);
    AnalysisOptions o;
    o.w_exhaustive = r.w_eff;
    o.iterations = f.iterations;
    o.seed = f.seed;
    o.workers = f.workers;
    o.single_shot = false;
    r.report = analyze(code, o);

    const ExpectedParams &e = r.config.expected;
    auto compare = [&](const char *name, const std::optional<size_t> &want, size_t got) {
        if (want && *want != got) {
            r.mismatches.push_back(std::string(name) + "=" + std::to_string(got) + " (reference " +
                                   std::to_string(*want) + ")");
        }
    };
    compare("n", e.n, r.report.n);
    compare("k", e.k, r.report.k);
    if (e.w_med && *e.w_med != r.report.weights.w_med) {
        r.mismatches.push_back("w_med=" + number_to_json(r.report.weights.w_med).dump() + " (reference " +
                               number_to_json(*e.w_med).dump() + ")");
    }
    compare("w_max", e.w_max, r.report.weights.w_max);

    const DistanceBound &dx = r.report.d_x;
    const DistanceBound &dz = r.report.d_z;
    size_t lower = std::min(dx.lower, dz.lower);
    std::optional<size_t> upper;
    for (const DistanceBound *b : {&dx, &dz}) {
        if (b->upper && (!upper || *b->upper < *upper)) {
            upper = b->upper;
        }
    }
    bool d_exact = upper && *upper == lower;
    if (e.d) {
        if (upper && *upper < *e.d) {
            r.mismatches.push_back("found a logical of weight " + std::to_string(*upper) + " below reference d=" +
                                   std::to_string(*e.d));
        }
        if (lower > *e.d) {
            r.mismatches.push_back("certified d>=" + std::to_string(lower) + " above reference d=" +
                                   std::to_string(*e.d));
        }
    }
    if (!r.mismatches.empty()) {
        r.status = "mismatch";
    } else if (d_exact) {
        r.status = "match";
    } else {
        r.status = "upper-bound only";
    }
    return r;
}

std::string d_text(const CodeReport &report) {
    size_t lower = std::min(report.d_x.lower, report.d_z.lower);
    std::optional<size_t> upper;
    for (const DistanceBound *b : {&report.d_x, &report.d_z}) {
        if (b->upper && (!upper || *b->upper < *upper)) {
            upper = b->upper;
        }
    }
    if (upper && *upper == lower) {
        return std::to_string(lower) + " (exact)";
    }
    std::string s = std::to_string(lower) + ".." + (upper ? std::to_string(*upper) : std::string("?"));
    return s;
}

std::string opt_text(const std::optional<size_t> &v) {
    return v ? std::to_string(*v) : std::string("-");
}

std::string opt_text(const std::optional<double> &v) {
    return v ? number_to_json(*v).dump() : std::string("-");
}

int cmd_table2(const Flags &f, std::ostream &out) {
    std::vector<std::pair<int, std::string>> rows;
    if (f.rows.empty()) {
        std::vector<fs::path> files;
        for (const auto &entry : fs::directory_iterator(f.fixtures)) {
            std::string name = entry.path().filename().string();
            if (name.rfind("row", 0) == 0 && entry.path().extension() == ".yaml") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto &p : files) {
            rows.emplace_back(std::stoi(p.stem().string().substr(3)), p.string());
        }
        if (rows.empty()) {
            throw Error("no row fixtures found in '" + f.fixtures + "'");
        }
    } else {
        for (int row : f.rows) {
            std::ostringstream name;
            name << "row" << std::setw(2) << std::setfill('0') << row << ".yaml";
            fs::path p = fs::path(f.fixtures) / name.str();
            if (!fs::exists(p)) {
                throw std::invalid_argument("no fixture for row " + std::to_string(row) + " (" + p.string() + ")");
            }
            rows.emplace_back(row, p.string());
        }
    }

    std::vector<RowResult> results;
    for (const auto &[row, path] : rows) {
        results.push_back(evaluate_row(row, path, f));
    }
    bool any_mismatch =
        std::any_of(results.begin(), results.end(), [](const RowResult &r) { return r.status == "mismatch"; });

    if (f.format == "json") {
        json j;
        j["schema_version"] = kReportSchemaVersion;
        j["settings"] = settings(f);
        json arr = json::array();
        for (const auto &r : results) {
            const ExpectedParams &e = r.config.expected;
            json row;
            row["row"] = r.row;
            row["name"] = r.config.name;
            row["reference"] = {{"n", e.n ? json(*e.n) : json(nullptr)},         {"k", e.k ? json(*e.k) : json(nullptr)},
                                {"d", e.d ? json(*e.d) : json(nullptr)},         {"w_med", e.w_med ? number_to_json(*e.w_med) : json(nullptr)},
                                {"w_max", e.w_max ? json(*e.w_max) : json(nullptr)}};
            row["computed"] = {{"n", r.report.n},
                               {"k", r.report.k},
                               {"d_x", bound_to_json(r.report.d_x)},
                               {"d_z", bound_to_json(r.report.d_z)},
                               {"w_med", number_to_json(r.report.weights.w_med)},
                               {"w_max", r.report.weights.w_max}};
            row["w_exhaustive_used"] = r.w_eff;
            row["status"] = r.status;
            row["mismatches"] = r.mismatches;
            arr.push_back(row);
        }
        j["rows"] = arr;
        j["ok"] = !any_mismatch;
        emit_json(j, f.out, out);
    } else {
        std::ostringstream s;
        s << std::left << std::setw(5) << "row" << std::setw(22) << "reference" << std::setw(6) << "n" << std::setw(5)
          << "k" << std::setw(12) << "d" << std::setw(7) << "w_med" << std::setw(7) << "w_max" << "status\n";
        for (const auto &r : results) {
            const ExpectedParams &e = r.config.expected;
            std::string ref = "[[" + opt_text(e.n) + "," + opt_text(e.k) + "," + opt_text(e.d) + "]] " +
                              opt_text(e.w_med) + "/" + opt_text(e.w_max);
            s << std::left << std::setw(5) << r.row << std::setw(22) << ref << std::setw(6) << r.report.n
              << std::setw(5) << r.report.k << std::setw(12) << d_text(r.report) << std::setw(7)
              << number_to_json(r.report.weights.w_med).dump() << std::setw(7) << r.report.weights.w_max << r.status;
            if (r.w_eff < f.w_exhaustive) {
                s << " (exhaustive capped at w=" << r.w_eff << ")";
            }
            s << "\n";
            for (const auto &m : r.mismatches) {
                s << "       " << m << "\n";
            }
        }
        write_output(s.str(), f.out, out);
    }
    return any_mismatch ? kExitVerification : kExitOk;
}

// ---------------------------------------------------------------- wiring

void add_distance_flags(CLI::App *sub, Flags &f) {
    sub->add_option("--w-exhaustive", f.w_exhaustive, "Certify by exhaustive enumeration up to this weight")
        ->capture_default_str();
    sub->add_option("--iterations", f.iterations, "Randomized information-set iterations")->capture_default_str();
    sub->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    sub->add_option("--workers", f.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_input(CLI::App *sub, Flags &f, const char *what) {
    sub->add_option("input", f.input, what)->required();
}

void add_out(CLI::App *sub, Flags &f, const char *what) {
    sub->add_option("--out", f.out, what);
}

const char *kInputHelp = "YAML config or bundle directory";

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build and analyze multivariate multicycle CSS codes with metachecks", "mmcodes"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--max-t", f.max_t, "Largest accepted Koszul length t")->capture_default_str();

    CLI::App *build = app.add_subcommand("build", "Build a code from a config and write a matrix bundle");
    build->add_option("config", f.input, "YAML config")->required();
    build->add_option("--out", f.out, "Bundle directory")->required();
    build->add_option("--format", f.bundle_format, "Matrix file format")
        ->check(CLI::IsMember({"mtx", "alist", "both"}))
        ->capture_default_str();

    CLI::App *verify = app.add_subcommand("verify", "Check the chain complex and orthogonality relations");
    add_input(verify, f, kInputHelp);
    add_out(verify, f, "Write the JSON result here instead of stdout");

    CLI::App *params = app.add_subcommand("params", "Compute n, k, distances, single-shot distances and confinement");
    add_input(params, f, kInputHelp);
    add_distance_flags(params, f);
    params->add_option("--confinement-w", f.confinement_w, "Compute confinement profiles up to this weight");
    params->add_option("--confinement-mode", f.mode, "Confinement mode")
        ->check(CLI::IsMember({"exact", "cluster"}))
        ->capture_default_str();
    params->add_flag("--no-ssdist", f.no_ssdist, "Skip single-shot distances");
    params->add_flag("--timing", f.timing, "Include per-stage wall-clock seconds");
    add_out(params, f, "Write the JSON report here instead of stdout");

    CLI::App *distance = app.add_subcommand("distance", "Bound d_X and d_Z");
    add_input(distance, f, kInputHelp);
    add_distance_flags(distance, f);
    distance->add_option("--type", f.type, "Logical type")->check(CLI::IsMember({"x", "z", "both"}));
    add_out(distance, f, "Write the JSON result here instead of stdout");

    CLI::App *ssdist = app.add_subcommand("ssdist", "Bound the single-shot distances");
    add_input(ssdist, f, kInputHelp);
    add_distance_flags(ssdist, f);
    ssdist->add_option("--type", f.type, "Syndrome type")->check(CLI::IsMember({"x", "z", "both"}));
    add_out(ssdist, f, "Write the JSON result here instead of stdout");

    CLI::App *confine = app.add_subcommand("confine", "Compute confinement profiles");
    add_input(confine, f, kInputHelp);
    confine->add_option("--confinement-w,-w", f.confinement_w, "Largest reduced error weight (default 4)");
    confine->add_option("--mode", f.mode, "Confinement mode")
        ->check(CLI::IsMember({"exact", "cluster"}))
        ->capture_default_str();
    confine->add_option("--type", f.type, "Error type")->check(CLI::IsMember({"x", "z", "both"}));
    confine->add_option("--seed", f.seed, "Random seed for cluster mode")->capture_default_str();
    confine->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
    add_out(confine, f, "Write the JSON result here instead of stdout");

    CLI::App *search = app.add_subcommand("search", "Randomized search for codes, one JSON report per line");
    search->add_option("config", f.input, "YAML search config")->required();
    add_distance_flags(search, f);
    search->add_option("--max-candidates", f.max_candidates, "Number of candidate draws");
    add_out(search, f, "Write JSONL here instead of stdout");

    CLI::App *exp = app.add_subcommand("export", "Export check matrices or the manifest");
    add_input(exp, f, kInputHelp);
    exp->add_option("--format", f.format, "Output format")->required()->check(CLI::IsMember({"alist", "mtx", "json"}));
    add_out(exp, f, "Output directory");

    CLI::App *table2 = app.add_subcommand("table2", "Recompute the bundled zoo rows and compare with reference values");
    table2->add_option("rows", f.rows, "Row numbers (default: all)")->check(CLI::PositiveNumber);
    table2->add_option("--fixtures", f.fixtures, "Directory holding rowNN.yaml")->capture_default_str();
    table2->add_option("--w-exhaustive", f.table_w_exhaustive, "Exhaustive weight, capped by the budget")
        ->capture_default_str();
    table2->add_option("--iterations", f.table_iterations, "Randomized iterations")->capture_default_str();
    table2->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    table2->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
    table2->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    add_out(table2, f, "Write the table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) {
            return cmd_build(f, out);
        }
        if (*verify) {
            return cmd_verify(f, out);
        }
        if (*params) {
            return cmd_params(f, out);
        }
        if (*distance) {
            return cmd_distance(f, out);
        }
        if (*ssdist) {
            return cmd_ssdist(f, out);
        }
        if (*confine) {
            return cmd_confine(f, out);
        }
        if (*search) {
            return cmd_search(f, *search, out, err);
        }
        if (*exp) {
            return cmd_export(f, out);
        }
        if (*table2) {
            if (f.format.empty()) {
                f.format = "text";
            }
            f.w_exhaustive = f.table_w_exhaustive;
            f.iterations = f.table_iterations;
            return cmd_table2(f, out);
        }
    } catch (const BudgetError &e) {
        err << "error: " << e.what() << "\n"
            << "hint: lower --w-exhaustive or --confinement-w, or raise MMCODES_BUDGET\n";
        return kExitBudget;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        // VerificationError, MissingMetacheckError, I/O and everything else.
        err << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

}  // namespace mmcodes::cli
