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

#include "cli/bundle.h"

#include <algorithm>
#include <filesystem>

#include <openssl/evp.h>

#include "mmcodes/errors.h"
#include "mmcodes/matrix_io.h"

namespace mmcodes::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static const char *kHex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; i++) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 15];
    }
    return out;
}

std::vector<std::pair<std::string, const BitMatrix *>> named_matrices(const MCssCode &code) {
    std::vector<std::pair<std::string, const BitMatrix *>> out = {{"P_X", &code.p_x}, {"P_Z", &code.p_z}};
    if (code.m_x) {
        out.emplace_back("M_X", &*code.m_x);
    }
    if (code.m_z) {
        out.emplace_back("M_Z", &*code.m_z);
    }
    return out;
}

namespace {

std::string extension(MatrixFormat f) {
    return f == MatrixFormat::Mtx ? "mtx" : "alist";
}

}  // namespace

json make_manifest(const MCssCode &code, const std::vector<MatrixFormat> &formats) {
    json m;
    m["schema_version"] = kManifestSchemaVersion;
    m["name"] = code.provenance.name;
    m["t"] = code.t;
    m["q"] = code.q;
    VariableNames names = code.variables ? *code.variables
                                         : VariableNames::defaults(code.spec ? code.spec->num_vars() : 0);
    if (code.spec) {
        m["orders"] = code.spec->orders();
        m["ring_size"] = code.spec->size();
        m["variables"] = names.names();
    } else {
        m["orders"] = nullptr;
        m["ring_size"] = nullptr;
        m["variables"] = nullptr;
    }
    json gens = json::array();
    for (const auto &g : code.generators) {
        gens.push_back(render(g, names));
    }
    m["generators"] = gens;
    m["n"] = code.n;
    m["chain_dims"] = code.chain_dims;

    json matrices;
    for (const auto &[name, mat] : named_matrices(code)) {
        json entry;
        entry["rows"] = mat->rows();
        entry["cols"] = mat->cols();
        json files;
        for (MatrixFormat f : formats) {
            files[extension(f)] = name + "." + extension(f);
        }
        entry["files"] = files;
        entry["sha256"] = sha256_hex(to_mtx(*mat));
        matrices[name] = entry;
    }
    m["matrices"] = matrices;
    if (!code.m_x || !code.m_z) {
        m["metachecks"] = "absent for " + std::string(!code.m_x && !code.m_z ? "both types" : !code.m_x ? "X" : "Z") +
                          " at t=" + std::to_string(code.t) + ", q=" + std::to_string(code.q);
    } else {
        m["metachecks"] = "present";
    }
    OrthogonalityReport orth = check_orthogonality(code);
    json checks;
    checks["px_pz_orthogonal"] = orth.px_pz;
    checks["mx_px_zero"] = orth.mx_px ? json(*orth.mx_px) : json(nullptr);
    checks["mz_pz_zero"] = orth.mz_pz ? json(*orth.mz_pz) : json(nullptr);
    m["checks"] = checks;
    return m;
}

json write_bundle(const MCssCode &code, const std::string &dir, const std::vector<MatrixFormat> &formats) {
    fs::create_directories(dir);
    for (const auto &[name, mat] : named_matrices(code)) {
        for (MatrixFormat f : formats) {
            std::string path = (fs::path(dir) / (name + "." + extension(f))).string();
            write_text_file(path, f == MatrixFormat::Mtx ? to_mtx(*mat) : to_alist(*mat));
        }
    }
    json manifest = make_manifest(code, formats);
    write_text_file((fs::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    return manifest;
}

namespace {

fs::path bundle_dir(const std::string &path) {
    fs::path p(path);
    if (fs::is_directory(p)) {
        return p;
    }
    return p.parent_path();
}

}  // namespace

bool is_bundle(const std::string &path) {
    fs::path p(path);
    if (fs::is_directory(p)) {
        return fs::exists(p / "manifest.json");
    }
    return p.filename() == "manifest.json";
}

MCssCode load_bundle(const std::string &path) {
    fs::path dir = bundle_dir(path);
    std::string manifest_path = (dir / "manifest.json").string();
    json m;
    try {
        m = json::parse(read_text_file(manifest_path));
    } catch (const json::exception &e) {
        throw ParseError(manifest_path + ": " + e.what());
    }
    try {
        if (m.at("schema_version").get<int>() != kManifestSchemaVersion) {
            throw ParseError(manifest_path + ": unsupported schema_version " + m.at("schema_version").dump());
        }
        MCssCode code;
        code.provenance = {m.at("name").get<std::string>(), manifest_path};
        code.t = m.at("t").get<size_t>();
        code.q = m.at("q").get<size_t>();
        code.chain_dims = m.at("chain_dims").get<std::vector<size_t>>();
        if (!m.at("orders").is_null()) {
            GroupSpec spec(m.at("orders").get<std::vector<uint32_t>>());
            auto listed = m.at("variables").get<std::vector<std::string>>();
            bool letters = std::all_of(listed.begin(), listed.end(), [](const std::string &v) { return v.size() == 1; });
            VariableNames names = letters ? VariableNames(listed) : VariableNames::defaults(spec.num_vars());
            for (const auto &g : m.at("generators")) {
                code.generators.push_back(parse_poly(g.get<std::string>(), spec, names));
            }
            code.spec = spec;
            code.variables = names;
        }
        auto read_matrix = [&](const std::string &name) -> std::optional<BitMatrix> {
            if (!m.at("matrices").contains(name)) {
                return std::nullopt;
            }
            const json &entry = m.at("matrices").at(name);
            const json &files = entry.at("files");
            BitMatrix mat;
            if (files.contains("mtx")) {
                mat = from_mtx(read_text_file((dir / files.at("mtx").get<std::string>()).string()));
            } else if (files.contains("alist")) {
                mat = from_alist(read_text_file((dir / files.at("alist").get<std::string>()).string()));
            } else {
                throw ParseError(manifest_path + ": matrix " + name + " lists no files");
            }
            if (mat.rows() != entry.at("rows").get<size_t>() || mat.cols() != entry.at("cols").get<size_t>()) {
                throw VerificationError(name + " has shape " + std::to_string(mat.rows()) + "x" +
                                        std::to_string(mat.cols()) + ", manifest says " + entry.at("rows").dump() +
                                        "x" + entry.at("cols").dump());
            }
            if (sha256_hex(to_mtx(mat)) != entry.at("sha256").get<std::string>()) {
                throw VerificationError(name + " does not match the SHA-256 recorded in the manifest");
            }
            return mat;
        };
        auto p_x = read_matrix("P_X");
        auto p_z = read_matrix("P_Z");
        if (!p_x || !p_z) {
            throw ParseError(manifest_path + ": the manifest must list P_X and P_Z");
        }
        code.p_x = std::move(*p_x);
        code.p_z = std::move(*p_z);
        code.m_x = read_matrix("M_X");
        code.m_z = read_matrix("M_Z");
        code.n = code.p_x.cols();
        if (code.n != m.at("n").get<size_t>()) {
            throw VerificationError("P_X has " + std::to_string(code.n) + " columns, manifest says n=" +
                                    m.at("n").dump());
        }
        return code;
    } catch (const json::exception &e) {
        throw ParseError(manifest_path + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(manifest_path + ": " + e.what());
    }
}

LoadedCode load_code(const std::string &path) {
    if (is_bundle(path)) {
        return {load_bundle(path), std::nullopt};
    }
    BuildConfig config = load_build_config(path);
    MCssCode code = build_code(config);
    return {std::move(code), std::move(config)};
}

}  // namespace mmcodes::cli
