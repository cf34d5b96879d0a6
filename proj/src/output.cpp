// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "bcce/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <openssl/evp.h>
#include <system_error>
#include <vector>

#include "numfmt.hpp"

namespace bcce {

namespace {

const char* const kEchoColumns[] = {"n_antennas",      "n_users",           "network_load",
                                    "snr_db",          "path_loss_exponent", "eavesdropper_density",
                                    "regularization",  "collusion_mode",    "seed"};

std::string cell_text(const Cell& c) { return c ? detail::format_g17(*c) : std::string(); }

void echo(std::string& line, const SystemConfig& cfg, CollusionMode mode) {
    line += std::to_string(cfg.n_antennas()) + ',' + std::to_string(cfg.n_users()) + ',' +
            detail::format_g17(cfg.network_load()) + ',' + detail::format_g17(cfg.snr_db()) + ',' +
            detail::format_g17(cfg.path_loss_exponent()) + ',' + detail::format_g17(cfg.eavesdropper_density()) +
            ',' + detail::format_g17(cfg.regularization()) + ',' + std::string(to_string(mode)) + ',' +
            std::to_string(cfg.master_seed());
}

nlohmann::ordered_json config_json(const SystemConfig& c) {
    nlohmann::ordered_json j;
    j["n_antennas"] = c.n_antennas();
    j["n_users"] = c.n_users();
    j["network_load"] = c.network_load();
    j["snr_linear"] = c.snr_linear();
    j["snr_db"] = c.snr_db();
    j["path_loss_exponent"] = c.path_loss_exponent();
    j["eavesdropper_density"] = c.eavesdropper_density();
    j["regularization"] = c.regularization();
    j["collusion_mode"] = std::string(to_string(c.collusion_mode()));
    j["seed"] = c.master_seed();
    return j;
}

}  // namespace

std::string rows_to_csv(const ExperimentRows& rows) {
    std::vector<std::string> columns;
    for (const auto& row : rows) {
        for (const auto& [name, value] : row.values) {
            if (std::find(columns.begin(), columns.end(), name) == columns.end()) columns.push_back(name);
        }
    }
    std::string out;
    for (const char* c : kEchoColumns) {
        out += c;
        out += ',';
    }
    for (const auto& c : columns) out += c + ',';
    out += "trials,flag\n";
    for (const auto& row : rows) {
        std::string line;
        echo(line, row.config, row.mode);
        for (const auto& c : columns) line += ',' + cell_text(row.get(c));
        line += ',' + detail::format_g17(row.trials) + ',' + row.flag + '\n';
        out += line;
    }
    return out;
}

std::string git_blob_sha1(std::string_view content) {
    const std::string header = "blob " + std::to_string(content.size()) + '\0';
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("cannot allocate digest context");
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                    EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 &&
                    EVP_DigestFinal_ex(ctx, md, &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok) throw std::runtime_error("SHA-1 digest failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

AtomicFile::AtomicFile(std::filesystem::path path) : path_(std::move(path)) {
    std::ofstream probe(partial_path(), std::ios::binary | std::ios::trunc);
    if (!probe) throw OutputError("cannot write " + partial_path().string());
}

std::filesystem::path AtomicFile::partial_path() const {
    std::filesystem::path p = path_;
    p += ".partial";
    return p;
}

void AtomicFile::commit(std::string_view content) {
    if (committed_) throw OutputError(path_.string() + " already committed");
    {
        std::ofstream out(partial_path(), std::ios::binary | std::ios::trunc);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw OutputError("write failed for " + partial_path().string());
    }
    std::error_code ec;
    std::filesystem::rename(partial_path(), path_, ec);
    if (ec) throw OutputError("cannot move " + partial_path().string() + " into place: " + ec.message());
    committed_ = true;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv) {
    std::filesystem::path p = csv;
    p.replace_extension(".json");
    if (p == csv) p += ".json";
    return p;
}

std::string manifest_json(const ExperimentSpec& spec, const std::filesystem::path& csv, std::string_view csv_sha1,
                          double wall_seconds, std::size_t n_rows) {
    nlohmann::ordered_json j;
    j["figure_id"] = std::string(to_string(spec.figure_id));
    j["seed"] = spec.sweep.empty() ? 0 : spec.sweep.front().master_seed();
    j["n_trials"] = spec.n_trials;
    j["n_field_draws_per_channel"] = spec.n_field_draws_per_channel;
    auto modes = nlohmann::ordered_json::array();
    for (CollusionMode m : spec.modes) modes.push_back(std::string(to_string(m)));
    j["modes"] = modes;
    auto sweep = nlohmann::ordered_json::array();
    for (const auto& c : spec.sweep) sweep.push_back(config_json(c));
    j["sweep"] = sweep;
    j["csv"] = csv.filename().string();
    j["csv_git_sha1"] = std::string(csv_sha1);
    j["rows"] = n_rows;
    j["wall_time_seconds"] = wall_seconds;
    return j.dump(2) + '\n';
}

WrittenOutput write_outputs(const ExperimentSpec& spec, const ExperimentRows& rows, double wall_seconds) {
    if (spec.output_path.empty()) throw OutputError("no output path given");
    WrittenOutput w;
    w.csv = spec.output_path;
    w.manifest = manifest_path_for(w.csv);
    AtomicFile csv_file(w.csv);
    AtomicFile manifest_file(w.manifest);
    const std::string csv = rows_to_csv(rows);
    w.csv_sha1 = git_blob_sha1(csv);
    csv_file.commit(csv);
    manifest_file.commit(manifest_json(spec, w.csv, w.csv_sha1, wall_seconds, rows.size()));
    return w;
}

}  // namespace bcce
