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

#include "bcce/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bcce/asymptotics.hpp"
#include "bcce/error.hpp"
#include "numfmt.hpp"

namespace bcce {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

}  // namespace

std::string_view to_string(CollusionMode mode) {
    switch (mode) {
        case CollusionMode::NonColluding: return "noncolluding";
        case CollusionMode::Colluding: return "colluding";
        case CollusionMode::NearestOnly: return "nearest";
    }
    return "unknown";
}

CollusionMode parse_collusion_mode(std::string_view text) {
    const std::string s = lower(trim(text));
    if (s == "noncolluding" || s == "non-colluding" || s == "non_colluding") return CollusionMode::NonColluding;
    if (s == "colluding") return CollusionMode::Colluding;
    if (s == "nearest" || s == "nearestonly" || s == "nearest_only" || s == "nearest-only") {
        return CollusionMode::NearestOnly;
    }
    throw ConfigError("unknown collusion mode '" + std::string(text) + "'");
}

void RawConfig::merge(const RawConfig& o) {
    if (o.n_antennas) n_antennas = o.n_antennas;
    if (o.n_users) n_users = o.n_users;
    if (o.network_load) network_load = o.network_load;
    if (o.snr_db) {
        snr_db = o.snr_db;
        if (!o.snr_linear) snr_linear.reset();
    }
    if (o.snr_linear) snr_linear = o.snr_linear;
    if (o.path_loss_exponent) path_loss_exponent = o.path_loss_exponent;
    if (o.eavesdropper_density) eavesdropper_density = o.eavesdropper_density;
    if (o.regularization) regularization = o.regularization;
    if (o.collusion_mode) collusion_mode = o.collusion_mode;
    if (o.seed) seed = o.seed;
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

double SystemConfig::snr_db() const noexcept { return linear_to_db(snr_linear_); }

bool SystemConfig::eta_is_four() const noexcept { return std::abs(path_loss_exponent_ - 4.0) < 1e-12; }

ClosedFormSupport SystemConfig::closed_forms() const noexcept {
    const bool four = eta_is_four();
    return ClosedFormSupport{true, four, four};
}

SystemConfig validate_config(const RawConfig& raw) {
    SystemConfig c;

    if (!raw.n_antennas) throw ConfigError("n_antennas is required");
    if (*raw.n_antennas < 1) throw ConfigError("n_antennas must be at least 1");
    c.n_antennas_ = static_cast<int>(*raw.n_antennas);

    if (raw.n_users) {
        if (*raw.n_users < 1) throw ConfigError("n_users must be at least 1");
        c.n_users_ = static_cast<int>(*raw.n_users);
    } else if (raw.network_load) {
        require_finite(*raw.network_load, "network_load");
        if (*raw.network_load <= 0.0) throw ConfigError("network_load must be positive");
        const long k = std::lround(*raw.network_load * static_cast<double>(c.n_antennas_));
        if (k < 1) throw ConfigError("network_load * n_antennas rounds to zero users");
        c.n_users_ = static_cast<int>(k);
    } else {
        throw ConfigError("one of n_users or network_load is required");
    }
    c.network_load_ = static_cast<double>(c.n_users_) / static_cast<double>(c.n_antennas_);

    if (raw.snr_linear) {
        c.snr_linear_ = *raw.snr_linear;
    } else if (raw.snr_db) {
        require_finite(*raw.snr_db, "snr_db");
        c.snr_linear_ = db_to_linear(*raw.snr_db);
    } else {
        throw ConfigError("one of snr_db or snr_linear is required");
    }
    require_finite(c.snr_linear_, "snr");
    if (c.snr_linear_ <= 0.0) throw ConfigError("snr must be positive on the linear scale");

    c.path_loss_exponent_ = raw.path_loss_exponent.value_or(4.0);
    require_finite(c.path_loss_exponent_, "path_loss_exponent");
    if (c.path_loss_exponent_ <= 2.0) throw ConfigError("path-loss exponent must exceed 2");

    c.eavesdropper_density_ = raw.eavesdropper_density.value_or(0.0);
    require_finite(c.eavesdropper_density_, "eavesdropper_density");
    if (c.eavesdropper_density_ < 0.0) throw ConfigError("eavesdropper density must be nonnegative");

    c.regularization_ = raw.regularization
                            ? *raw.regularization
                            : xi_bcc_opt(c.network_load_, c.snr_linear_);
    require_finite(c.regularization_, "regularization");
    if (c.regularization_ <= 0.0) throw ConfigError("regularization must be positive");

    c.collusion_mode_ = raw.collusion_mode.value_or(CollusionMode::NonColluding);
    c.master_seed_ = raw.seed.value_or(0);
    return c;
}

RawConfig SystemConfig::to_raw() const {
    RawConfig r;
    r.n_antennas = n_antennas_;
    r.n_users = n_users_;
    r.network_load = network_load_;
    r.snr_linear = snr_linear_;
    r.path_loss_exponent = path_loss_exponent_;
    r.eavesdropper_density = eavesdropper_density_;
    r.regularization = regularization_;
    r.collusion_mode = collusion_mode_;
    r.seed = master_seed_;
    return r;
}

SystemConfig SystemConfig::with_regularization(double xi) const {
    auto r = to_raw();
    r.regularization = xi;
    return validate_config(r);
}

SystemConfig SystemConfig::with_density(double lambda_e) const {
    auto r = to_raw();
    r.eavesdropper_density = lambda_e;
    return validate_config(r);
}

SystemConfig SystemConfig::with_mode(CollusionMode mode) const {
    auto r = to_raw();
    r.collusion_mode = mode;
    return validate_config(r);
}

SystemConfig SystemConfig::with_antennas(int n) const {
    auto r = to_raw();
    r.n_antennas = n;
    r.n_users.reset();
    return validate_config(r);
}

SystemConfig SystemConfig::with_seed(std::uint64_t seed) const {
    auto r = to_raw();
    r.seed = seed;
    return validate_config(r);
}

RawConfig parse_config_text(std::string_view text) {
    RawConfig r;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find_first_of("=:");
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "n_antennas") {
            r.n_antennas = detail::parse_integer<long>(value, key);
        } else if (key == "n_users") {
            r.n_users = detail::parse_integer<long>(value, key);
        } else if (key == "network_load") {
            r.network_load = detail::parse_double(value, key);
        } else if (key == "snr_db") {
            r.snr_db = detail::parse_double(value, key);
        } else if (key == "snr_linear") {
            r.snr_linear = detail::parse_double(value, key);
        } else if (key == "path_loss_exponent") {
            r.path_loss_exponent = detail::parse_double(value, key);
        } else if (key == "eavesdropper_density") {
            r.eavesdropper_density = detail::parse_double(value, key);
        } else if (key == "regularization") {
            r.regularization = detail::parse_double(value, key);
        } else if (key == "collusion_mode") {
            r.collusion_mode = parse_collusion_mode(value);
        } else if (key == "seed") {
            r.seed = detail::parse_integer<std::uint64_t>(value, key);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return r;
}

RawConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const SystemConfig& c) {
    std::ostringstream out;
    out << "n_antennas = " << c.n_antennas() << '\n'
        << "n_users = " << c.n_users() << '\n'
        << "network_load = " << detail::format_g17(c.network_load()) << '\n'
        << "snr_db = " << detail::format_g17(c.snr_db()) << '\n'
        << "snr_linear = " << detail::format_g17(c.snr_linear()) << '\n'
        << "path_loss_exponent = " << detail::format_g17(c.path_loss_exponent()) << '\n'
        << "eavesdropper_density = " << detail::format_g17(c.eavesdropper_density()) << '\n'
        << "regularization = " << detail::format_g17(c.regularization()) << '\n'
        << "collusion_mode = " << to_string(c.collusion_mode()) << '\n'
        << "seed = " << c.master_seed() << '\n';
    return out.str();
}

}  // namespace bcce
