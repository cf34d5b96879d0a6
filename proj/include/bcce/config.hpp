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

#ifndef BCCE_CONFIG_HPP
#define BCCE_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace bcce {

/// How the external eavesdroppers combine what they overhear.
enum class CollusionMode {
    NonColluding,  ///< strongest single eavesdropper (max of SINRs)
    Colluding,     ///< maximal-ratio combining over the whole field (sum of SINRs)
    NearestOnly,   ///< only the eavesdropper closest to the base station
};

std::string_view to_string(CollusionMode mode);

/// Accepts `noncolluding`, `colluding`, `nearest` (plus a few spellings of each).
CollusionMode parse_collusion_mode(std::string_view text);

/// Unvalidated scenario parameters, as collected from flags or a config file.
/// Unset entries fall back to defaults inside validate_config().
struct RawConfig {
    std::optional<long> n_antennas;
    std::optional<long> n_users;
    std::optional<double> network_load;
    std::optional<double> snr_db;
    std::optional<double> snr_linear;
    std::optional<double> path_loss_exponent;
    std::optional<double> eavesdropper_density;
    std::optional<double> regularization;
    std::optional<CollusionMode> collusion_mode;
    std::optional<std::uint64_t> seed;

    /// Copies every entry that is set in `overrides` over this record.
    void merge(const RawConfig& overrides);
};

struct ClosedFormSupport {
    bool noncolluding = true;
    bool colluding = false;
    bool nearest = false;
};

/// Fully validated scenario. Immutable; obtain one through validate_config().
///
/// Invariants: K = round(beta * N) with beta stored as K / N, rho * sigma^2 = 1,
/// eta > 2, xi > 0, lambda_e >= 0.
class SystemConfig {
public:
    int n_antennas() const noexcept { return n_antennas_; }
    int n_users() const noexcept { return n_users_; }
    double network_load() const noexcept { return network_load_; }
    double snr_linear() const noexcept { return snr_linear_; }
    double snr_db() const noexcept;
    double noise_power() const noexcept { return 1.0 / snr_linear_; }
    double path_loss_exponent() const noexcept { return path_loss_exponent_; }
    double eavesdropper_density() const noexcept { return eavesdropper_density_; }
    double regularization() const noexcept { return regularization_; }
    CollusionMode collusion_mode() const noexcept { return collusion_mode_; }
    std::uint64_t master_seed() const noexcept { return master_seed_; }

    bool eta_is_four() const noexcept;
    ClosedFormSupport closed_forms() const noexcept;

    /// Exact inverse of validate_config(): validate_config(c.to_raw()) == c.
    RawConfig to_raw() const;

    SystemConfig with_regularization(double xi) const;
    SystemConfig with_density(double lambda_e) const;
    SystemConfig with_mode(CollusionMode mode) const;
    /// Resizes the array keeping the load beta fixed.
    SystemConfig with_antennas(int n) const;
    SystemConfig with_seed(std::uint64_t seed) const;

    bool operator==(const SystemConfig&) const = default;

private:
    friend SystemConfig validate_config(const RawConfig& raw);
    SystemConfig() = default;

    int n_antennas_ = 1;
    int n_users_ = 1;
    double network_load_ = 1.0;
    double snr_linear_ = 1.0;
    double path_loss_exponent_ = 4.0;
    double eavesdropper_density_ = 0.0;
    double regularization_ = 1.0;
    CollusionMode collusion_mode_ = CollusionMode::NonColluding;
    std::uint64_t master_seed_ = 0;
};

/// Builds a SystemConfig, throwing ConfigError on any violated invariant.
///
/// Defaults: eta = 4, lambda_e = 0, NonColluding, seed 0, and xi equal to
/// the large-system optimum for the confidential broadcast channel at (beta, rho).
/// When both n_users and network_load are set, n_users wins. snr_linear wins over snr_db.
SystemConfig validate_config(const RawConfig& raw);

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

/// Parses the flat `key = value` format (one entry per line, `#` comments).
RawConfig parse_config_text(std::string_view text);
RawConfig load_config_file(const std::filesystem::path& path);

/// Emits the same format with full double precision.
std::string serialize_config(const SystemConfig& cfg);

}  // namespace bcce

#endif
