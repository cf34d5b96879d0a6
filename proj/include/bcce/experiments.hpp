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

#ifndef BCCE_EXPERIMENTS_HPP
#define BCCE_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcce/config.hpp"

namespace bcce {

enum class FigureId { OutageVsN, SumRateVsSnr, RateVsN, BccVsBcce, XiVsDensity, XiGapVsN, Custom };

/// "fig2" ... "fig7", "custom".
std::string_view to_string(FigureId id);
FigureId parse_figure_id(std::string_view text);

struct ExperimentSpec {
    FigureId figure_id = FigureId::Custom;
    std::vector<SystemConfig> sweep;
    int n_trials = 2000;
    int n_field_draws_per_channel = 16;
    std::string output_path;
    int workers = 0;
    /// Modes evaluated per sweep point; empty means NonColluding and Colluding.
    std::vector<CollusionMode> modes;
};

/// A table cell: a number, or absent (written as an empty field).
using Cell = std::optional<double>;

struct ExperimentRow {
    SystemConfig config;
    CollusionMode mode = CollusionMode::NonColluding;
    /// Statistic and analytic columns, in output order. Simulated means are followed by a
    /// "_se" column.
    std::vector<std::pair<std::string, Cell>> values;
    double trials = 0.0;
    /// "ok", or why the precision target was missed (kept, not dropped).
    std::string flag = "ok";

    Cell get(std::string_view name) const;
};

using ExperimentRows = std::vector<ExperimentRow>;

/// Simulated vs large-system outage per sweep point and mode.
ExperimentRows run_outage_sweep(const ExperimentSpec& spec);
/// SumRateVsSnr, RateVsN and BccVsBcce.
ExperimentRows run_rate_sweeps(const ExperimentSpec& spec);
/// XiVsDensity and XiGapVsN.
ExperimentRows run_xi_experiments(const ExperimentSpec& spec);
/// Dispatch on spec.figure_id; Custom runs the rate sweep columns.
ExperimentRows run_experiment(const ExperimentSpec& spec);

struct FigureOptions {
    std::uint64_t seed = 0;
    std::optional<int> trials;
    std::optional<int> fields_per_trial;
    int workers = 0;
    std::string output_path;
};

/// Desk-scale reproduction grid for one figure.
ExperimentSpec figure_spec(FigureId id, const FigureOptions& opts);

}  // namespace bcce

#endif
