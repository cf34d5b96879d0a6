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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bcce/experiments.hpp"
#include "bcce/output.hpp"
#include "helpers.hpp"

using namespace bcce;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentSpec tiny_spec(FigureId id) {
    FigureOptions o;
    o.seed = 5;
    o.trials = 6;
    o.fields_per_trial = 2;
    ExperimentSpec spec = figure_spec(id, o);
    spec.sweep.erase(spec.sweep.begin() + 2, spec.sweep.end());
    return spec;
}

}  // namespace

TEST_CASE("git blob hash") {
    CHECK(git_blob_sha1("") == "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
    CHECK(git_blob_sha1("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST_CASE("figure ids") {
    for (FigureId id : {FigureId::OutageVsN, FigureId::SumRateVsSnr, FigureId::RateVsN, FigureId::BccVsBcce,
                        FigureId::XiVsDensity, FigureId::XiGapVsN, FigureId::Custom})
        CHECK(parse_figure_id(to_string(id)) == id);
    CHECK(to_string(FigureId::OutageVsN) == "fig2");
    CHECK_THROWS(parse_figure_id("fig9"));
}

TEST_CASE("csv layout") {
    ExperimentRow a{make_cfg(10, 1.0, 10.0, 0.1)};
    a.values = {{"x", 0.1}, {"y", std::nullopt}};
    a.trials = 7;
    ExperimentRow b = a;
    b.values = {{"x", 1.0 / 3.0}, {"z", 2.0}};
    b.flag = "low_precision";
    const std::string csv = rows_to_csv({a, b});
    CHECK(csv.find('\r') == std::string::npos);
    std::istringstream in(csv);
    std::string header, r1, r2;
    std::getline(in, header);
    std::getline(in, r1);
    std::getline(in, r2);
    CHECK(header.rfind("n_antennas,n_users,network_load,snr_db,", 0) == 0);
    CHECK(header.find(",x,y,z,trials,flag") != std::string::npos);
    CHECK(r1.find(",0.10000000000000001,,,7,ok") != std::string::npos);
    CHECK(r2.find(",0.33333333333333331,,2,7,low_precision") != std::string::npos);
    CHECK(a.get("x") == 0.1);
    CHECK_FALSE(a.get("y").has_value());
    CHECK_FALSE(a.get("missing").has_value());
}

TEST_CASE("experiments are deterministic and write atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "bcce_test_output";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ExperimentSpec spec = tiny_spec(FigureId::OutageVsN);
    spec.output_path = (dir / "fig2.csv").string();
    const ExperimentRows rows = run_experiment(spec);
    CHECK(rows.size() == 2 * (spec.modes.empty() ? 2 : spec.modes.size()));
    const WrittenOutput w1 = write_outputs(spec, rows, 1.0);
    const std::string first = slurp(w1.csv);
    CHECK(w1.csv_sha1 == git_blob_sha1(first));
    CHECK_FALSE(std::filesystem::exists(dir / "fig2.csv.partial"));

    spec.workers = 2;
    const WrittenOutput w2 = write_outputs(spec, run_experiment(spec), 2.0);
    CHECK(slurp(w2.csv) == first);
    CHECK(w2.csv_sha1 == w1.csv_sha1);

    const auto manifest = nlohmann::json::parse(slurp(w2.manifest));
    CHECK(manifest["figure_id"] == "fig2");
    CHECK(manifest["csv_git_sha1"] == w1.csv_sha1);
    CHECK(manifest["seed"] == 5);
    CHECK(w2.manifest == manifest_path_for(w2.csv));
    std::filesystem::remove_all(dir);
}

TEST_CASE("zero density rows show no outage") {
    ExperimentSpec spec = tiny_spec(FigureId::OutageVsN);
    for (SystemConfig& c : spec.sweep) c = c.with_density(0.0);
    for (const ExperimentRow& r : run_experiment(spec)) {
        CHECK(r.get("sim_conditional_outage") == 0.0);
        CHECK(r.get("analytic_outage") == 0.0);
    }
}

TEST_CASE("unwritable destination") {
    CHECK_THROWS_AS(AtomicFile("/nonexistent/dir/out.csv"), OutputError);
}

TEST_CASE("each figure grid runs at tiny scale") {
    for (FigureId id : {FigureId::SumRateVsSnr, FigureId::RateVsN, FigureId::BccVsBcce, FigureId::XiVsDensity,
                        FigureId::XiGapVsN}) {
        ExperimentSpec spec = tiny_spec(id);
        const ExperimentRows rows = run_experiment(spec);
        CHECK(!rows.empty());
        for (const ExperimentRow& r : rows) CHECK(r.trials > 0);
        CHECK(rows_to_csv(rows) == rows_to_csv(run_experiment(spec)));
    }
}
