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

#ifndef BCCE_OUTPUT_HPP
#define BCCE_OUTPUT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bcce/experiments.hpp"

namespace bcce {

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Header row from the config echo, then every value column in first-seen order,
/// then trials and flag. LF line endings, 17 significant digits, empty cells for absent values.
std::string rows_to_csv(const ExperimentRows& rows);

/// SHA-1 of "blob <size>\0<content>", as git computes object ids.
std::string git_blob_sha1(std::string_view content);

/// Reserves `path` by creating `path.partial`; commit() writes the content there and renames it
/// into place. Destroying an uncommitted file leaves the .partial behind.
class AtomicFile {
public:
    explicit AtomicFile(std::filesystem::path path);
    void commit(std::string_view content);
    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path partial_path() const;

private:
    std::filesystem::path path_;
    bool committed_ = false;
};

struct WrittenOutput {
    std::filesystem::path csv;
    std::filesystem::path manifest;
    std::string csv_sha1;
};

/// Manifest path for a CSV path: same stem, ".json".
std::filesystem::path manifest_path_for(const std::filesystem::path& csv);

std::string manifest_json(const ExperimentSpec& spec, const std::filesystem::path& csv, std::string_view csv_sha1,
                          double wall_seconds, std::size_t n_rows);

/// Writes CSV and manifest through AtomicFile. Throws OutputError when a path is unwritable.
WrittenOutput write_outputs(const ExperimentSpec& spec, const ExperimentRows& rows, double wall_seconds);

}  // namespace bcce

#endif
