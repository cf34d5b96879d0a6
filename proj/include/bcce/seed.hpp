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

#ifndef BCCE_SEED_HPP
#define BCCE_SEED_HPP

#include <cstdint>
#include <random>

namespace bcce {

enum class StreamLabel : std::uint64_t {
    Channel = 1,     ///< legitimate downlink matrix H
    Field = 2,       ///< eavesdropper count and positions
    EveChannel = 3,  ///< eavesdropper fading
};

/// Identifies one independent random substream. The derived stream is a pure function of
/// the fields below, so results never depend on thread count or evaluation order.
struct SeedPlan {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
    StreamLabel stream_label = StreamLabel::Channel;
    /// Secondary counter, e.g. the field draw within one channel trial.
    std::uint64_t draw_index = 0;

    SeedPlan relabel(StreamLabel label) const {
        SeedPlan p = *this;
        p.stream_label = label;
        return p;
    }

    bool operator==(const SeedPlan&) const = default;
};

using Engine = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t substream_key(const SeedPlan& plan) noexcept {
    std::uint64_t h = mix64(plan.master_seed ^ 0x6a09e667f3bcc908ULL);
    h = mix64(h ^ plan.trial_index);
    h = mix64(h ^ static_cast<std::uint64_t>(plan.stream_label));
    h = mix64(h ^ plan.draw_index);
    return h;
}

inline Engine make_engine(const SeedPlan& plan) { return Engine(substream_key(plan)); }

}  // namespace bcce

#endif
