// Copyright 2026 The qsse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace qsse {

// xoshiro256++ seeded through SplitMix64, with a documented stream-splitting
// rule so that independent trajectories draw from independent streams:
//
//   child(seed, i) seeds from mix64(seed + (i + 1) * 0x9E3779B97F4A7C15),
//
// where mix64 is the SplitMix64 finalizer. Uniforms are derived from the top
// 53 bits of each 64-bit output, so the uniform stream is bit-exact across
// platforms; normal variates go through Box-Muller on top of them (one normal
// consumes exactly two 64-bit outputs).
// Derived seed of child stream `index`; exposed so callers can record which
// stream produced a trajectory.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  static RngStream child(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double next_uniform();

  // Standard normal via Box-Muller; the log argument lies in (0, 1].
  double next_normal();

 private:
  std::uint64_t state_[4];
};

}  // namespace qsse
