// Copyright 2026 The ggpne Authors.
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

// Randomness is drawn from std::mt19937_64, whose output sequence is fixed
// by the C++ standard. The standard distributions are not, so the mappings
// to integers and reals below are spelled out to keep trajectories identical
// across toolchains.

#ifndef GGPNE_RANDOM_HPP_
#define GGPNE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace ggpne {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection from the top of the range.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

/// Uniform real in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace ggpne

#endif  // GGPNE_RANDOM_HPP_
