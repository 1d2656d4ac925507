// Copyright 2026 The WS-VQE Authors
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

#ifndef WSVQE_RNG_HPP
#define WSVQE_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wsvqe {

/// SplitMix64 fold over a list of words. Used to derive independent,
/// reproducible substreams from (master seed, instance, variant, ...).
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words);

/// Seeded random stream. Every distribution is implemented here on top of
/// the raw 64-bit engine output so sequences do not depend on the standard
/// library's distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal deviate (Box-Muller, one value per call).
    double normal();

    bool bit() { return (engine_() >> 63) != 0; }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// A new stream seeded from this stream's next output and `index`.
    Rng split(std::uint64_t index) { return Rng(mix_seed({engine_(), index})); }

   private:
    std::mt19937_64 engine_;
};

}  // namespace wsvqe

#endif  // WSVQE_RNG_HPP
