// Copyright 2026 The entstruct Authors
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

#ifndef ENTSTRUCT_RNG_H
#define ENTSTRUCT_RNG_H

#include <cstdint>
#include <limits>

namespace entstruct {

inline uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream. Output k is a fixed function of (seed, k), so streams are
/// reproducible on every platform and `split` derives independent child streams by index.
///
/// Bounded draws use rejection sampling rather than std::uniform_int_distribution, whose output
/// is implementation-defined.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed = 0) : state_(seed) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }

    result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) {
        uint64_t limit = max() - max() % bound;
        uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() {
        return (*this)() >> 63;
    }

    /// Child stream number `index`, independent of how much this stream has been consumed.
    Rng split(uint64_t index) const {
        return Rng(splitmix64_mix(seed_mix(index)));
    }

    static Rng derive(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
        uint64_t h = splitmix64_mix(seed ^ 0x243F6A8885A308D3ULL);
        h = splitmix64_mix(h ^ splitmix64_mix(a + 1));
        h = splitmix64_mix(h ^ splitmix64_mix(b + 0x13198A2E03707344ULL));
        h = splitmix64_mix(h ^ splitmix64_mix(c + 0xA4093822299F31D0ULL));
        return Rng(h);
    }

   private:
    uint64_t seed_mix(uint64_t index) const {
        return state_ ^ splitmix64_mix(index + 0x9E3779B97F4A7C15ULL);
    }

    uint64_t state_;
};

}  // namespace entstruct

#endif
