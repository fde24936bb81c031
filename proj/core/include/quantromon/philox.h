// Copyright 2026 The Quantromon Toolkit Authors
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
#ifndef QUANTROMON_PHILOX_H
#define QUANTROMON_PHILOX_H

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace quantromon {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A block of
/// four 32-bit words is a pure function of (counter, key), so any shot can be
/// generated independently of every other one.
class Philox4x32 {
   public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; round++) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

    static Key key_from_seed(std::uint64_t seed) {
        return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    }

    /// Uniform double in the open interval (0, 1) from 52 random bits; the
    /// half-step offset keeps both ends exactly representable.
    static double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
        std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 12;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-52;
    }

   private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

    static Counter single_round(const Counter &c, const Key &k) {
        std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
        return {
            static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
            static_cast<std::uint32_t>(p0),
        };
    }
};

/// Four uniforms in (0, 1) for the stream (seed, stream, index).
struct ShotUniforms {
    std::array<double, 4> u;

    static ShotUniforms draw(std::uint64_t seed, std::uint32_t stream, std::uint64_t index) {
        auto key = Philox4x32::key_from_seed(seed);
        auto lo = static_cast<std::uint32_t>(index);
        auto hi = static_cast<std::uint32_t>(index >> 32);
        auto a = Philox4x32::block({lo, hi, stream, 0}, key);
        auto b = Philox4x32::block({lo, hi, stream, 1}, key);
        return {{
            Philox4x32::to_open_unit(a[0], a[1]),
            Philox4x32::to_open_unit(a[2], a[3]),
            Philox4x32::to_open_unit(b[0], b[1]),
            Philox4x32::to_open_unit(b[2], b[3]),
        }};
    }
};

/// Box-Muller; u1, u2 in (0, 1).
inline double standard_normal(double u1, double u2) {
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace quantromon

#endif
