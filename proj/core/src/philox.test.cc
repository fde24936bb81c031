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

#include "quantromon/philox.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

using namespace quantromon;

TEST(philox, known_answer_vectors) {
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    EXPECT_EQ(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(
        Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}),
        (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(
        Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}),
        (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(philox, open_unit_interval) {
    EXPECT_GT(Philox4x32::to_open_unit(0, 0), 0.0);
    EXPECT_LT(Philox4x32::to_open_unit(0xffffffff, 0xffffffff), 1.0);
    EXPECT_EQ(Philox4x32::to_open_unit(0, 0), 0x1.0p-53);
    EXPECT_EQ(Philox4x32::to_open_unit(0x80000000, 0), 0.5 + 0x1.0p-53);
}

TEST(philox, key_from_seed_uses_both_words) {
    EXPECT_EQ(Philox4x32::key_from_seed(0x0123456789abcdefULL), (Philox4x32::Key{0x89abcdef, 0x01234567}));
}

TEST(philox, streams_are_distinct) {
    std::set<double> seen;
    for (std::uint32_t stream = 0; stream < 2; stream++) {
        for (std::uint64_t k = 0; k < 500; k++) {
            for (double u : ShotUniforms::draw(1, stream, k).u) {
                EXPECT_TRUE(seen.insert(u).second);
            }
        }
    }
}

TEST(philox, uniform_moments) {
    double sum = 0.0;
    double sum_sq = 0.0;
    int n = 0;
    for (std::uint64_t k = 0; k < 50000; k++) {
        for (double u : ShotUniforms::draw(99, 0, k).u) {
            sum += u;
            sum_sq += u * u;
            n++;
        }
    }
    EXPECT_NEAR(sum / n, 0.5, 0.003);
    EXPECT_NEAR(sum_sq / n - 0.25, 1.0 / 12.0, 0.002);
}

TEST(philox, standard_normal_moments) {
    double sum = 0.0;
    double sum_sq = 0.0;
    int n = 100000;
    for (int k = 0; k < n; k++) {
        auto u = ShotUniforms::draw(4, 0, static_cast<std::uint64_t>(k)).u;
        double z = standard_normal(u[0], u[1]);
        sum += z;
        sum_sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.015);
    EXPECT_NEAR(sum_sq / n, 1.0, 0.02);
}
