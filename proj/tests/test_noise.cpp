// Copyright 2026 The qsearch Authors
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

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qsearch;

namespace {

double success(Variant v, int n, uint64_t marked, double p1, double p2, uint64_t shots, int seeds) {
    Circuit c = set_search(n, {marked}, v).circuit;
    return mean_success(c, p1, p2, shots, seeds, 1, [marked](uint64_t o) { return o == marked; });
}

}  // namespace

TEST(run_noisy, zero_noise_matches_exact_distribution) {
    SearchResult r = set_search(3, {5}, Variant::Standard);
    const uint64_t shots = 8192;
    ShotResult s = run_noisy(r.circuit, {0, 0, 17}, shots);
    uint64_t total = 0;
    for (const auto &[outcome, n] : s.counts) {
        total += n;
    }
    EXPECT_EQ(total, shots);
    for (uint64_t i = 0; i < 8; i++) {
        double p = r.distribution[i];
        double sigma = std::sqrt(p * (1 - p) / shots);
        EXPECT_LE(std::abs(s.frequency(i) - p), 3 * sigma + 1e-12) << i;
    }
}

TEST(run_noisy, zero_noise_two_qubit_search_always_hits) {
    ShotResult s = run_noisy(set_search(2, {2}, Variant::ModifiedRX).circuit, {0, 0, 3}, 8192);
    EXPECT_EQ(s.count(2), 8192u);
    EXPECT_EQ(s.counts.size(), 1u);
}

TEST(run_noisy, light_noise_favors_modified) {
    Circuit standard = set_search(3, {5}, Variant::Standard).circuit;
    Circuit modified = set_search(3, {5}, Variant::ModifiedRX).circuit;
    uint64_t hits_std = 0, hits_mod = 0;
    for (uint64_t seed = 0; seed < 3; seed++) {
        hits_std += run_noisy(standard, {0.001, 0.01, seed}, 8192).count(5);
        hits_mod += run_noisy(modified, {0.001, 0.01, seed}, 8192).count(5);
    }
    EXPECT_GT(hits_mod, hits_std);
}

TEST(run_noisy, reproducible_and_thread_independent) {
    Circuit c = array_search({2, 2, {1, 1}}, 2, Variant::Standard).circuit;
    NoiseModel noise{0.02, 0.05, 99};
    ShotResult a = run_noisy(c, noise, 3000, zero_state(4), 1);
    ShotResult b = run_noisy(c, noise, 3000, zero_state(4), 1);
    ShotResult c4 = run_noisy(c, noise, 3000, zero_state(4), 4);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.counts, c4.counts);
    ShotResult other = run_noisy(c, {0.02, 0.05, 100}, 3000);
    EXPECT_NE(a.counts, other.counts);
}

TEST(run_noisy, rejects_bad_inputs) {
    Circuit c = build_preparation(2, Variant::Standard);
    EXPECT_THROW(run_noisy(c, {-0.1, 0, 0}, 10), std::invalid_argument);
    EXPECT_THROW(run_noisy(c, {0, 1.5, 0}, 10), std::invalid_argument);
    EXPECT_THROW(run_noisy(c, {0, 0, 0}, 0), std::invalid_argument);
    EXPECT_THROW(run_noisy(c, {0, 0, 0}, 10, zero_state(3)), std::invalid_argument);
}

TEST(run_noisy, full_depolarization_scrambles) {
    // p = 1 on every gate: the marked outcome is no longer dominant.
    ShotResult s = run_noisy(set_search(3, {5}, Variant::Standard).circuit, {1, 1, 5}, 4000);
    EXPECT_LT(s.frequency(5), 0.5);
}

TEST(noise, success_non_increasing_in_p1) {
    for (Variant v : {Variant::Standard, Variant::ModifiedRX}) {
        double prev = 2.0;
        for (double p1 : {0.0, 0.005, 0.01, 0.02}) {
            double s = success(v, 3, 5, p1, 5 * p1, 2048, 10);
            EXPECT_LE(s, prev + 1e-12) << variant_name(v) << " p1=" << p1;
            prev = s;
        }
    }
}

TEST(noise, modified_retains_more_success) {
    for (auto [n, marked] : {std::pair{2, uint64_t{2}}, std::pair{3, uint64_t{5}}}) {
        for (double p1 : {0.0, 0.005, 0.01, 0.02}) {
            double s = success(Variant::Standard, n, marked, p1, 5 * p1, 8192, 10);
            double m = success(Variant::ModifiedRX, n, marked, p1, 5 * p1, 8192, 10);
            EXPECT_GE(m, s - 0.01) << "n=" << n << " p1=" << p1;
            if (p1 == 0.01) {
                EXPECT_GE(m - s, 0.02) << "n=" << n;
            }
        }
    }
}
