// Copyright 2026 The cliff4 Authors
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


#include <gtest/gtest.h>

#include "cliff4/f2lin.hpp"
#include "cliff4/kernels.hpp"
#include "test_util.hpp"

namespace cliff4 {
namespace {

using testing::random_state;

TEST(Kernels, CharacteristicAgree) {
    Rng rng(1);
    for (int n = 1; n <= 7; n++) {
        StateVector psi = random_state(int64_t(1) << n, rng);
        auto a = kernels::characteristic_serial(psi);
        auto b = kernels::characteristic_omp(psi);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); i++) {
            ASSERT_LT(std::abs(a[i] - b[i]), 1e-12) << "n=" << n << " a=" << i;
        }
    }
}

TEST(Kernels, HistogramAgree) {
    for (int n = 1; n <= 3; n++) {
        auto a = kernels::sp_fixed_dim_histogram_serial(n);
        EXPECT_EQ(a, kernels::sp_fixed_dim_histogram_omp(n));
        int64_t total = 0;
        for (auto x : a) {
            total += x;
        }
        EXPECT_EQ(BigInt(total), sp_order(n));
    }
    EXPECT_EQ(kernels::sp_fixed_dim_histogram_serial(1), (std::vector<int64_t>{2, 3, 1}));
}

TEST(Kernels, FramePotentialAgree) {
    Rng rng(2);
    std::vector<StateVector> s;
    std::vector<double> w;
    for (int i = 0; i < 200; i++) {
        s.push_back(random_state(8, rng));
        w.push_back(1.0 / 200);
    }
    for (int t = 1; t <= 5; t++) {
        EXPECT_NEAR(kernels::frame_potential_serial(s, t, {}), kernels::frame_potential_omp(s, t, {}), 1e-13);
        EXPECT_NEAR(kernels::frame_potential_serial(s, t, w), kernels::frame_potential_omp(s, t, {}), 1e-13);
        EXPECT_NEAR(kernels::overlap_power_mean_serial(s[0], s, t), kernels::overlap_power_mean_omp(s[0], s, t),
                    1e-13);
    }
}

TEST(Kernels, HaarSamplesAgreeAcrossThreadCounts) {
    auto a = kernels::haar_samples_serial(3, 10000, 5);
    auto b = kernels::haar_samples_omp(3, 10000, 5);
    kernels::set_thread_limit(1);
    auto c = kernels::haar_samples_omp(3, 10000, 5);
    kernels::set_thread_limit(0);
    ASSERT_EQ(a.size(), 10000u);
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_NEAR(a[i].alpha_plus, b[i].alpha_plus, 1e-13);
        ASSERT_NEAR(a[i].epsilon, b[i].epsilon, 1e-11);
        ASSERT_EQ(b[i].alpha_plus, c[i].alpha_plus);
    }
}

}  // namespace
}  // namespace cliff4
