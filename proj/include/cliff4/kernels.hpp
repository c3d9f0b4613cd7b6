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

// Hot loops, each in a serial reference form and an OpenMP form. The public
// module functions call the parallel form; tests and benchmarks compare both.
#pragma once

#include <array>
#include <vector>

#include "cliff4/common.hpp"

namespace cliff4::kernels {

/// Xi_a for every label, one O(d) sum per label.
std::vector<cplx> characteristic_serial(const StateVector &psi);
/// Same values via a Walsh-Hadamard transform per x-mask, parallel over masks.
std::vector<cplx> characteristic_omp(const StateVector &psi);

/// Histogram h[k] = #{F in Sp(2n) : dim ker(F - 1) = k}, n <= 3.
std::vector<int64_t> sp_fixed_dim_histogram_serial(int n);
std::vector<int64_t> sp_fixed_dim_histogram_omp(int n);

/// sum_{j,k} w_j w_k |<psi_j|psi_k>|^{2t}; empty weights mean uniform 1/K.
double frame_potential_serial(const std::vector<StateVector> &states, int t, const std::vector<double> &weights);
double frame_potential_omp(const std::vector<StateVector> &states, int t, const std::vector<double> &weights);

/// (1/K) sum_k |<ref|images_k>|^{2t}.
double overlap_power_mean_serial(const StateVector &ref, const std::vector<StateVector> &images, int t);
double overlap_power_mean_omp(const StateVector &ref, const std::vector<StateVector> &images, int t);

/// Per-sample (alpha_plus, epsilon) for Haar-random states of n qubits.
/// Samples are split into fixed shards seeded from (seed, shard), so the output
/// does not depend on the thread count.
struct HaarSample {
    double alpha_plus;
    double epsilon;
};
std::vector<HaarSample> haar_samples_serial(int n, int64_t samples, uint64_t seed);
std::vector<HaarSample> haar_samples_omp(int n, int64_t samples, uint64_t seed);

constexpr int64_t kShardSize = 4096;

/// Caps the worker count of the parallel kernels (0 restores the default).
void set_thread_limit(int threads);

}  // namespace cliff4::kernels
