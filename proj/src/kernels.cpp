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


#include "cliff4/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <omp.h>

#include "cliff4/f2lin.hpp"
#include "cliff4/pauli.hpp"

namespace cliff4::kernels {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Xi for every label with x-mask x: a Walsh-Hadamard transform of
// conj(psi[k ^ x]) psi[k] over k.
void characteristic_row(const StateVector &psi, int n, uint64_t x, std::vector<cplx> &buf, std::vector<cplx> &out) {
    int64_t d = psi.size();
    for (int64_t k = 0; k < d; k++) {
        buf[k] = std::conj(psi[k ^ int64_t(x)]) * psi[k];
    }
    for (int64_t h = 1; h < d; h <<= 1) {
        for (int64_t i = 0; i < d; i += 2 * h) {
            for (int64_t j = i; j < i + h; j++) {
                cplx a = buf[j];
                cplx b = buf[j + h];
                buf[j] = a + b;
                buf[j + h] = a - b;
            }
        }
    }
    for (int64_t z = 0; z < d; z++) {
        out[label_from_masks(x, uint64_t(z), n)] = kIPow[std::popcount(x & uint64_t(z)) & 3] * buf[z];
    }
}

double ell4_serial_wht(const StateVector &psi, int n) {
    int64_t d = psi.size();
    std::vector<cplx> buf(d);
    std::vector<cplx> out(d * d);
    for (int64_t x = 0; x < d; x++) {
        characteristic_row(psi, n, uint64_t(x), buf, out);
    }
    double s = 0;
    for (const cplx &v : out) {
        double r = v.real() * v.real();
        s += r * r;
    }
    return s;
}

StateVector gaussian_state(int64_t d, Rng &rng) {
    std::normal_distribution<double> g;
    StateVector v(d);
    for (int64_t k = 0; k < d; k++) {
        double re = g(rng);
        double im = g(rng);
        v[k] = cplx(re, im);
    }
    return v / v.norm();
}

HaarSample to_sample(double ell4, double d) {
    double alpha = ell4 / (d * d);
    return {alpha, d * (d + 3) / 4 * alpha - 1};
}

double overlap_power(const StateVector &a, const StateVector &b, int t) {
    double p = std::norm(a.dot(b));
    double r = 1;
    for (int i = 0; i < t; i++) {
        r *= p;
    }
    return r;
}

}  // namespace

std::vector<cplx> characteristic_serial(const StateVector &psi) {
    int n = qubits_of(psi);
    int64_t d = psi.size();
    std::vector<cplx> out(d * d);
    for (uint64_t a = 0; a < uint64_t(d * d); a++) {
        PauliMasks m = pauli_masks(a, n);
        cplx s = 0;
        for (int64_t k = 0; k < d; k++) {
            cplx v = std::conj(psi[k ^ int64_t(m.x)]) * psi[k];
            s += (std::popcount(m.z & uint64_t(k)) & 1) ? -v : v;
        }
        out[a] = kIPow[m.y & 3] * s;
    }
    return out;
}

std::vector<cplx> characteristic_omp(const StateVector &psi) {
    int n = qubits_of(psi);
    int64_t d = psi.size();
    std::vector<cplx> out(d * d);
#pragma omp parallel
    {
        std::vector<cplx> buf(d);
#pragma omp for schedule(static)
        for (int64_t x = 0; x < d; x++) {
            characteristic_row(psi, n, uint64_t(x), buf, out);
        }
    }
    return out;
}

std::vector<int64_t> sp_fixed_dim_histogram_serial(int n) {
    SpEnumerator en(n);
    std::vector<int64_t> h(2 * n + 1, 0);
    en.for_each([&](const F2Matrix &F) { h[fixed_space_dim(F)]++; });
    return h;
}

std::vector<int64_t> sp_fixed_dim_histogram_omp(int n) {
    SpEnumerator en(n);
    size_t branches = en.branch_count();
    std::vector<std::vector<int64_t>> parts(branches, std::vector<int64_t>(2 * n + 1, 0));
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t b = 0; b < int64_t(branches); b++) {
        auto &h = parts[b];
        en.for_each_in_branch(size_t(b), [&](const F2Matrix &F) { h[fixed_space_dim(F)]++; });
    }
    std::vector<int64_t> h(2 * n + 1, 0);
    for (const auto &p : parts) {
        for (int k = 0; k <= 2 * n; k++) {
            h[k] += p[k];
        }
    }
    return h;
}

double frame_potential_serial(const std::vector<StateVector> &states, int t, const std::vector<double> &weights) {
    size_t K = states.size();
    double uniform = 1.0 / double(K);
    double s = 0;
    for (size_t j = 0; j < K; j++) {
        double wj = weights.empty() ? uniform : weights[j];
        for (size_t k = 0; k < K; k++) {
            double wk = weights.empty() ? uniform : weights[k];
            s += wj * wk * overlap_power(states[j], states[k], t);
        }
    }
    return s;
}

double frame_potential_omp(const std::vector<StateVector> &states, int t, const std::vector<double> &weights) {
    int64_t K = int64_t(states.size());
    double uniform = 1.0 / double(K);
    std::vector<double> rows(K, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t j = 0; j < K; j++) {
        double wj = weights.empty() ? uniform : weights[j];
        double r = wj * wj * overlap_power(states[j], states[j], t);
        for (int64_t k = j + 1; k < K; k++) {
            double wk = weights.empty() ? uniform : weights[k];
            r += 2 * wj * wk * overlap_power(states[j], states[k], t);
        }
        rows[j] = r;
    }
    double s = 0;
    for (double r : rows) {
        s += r;
    }
    return s;
}

double overlap_power_mean_serial(const StateVector &ref, const std::vector<StateVector> &images, int t) {
    double s = 0;
    for (const auto &v : images) {
        s += overlap_power(ref, v, t);
    }
    return s / double(images.size());
}

double overlap_power_mean_omp(const StateVector &ref, const std::vector<StateVector> &images, int t) {
    int64_t K = int64_t(images.size());
    constexpr int64_t kBlock = 1024;
    int64_t blocks = (K + kBlock - 1) / kBlock;
    std::vector<double> part(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (int64_t b = 0; b < blocks; b++) {
        double s = 0;
        for (int64_t k = b * kBlock; k < std::min(K, (b + 1) * kBlock); k++) {
            s += overlap_power(ref, images[k], t);
        }
        part[b] = s;
    }
    double s = 0;
    for (double p : part) {
        s += p;
    }
    return s / double(K);
}

namespace {

Rng shard_rng(uint64_t seed, int64_t shard) {
    std::seed_seq seq{seed, uint64_t(shard), uint64_t(0x6861617221)};
    return Rng(seq);
}

}  // namespace

std::vector<HaarSample> haar_samples_serial(int n, int64_t samples, uint64_t seed) {
    int64_t d = int64_t(1) << n;
    std::vector<HaarSample> out(samples);
    int64_t shards = (samples + kShardSize - 1) / kShardSize;
    for (int64_t s = 0; s < shards; s++) {
        Rng rng = shard_rng(seed, s);
        for (int64_t i = s * kShardSize; i < std::min(samples, (s + 1) * kShardSize); i++) {
            StateVector psi = gaussian_state(d, rng);
            double ell4 = 0;
            for (const cplx &v : characteristic_serial(psi)) {
                double r = v.real() * v.real();
                ell4 += r * r;
            }
            out[i] = to_sample(ell4, double(d));
        }
    }
    return out;
}

std::vector<HaarSample> haar_samples_omp(int n, int64_t samples, uint64_t seed) {
    int64_t d = int64_t(1) << n;
    std::vector<HaarSample> out(samples);
    int64_t shards = (samples + kShardSize - 1) / kShardSize;
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t s = 0; s < shards; s++) {
        Rng rng = shard_rng(seed, s);
        for (int64_t i = s * kShardSize; i < std::min(samples, (s + 1) * kShardSize); i++) {
            StateVector psi = gaussian_state(d, rng);
            out[i] = to_sample(ell4_serial_wht(psi, n), double(d));
        }
    }
    return out;
}

void set_thread_limit(int threads) {
    omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
}

}  // namespace cliff4::kernels
