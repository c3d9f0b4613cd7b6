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

#include "cliff4/designs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cliff4/clifford.hpp"
#include "cliff4/kernels.hpp"
#include "cliff4/pauli.hpp"

namespace cliff4 {

double frame_potential(const std::vector<StateVector> &states, int t, const std::vector<double> &weights) {
    if (states.empty()) {
        throw std::invalid_argument("frame_potential: empty state list");
    }
    if (t < 1) {
        throw std::invalid_argument("frame_potential: t >= 1");
    }
    if (!weights.empty()) {
        if (weights.size() != states.size()) {
            throw std::invalid_argument("frame_potential: one weight per state required");
        }
        double sum = 0;
        for (double w : weights) {
            if (w < 0) {
                throw std::invalid_argument("frame_potential: negative weight");
            }
            sum += w;
        }
        if (std::abs(sum - 1) > 1e-10) {
            throw std::invalid_argument("frame_potential: weights do not sum to 1");
        }
    }
    double phi = kernels::frame_potential_omp(states, t, weights);
    double floor = 1.0 / sym_dim(states[0].size(), t).convert_to<double>();
    if (phi < floor - 1e-9) {
        throw InternalError("frame_potential: value below 1/D_[t]");
    }
    return phi;
}

double phi4_from_epsilon(double eps, int64_t d) {
    double D4 = sym_dim(d, 4).convert_to<double>();
    return (1.0 + 4.0 * eps * eps / double((d - 1) * (d + 4))) / D4;
}

DesignReport design_report(const StateVector &psi, int n) {
    if (psi.size() != (int64_t(1) << n)) {
        throw DimensionError("design_report: state dimension is not 2^n");
    }
    require_normalized(psi);
    double d = double(psi.size());
    DesignReport r;
    r.n = n;
    r.ell4 = ell4_norm4(psi);
    r.alpha_plus = r.ell4 / (d * d);
    double norm8 = std::pow(psi.squaredNorm(), 4);
    r.epsilon = d * (d + 3) / 4 * r.alpha_plus - norm8;
    r.phi4 = phi4_from_epsilon(r.epsilon, psi.size());
    r.op_norm_dev = std::abs(r.epsilon);
    r.trace_norm_dev = (d + 1) * (d + 2) / 3 * std::abs(r.epsilon);
    const double tol = 1e-9;
    r.bounds_ok.ell4 = r.ell4 >= 2 * d / (d + 1) - tol && r.ell4 <= d + tol;
    r.bounds_ok.alpha_plus = r.alpha_plus >= 2 / (d * (d + 1)) - tol && r.alpha_plus <= 1 / d + tol;
    r.bounds_ok.epsilon = r.epsilon >= -(d - 1) / (2 * (d + 1)) - tol && r.epsilon <= (d - 1) / 4 + tol;
    return r;
}

double deviation_epsilon(const StateVector &psi) {
    return design_report(psi, qubits_of(psi)).epsilon;
}

StateVector bloch_state(double x, double y, double z) {
    if (std::abs(x * x + y * y + z * z - 1) > 1e-10) {
        throw std::invalid_argument("bloch_state: Bloch vector is not a unit vector");
    }
    StateVector psi(2);
    if (z > -1 + 1e-12) {
        double s = std::sqrt(2 * (1 + z));
        psi << cplx(1 + z, 0) / s, cplx(x, y) / s;
    } else {
        psi << 0, 1;
    }
    return psi.normalized();
}

std::array<double, 3> bloch_vector(const StateVector &psi) {
    if (psi.size() != 2) {
        throw DimensionError("bloch_vector: qubit state required");
    }
    cplx c = std::conj(psi[0]) * psi[1];
    return {2 * c.real(), 2 * c.imag(), std::norm(psi[0]) - std::norm(psi[1])};
}

double qubit_phi4(double x, double y, double z) {
    if (std::abs(x * x + y * y + z * z - 1) > 1e-10) {
        throw std::invalid_argument("qubit_phi4: Bloch vector is not a unit vector");
    }
    double s = std::pow(x, 4) + std::pow(y, 4) + std::pow(z, 4);
    return (21 - 6 * s + 5 * s * s) / 96;
}

std::array<double, 3> qubit_six_design_roots() {
    double theta = std::atan(3 * std::sqrt(10.0) / 20);
    std::array<double, 3> u{};
    for (int j = 1; j <= 3; j++) {
        u[j - 1] = (1 + 2 * std::sqrt(2.0 / 5) * std::cos((theta + 2 * j * std::numbers::pi) / 3)) / 3;
    }
    for (double v : u) {
        double res = 1 - 21 * v + 105 * v * v - 105 * v * v * v;
        if (std::abs(res) > 1e-12) {
            throw InternalError("qubit_six_design_roots: cubic residual too large");
        }
    }
    return u;
}

OrbitPotential orbit_frame_potential_exact(const StateVector &psi, int t, int n) {
    if (n > 2) {
        throw CapacityError("orbit_frame_potential: exact mode needs n <= 2; use Monte-Carlo mode");
    }
    require_normalized(psi);
    OrbitPotential r;
    auto images = clifford_images(psi, n);
    r.value = kernels::overlap_power_mean_omp(psi, images, t);
    r.samples = (int64_t)images.size();
    r.exact = true;
    return r;
}

OrbitPotential orbit_frame_potential_mc(const StateVector &psi, int t, int n, int64_t samples, uint64_t seed) {
    if (n < 1 || n > 5) {
        throw CapacityError("orbit_frame_potential: Monte-Carlo mode needs n <= 5");
    }
    if (psi.size() != (int64_t(1) << n)) {
        throw DimensionError("orbit_frame_potential: state dimension is not 2^n");
    }
    if (samples < 2) {
        throw std::invalid_argument("orbit_frame_potential: at least two samples");
    }
    require_normalized(psi);
    int64_t shards = (samples + kernels::kShardSize - 1) / kernels::kShardSize;
    std::vector<double> sum(shards, 0.0);
    std::vector<double> sum2(shards, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t s = 0; s < shards; s++) {
        std::seed_seq seq{seed, uint64_t(s), uint64_t(0x6f72626974)};
        Rng rng(seq);
        int64_t begin = s * kernels::kShardSize;
        int64_t end = std::min(samples, begin + kernels::kShardSize);
        for (int64_t i = begin; i < end; i++) {
            CliffordElement u = random_clifford(n, rng);
            double ov = std::norm(psi.dot(u.apply(psi)));
            double v = std::pow(ov, t);
            sum[s] += v;
            sum2[s] += v * v;
        }
    }
    double s1 = 0;
    double s2 = 0;
    for (int64_t s = 0; s < shards; s++) {
        s1 += sum[s];
        s2 += sum2[s];
    }
    OrbitPotential r;
    r.samples = samples;
    r.value = s1 / samples;
    double var = std::max(0.0, (s2 / samples - r.value * r.value) * samples / (samples - 1));
    r.stderr_ = std::sqrt(var / samples);
    return r;
}

BigInt minimal_design_size(int64_t d, int t) {
    if (t < 1) {
        throw std::invalid_argument("minimal_design_size: t >= 1");
    }
    return sym_dim(d, (t + 1) / 2) * sym_dim(d, t / 2);
}

double product_state_bound_check(const std::array<StateVector, 4> &states, int n) {
    std::vector<CharacteristicFunction> xi;
    for (const auto &s : states) {
        if (s.size() != (int64_t(1) << n)) {
            throw DimensionError("product_state_bound_check: state dimension is not 2^n");
        }
        xi.push_back(characteristic_function(s));
    }
    double d = double(int64_t(1) << n);
    double acc = 0;
    for (size_t a = 0; a < xi[0].values.size(); a++) {
        acc += xi[0][a] * xi[1][a] * xi[2][a] * xi[3][a];
    }
    acc /= d * d;
    if (acc < -1e-10 || acc > 1 / d + 1e-10) {
        throw InternalError("product_state_bound_check: value outside [0, 1/d]");
    }
    return acc;
}

bool tensor_fiducial_admissible(const std::vector<int> &parts) {
    if (parts.empty()) {
        return false;
    }
    std::vector<int> p = parts;
    std::sort(p.rbegin(), p.rend());
    if (p.back() < 1) {
        return false;
    }
    switch (p.size()) {
        case 1:
        case 2:
            return true;
        case 3:
            return (p[1] == 1 && p[2] == 1) || p == std::vector<int>{3, 2, 1} || p == std::vector<int>{2, 2, 1};
        case 4:
            return p == std::vector<int>{1, 1, 1, 1};
        default:
            return false;
    }
}

}  // namespace cliff4
