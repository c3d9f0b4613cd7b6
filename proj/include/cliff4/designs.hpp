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

#pragma once

#include <array>
#include <vector>

#include "cliff4/common.hpp"

namespace cliff4 {

/// sum_{j,k} w_j w_k |<psi_j|psi_k>|^{2t}; uniform weights when none given.
/// Throws std::invalid_argument on bad weights and InternalError if the result
/// falls below 1/D_[t] - 1e-9.
double frame_potential(const std::vector<StateVector> &states, int t, const std::vector<double> &weights = {});

struct DesignBounds {
    bool ell4 = false;
    bool alpha_plus = false;
    bool epsilon = false;
    bool all() const {
        return ell4 && alpha_plus && epsilon;
    }
};

struct DesignReport {
    int n = 0;
    double ell4 = 0;
    double alpha_plus = 0;
    double epsilon = 0;
    double phi4 = 0;
    double op_norm_dev = 0;
    double trace_norm_dev = 0;
    DesignBounds bounds_ok;
};

DesignReport design_report(const StateVector &psi, int n);
double deviation_epsilon(const StateVector &psi);

/// The fourth frame potential of a Clifford orbit implied by its deviation.
double phi4_from_epsilon(double eps, int64_t d);

/// Unit state with Bloch vector (x, y, z).
StateVector bloch_state(double x, double y, double z);
/// Bloch vector of a qubit state.
std::array<double, 3> bloch_vector(const StateVector &psi);

double qubit_phi4(double x, double y, double z);
std::array<double, 3> qubit_six_design_roots();

struct OrbitPotential {
    double value = 0;
    double stderr_ = 0;
    int64_t samples = 0;
    bool exact = false;
};
/// (1/|G|) sum over the projective Clifford group, n <= 2.
OrbitPotential orbit_frame_potential_exact(const StateVector &psi, int t, int n);
/// Monte-Carlo estimate over uniformly random Clifford elements, n <= 5.
OrbitPotential orbit_frame_potential_mc(const StateVector &psi, int t, int n, int64_t samples, uint64_t seed);

BigInt minimal_design_size(int64_t d, int t);

/// tr(P_{n,4} (rho_1 (x) rho_2 (x) rho_3 (x) rho_4)).
double product_state_bound_check(const std::array<StateVector, 4> &states, int n);

/// Whether a tensor product with these qubit counts can be a 4-design fiducial.
/// A single part is accepted: no tensor restriction applies.
bool tensor_fiducial_admissible(const std::vector<int> &parts);

}  // namespace cliff4
