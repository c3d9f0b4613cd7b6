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

#include <string>
#include <utility>
#include <vector>

#include "cliff4/clifford.hpp"
#include "cliff4/common.hpp"
#include "cliff4/f2lin.hpp"

namespace cliff4 {

/// Names: psi_T, hoggar, zero, bloch:x,y,z (also bloch(x,y,z)). A trailing ^k
/// takes a tensor power, e.g. psi_T^3.
StateVector named_fiducial(const std::string &name);
/// Tensor product of named factors, first factor on the most significant qubits.
StateVector named_product(const std::vector<std::string> &names);

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 1;
    double quartic() const {
        return x * x * x * x + y * y * y * y + z * z * z * z;
    }
};

/// Unit vector with x^4 + y^4 + z^4 = q on the branch y = z, x^2 the larger
/// root. Throws InfeasibleError unless 1/3 <= q <= 1.
BlochVector solve_bloch_quartic(double q);

struct CompletionResult {
    StateVector state;
    double c = 0;  // 4d / ((d + 3) ||Xi(prev)||^4)
    BlochVector bloch;
    double epsilon = 0;
};
/// prev (x) psi(x, y, z) with ||Xi||^4 = 4d/(d+3), d = 2^n.
CompletionResult complete_fiducial(const StateVector &prev, int n);

enum class BisectionMode { Midpoint, Weighted };

struct BisectionResult {
    StateVector state;
    double epsilon = 0;
    int iterations = 0;
};
/// Bisection between eps(psi1) > 0 and eps(psi2) < 0 until |eps| <= tol.
BisectionResult bisect_fiducial(const StateVector &psi1, const StateVector &psi2, double tol, int max_iter,
                           BisectionMode mode = BisectionMode::Midpoint);

/// Seeds (psi1, psi2) used when none are supplied, n <= 8.
std::pair<StateVector, StateVector> default_bisection_seeds(int n);

struct WeightedDesign {
    std::vector<StateVector> states;
    std::vector<double> weights;
    int64_t orbit1 = 0;
    int64_t orbit2 = 0;
    double epsilon1 = 0;
    double epsilon2 = 0;
};
/// Union of the two Clifford orbits weighted into an exact 4-design, n <= 2.
WeightedDesign weighted_two_orbit(const StateVector &psi1, const StateVector &psi2, int n);

/// Symplectic matrix of order 2^n + 1 whose nontrivial powers fix no nonzero
/// vector and move the Z subspace to complementary subspaces.
F2Matrix singer_symplectic_search(int n);
/// Same property, from multiplication by a primitive element in GF(2^{2n}).
F2Matrix singer_symplectic_field(int n);
bool is_singer_cycle(const F2Matrix &F);

struct SingerData {
    CliffordElement u;
    std::vector<cplx> eigenvalues;
    std::vector<StateVector> eigenvectors;
    double mub_deviation = 0;  // max | |<e|U^m|f>|^2 - 1/d | over m = 1..d
};
/// Lifted Singer cycle with its eigenbasis. Throws InternalError if the
/// spectrum is degenerate or U^{d+1} is not scalar.
SingerData singer_unitary(int n);

struct SingerEpsilon {
    int n = 0;
    double epsilon = 0;  // eps(psi_n (x) psi_T)
    double spread = 0;   // max - min over the eigenbasis
};
std::vector<SingerEpsilon> singer_epsilon_table(const std::vector<int> &ns);

struct HigherPotentialReport {
    int n = 0;
    double epsilon = 0;
    std::vector<std::pair<int, double>> potentials;  // (t, Phi_t of the orbit)
    std::vector<std::pair<int, double>> deviations;  // (t, Phi_t - 1/D_[t])
};
/// Frame potentials beyond t = 4 for the orbit of a root of eps (t = 5 at
/// n = 2, t = 5, 6, 7 at n = 1).
HigherPotentialReport higher_potential_probe(int n, const StateVector &psi);

}  // namespace cliff4
