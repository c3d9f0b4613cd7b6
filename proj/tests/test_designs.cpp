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

#include <cmath>

#include "cliff4/clifford.hpp"
#include "cliff4/designs.hpp"
#include "cliff4/fiducial.hpp"
#include "cliff4/pauli.hpp"
#include "test_util.hpp"

namespace cliff4 {
namespace {

using testing::basis_state;
using testing::random_state;

double direct_potential(const std::vector<StateVector> &s, int t, const std::vector<double> &w) {
    double acc = 0;
    for (size_t i = 0; i < s.size(); i++) {
        for (size_t j = 0; j < s.size(); j++) {
            double wi = w.empty() ? 1.0 / s.size() : w[i];
            double wj = w.empty() ? 1.0 / s.size() : w[j];
            acc += wi * wj * std::pow(std::norm(s[i].dot(s[j])), t);
        }
    }
    return acc;
}

std::vector<StateVector> qubit_stabilizer_states() {
    const double r = 1 / std::sqrt(2.0);
    std::vector<StateVector> out;
    const cplx amps[6][2] = {{1, 0}, {0, 1}, {r, r}, {r, -r}, {r, cplx(0, r)}, {r, cplx(0, -r)}};
    for (const auto &a : amps) {
        StateVector v(2);
        v << a[0], a[1];
        out.push_back(v);
    }
    return out;
}

TEST(Designs, FramePotentialOfQubitStabilizers) {
    auto s = qubit_stabilizer_states();
    // (1 + 4 * 2^-t) / 6 for the octahedron.
    EXPECT_NEAR(frame_potential(s, 1), 0.5, 1e-12);
    EXPECT_NEAR(frame_potential(s, 2), 1.0 / 3, 1e-12);
    EXPECT_NEAR(frame_potential(s, 3), 1.0 / 4, 1e-12);
    EXPECT_NEAR(frame_potential(s, 4), 5.0 / 24, 1e-12);
    EXPECT_NEAR(orbit_frame_potential_exact(basis_state(2, 0), 4, 1).value, 5.0 / 24, 1e-12);
}

TEST(Designs, FramePotentialMatchesDirectSum) {
    Rng rng(1);
    std::vector<StateVector> s;
    for (int i = 0; i < 30; i++) {
        s.push_back(random_state(4, rng));
    }
    std::vector<double> w(30);
    double tot = 0;
    for (auto &x : w) {
        x = 1 + double(rng() % 10);
        tot += x;
    }
    for (auto &x : w) {
        x /= tot;
    }
    for (int t = 1; t <= 5; t++) {
        EXPECT_NEAR(frame_potential(s, t), direct_potential(s, t, {}), 1e-12);
        EXPECT_NEAR(frame_potential(s, t, w), direct_potential(s, t, w), 1e-12);
    }
    EXPECT_THROW(frame_potential({}, 2), std::invalid_argument);
    EXPECT_THROW(frame_potential(s, 0), std::invalid_argument);
    EXPECT_THROW(frame_potential(s, 2, {0.5, 0.5}), std::invalid_argument);
    std::vector<double> neg(30, 1.0 / 28);
    neg[0] = neg[1] = -1.0 / 28 + 1.0 / 56;
    EXPECT_THROW(frame_potential(s, 2, neg), std::invalid_argument);
}

TEST(Designs, ReportOfNamedStates) {
    DesignReport t = design_report(named_fiducial("psi_T"), 1);
    EXPECT_NEAR(t.ell4, 4.0 / 3, 1e-12);
    EXPECT_NEAR(t.epsilon, -1.0 / 6, 1e-12);
    EXPECT_TRUE(t.bounds_ok.all());
    DesignReport h = design_report(named_fiducial("hoggar"), 3);
    EXPECT_NEAR(h.ell4, 16.0 / 9, 1e-12);
    EXPECT_NEAR(h.epsilon, -7.0 / 18, 1e-12);
    for (int n = 1; n <= 5; n++) {
        int64_t d = int64_t(1) << n;
        DesignReport z = design_report(basis_state(d, 0), n);
        EXPECT_NEAR(z.epsilon, (d - 1) / 4.0, 1e-12);
        EXPECT_NEAR(z.trace_norm_dev, (d + 1) * (d + 2) / 3.0 * (d - 1) / 4.0, 1e-9);
        EXPECT_TRUE(z.bounds_ok.all());
    }
    EXPECT_THROW(design_report(basis_state(4, 0), 1), DimensionError);
    StateVector bad = StateVector::Ones(2);
    EXPECT_THROW(design_report(bad, 1), NormalizationError);
}

TEST(Designs, RandomStatesRespectBounds) {
    Rng rng(2);
    for (int n = 1; n <= 6; n++) {
        for (int i = 0; i < 20; i++) {
            StateVector psi = random_state(int64_t(1) << n, rng);
            DesignReport r = design_report(psi, n);
            ASSERT_TRUE(r.bounds_ok.all());
            ASSERT_NEAR(r.epsilon, deviation_epsilon(psi), 0);
        }
    }
}

TEST(Designs, OrbitPotentialMatchesEpsilonFormula) {
    Rng rng(3);
    for (int n = 1; n <= 2; n++) {
        for (int i = 0; i < (n == 1 ? 20 : 3); i++) {
            StateVector psi = random_state(int64_t(1) << n, rng);
            double exact = orbit_frame_potential_exact(psi, 4, n).value;
            EXPECT_NEAR(exact, phi4_from_epsilon(deviation_epsilon(psi), int64_t(1) << n), 1e-12);
        }
    }
}

TEST(Designs, QubitClosedFormMatchesOrbit) {
    Rng rng(4);
    for (int i = 0; i < 100; i++) {
        StateVector psi = random_state(2, rng);
        auto b = bloch_vector(psi);
        EXPECT_NEAR(qubit_phi4(b[0], b[1], b[2]), orbit_frame_potential_exact(psi, 4, 1).value, 1e-12);
        StateVector back = bloch_state(b[0], b[1], b[2]);
        EXPECT_NEAR(std::norm(back.dot(psi)), 1, 1e-12);
    }
    EXPECT_NEAR(qubit_phi4(0, 0, 1), 5.0 / 24, 1e-15);
    EXPECT_THROW(qubit_phi4(1, 1, 0), std::invalid_argument);
}

TEST(Designs, QubitFourAndFiveDesign) {
    // x^4 + y^4 + z^4 = 3/5 minimizes the quartic potential.
    BlochVector b = solve_bloch_quartic(0.6);
    EXPECT_NEAR(b.quartic(), 0.6, 1e-12);
    StateVector psi = bloch_state(b.x, b.y, b.z);
    EXPECT_NEAR(qubit_phi4(b.x, b.y, b.z), 0.2, 1e-12);
    EXPECT_NEAR(orbit_frame_potential_exact(psi, 4, 1).value, 0.2, 1e-12);
    EXPECT_NEAR(orbit_frame_potential_exact(psi, 5, 1).value, 1.0 / 6, 1e-12);
    EXPECT_NEAR(deviation_epsilon(psi), 0, 1e-12);
}

TEST(Designs, QubitSixDesignRoots) {
    auto u = qubit_six_design_roots();
    EXPECT_NEAR(u[0] + u[1] + u[2], 1, 1e-12);
    StateVector psi = bloch_state(std::sqrt(u[0]), std::sqrt(u[1]), std::sqrt(u[2]));
    EXPECT_NEAR(orbit_frame_potential_exact(psi, 6, 1).value, 1.0 / 7, 1e-12);
    EXPECT_NEAR(orbit_frame_potential_exact(psi, 7, 1).value, 1.0 / 8, 1e-12);
    EXPECT_GT(orbit_frame_potential_exact(psi, 8, 1).value, 1.0 / 9 + 1e-6);
}

TEST(Designs, MonteCarloAgreesWithExact) {
    Rng rng(5);
    StateVector psi = random_state(4, rng);
    double exact = orbit_frame_potential_exact(psi, 4, 2).value;
    OrbitPotential mc = orbit_frame_potential_mc(psi, 4, 2, 40000, 9);
    EXPECT_LT(std::abs(mc.value - exact), 5 * mc.stderr_);
    OrbitPotential again = orbit_frame_potential_mc(psi, 4, 2, 40000, 9);
    EXPECT_EQ(mc.value, again.value);
    EXPECT_THROW(orbit_frame_potential_exact(random_state(8, rng), 4, 3), CapacityError);
    EXPECT_THROW(orbit_frame_potential_mc(psi, 4, 6, 100, 1), CapacityError);
}

TEST(Designs, MinimalDesignSize) {
    EXPECT_EQ(minimal_design_size(2, 4), 9);
    EXPECT_EQ(minimal_design_size(2, 8), 25);
    EXPECT_EQ(minimal_design_size(4, 2), 16);
    EXPECT_EQ(minimal_design_size(2, 5), 12);
    EXPECT_THROW(minimal_design_size(2, 0), std::invalid_argument);
}

TEST(Designs, ProductStateBound) {
    Rng rng(6);
    for (int n = 1; n <= 3; n++) {
        int64_t d = int64_t(1) << n;
        for (int i = 0; i < 10; i++) {
            std::array<StateVector, 4> s = {random_state(d, rng), random_state(d, rng), random_state(d, rng),
                                            random_state(d, rng)};
            double v = product_state_bound_check(s, n);
            EXPECT_GE(v, -1e-12);
            EXPECT_LE(v, 1.0 / d + 1e-12);
        }
        StateVector z = basis_state(d, 0);
        EXPECT_NEAR(product_state_bound_check({z, z, z, z}, n), 1.0 / d, 1e-12);
    }
}

TEST(Designs, TensorAdmissibility) {
    EXPECT_TRUE(tensor_fiducial_admissible({5}));
    EXPECT_TRUE(tensor_fiducial_admissible({3, 4}));
    EXPECT_TRUE(tensor_fiducial_admissible({1, 1, 7}));
    EXPECT_TRUE(tensor_fiducial_admissible({1, 2, 3}));
    EXPECT_TRUE(tensor_fiducial_admissible({2, 2, 1}));
    EXPECT_TRUE(tensor_fiducial_admissible({1, 1, 1, 1}));
    EXPECT_FALSE(tensor_fiducial_admissible({2, 2, 2}));
    EXPECT_FALSE(tensor_fiducial_admissible({1, 1, 1, 2}));
    EXPECT_FALSE(tensor_fiducial_admissible({1, 1, 1, 1, 1}));
    EXPECT_FALSE(tensor_fiducial_admissible({}));
    EXPECT_FALSE(tensor_fiducial_admissible({0, 2}));
}

TEST(Designs, EpsilonIsCliffordInvariant) {
    Rng rng(7);
    for (int n = 1; n <= 4; n++) {
        StateVector psi = random_state(int64_t(1) << n, rng);
        double e = deviation_epsilon(psi);
        for (int i = 0; i < 5; i++) {
            EXPECT_NEAR(deviation_epsilon(random_clifford(n, rng).apply(psi)), e, 1e-11);
        }
    }
}

}  // namespace
}  // namespace cliff4
