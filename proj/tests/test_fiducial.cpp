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

#include "cliff4/designs.hpp"
#include "cliff4/fiducial.hpp"
#include "cliff4/pauli.hpp"
#include "cliff4/tensor_ops.hpp"
#include "test_util.hpp"

namespace cliff4 {
namespace {

using testing::basis_state;
using testing::random_state;

TEST(Fiducial, NamedStates) {
    StateVector t = named_fiducial("psi_T");
    EXPECT_EQ(t.size(), 2);
    EXPECT_NEAR(ell4_norm4(t), 4.0 / 3, 1e-12);
    EXPECT_EQ(named_fiducial("hoggar").size(), 8);
    EXPECT_EQ(named_fiducial("psi_T^3").size(), 8);
    EXPECT_NEAR(ell4_norm4(named_fiducial("psi_T^3")), std::pow(4.0 / 3, 3), 1e-12);
    EXPECT_NEAR(std::norm(named_fiducial("bloch:0,0,1")[0]), 1, 1e-12);
    EXPECT_NEAR(std::norm(named_fiducial("bloch(1,0,0)")[1]), 0.5, 1e-12);
    StateVector p = named_product({"hoggar", "psi_T"});
    EXPECT_EQ(p.size(), 16);
    EXPECT_LT((p - tensor_product(named_fiducial("hoggar"), t)).norm(), 1e-15);
    EXPECT_THROW(named_fiducial("nope"), std::invalid_argument);
    EXPECT_THROW(named_fiducial("bloch:1,1"), std::invalid_argument);
    EXPECT_THROW(named_fiducial("bloch:1,1,1"), std::invalid_argument);
    EXPECT_THROW(named_fiducial("psi_T^x"), std::invalid_argument);
    EXPECT_THROW(named_product({}), std::invalid_argument);
}

TEST(Fiducial, Ell4IsMultiplicative) {
    Rng rng(1);
    for (int i = 0; i < 10; i++) {
        StateVector a = random_state(2 << (i % 3), rng);
        StateVector b = random_state(2 << (i % 2), rng);
        EXPECT_NEAR(ell4_norm4(tensor_product(a, b)), ell4_norm4(a) * ell4_norm4(b), 1e-10);
    }
}

TEST(Fiducial, BlochQuartic) {
    for (double q : {1.0 / 3, 0.4, 0.5, 5.0 / 7, 0.9, 1.0}) {
        BlochVector b = solve_bloch_quartic(q);
        EXPECT_NEAR(b.x * b.x + b.y * b.y + b.z * b.z, 1, 1e-12);
        EXPECT_NEAR(b.quartic(), q, 1e-12);
        EXPECT_NEAR(b.y, b.z, 1e-12);
        EXPECT_GE(b.x * b.x, b.y * b.y - 1e-12);
        StateVector psi = bloch_state(b.x, b.y, b.z);
        EXPECT_NEAR(ell4_norm4(psi), 1 + q, 1e-12);
    }
    EXPECT_THROW(solve_bloch_quartic(0.3), InfeasibleError);
    EXPECT_THROW(solve_bloch_quartic(1.01), InfeasibleError);
}

struct Completion {
    std::vector<std::string> base;
    int n;
    int64_t num;
    int64_t den;
};

TEST(Fiducial, CompletionExamples) {
    const Completion cases[] = {
        {{"psi_T"}, 2, 5, 7},     {{"psi_T^2"}, 3, 7, 11}, {{"psi_T^3"}, 4, 8, 19},
        {{"hoggar"}, 4, 17, 19}, {{"hoggar", "psi_T"}, 5, 19, 35},
    };
    for (const auto &c : cases) {
        StateVector prev = named_product(c.base);
        CompletionResult r = complete_fiducial(prev, c.n);
        double q = double(c.num) / double(c.den);
        double d = double(int64_t(1) << c.n);
        EXPECT_NEAR(r.c - 1, q, 1e-12) << c.n;
        EXPECT_NEAR(r.bloch.quartic(), q, 1e-12);
        EXPECT_EQ(r.state.size(), int64_t(1) << c.n);
        // Independent: the norm identity and eps from the full report.
        EXPECT_NEAR(ell4_norm4(r.state), 4 * d / (d + 3), 1e-10);
        EXPECT_NEAR(design_report(r.state, c.n).epsilon, 0, 1e-10);
        EXPECT_NEAR(r.epsilon, 0, 1e-10);
    }
    EXPECT_THROW(complete_fiducial(basis_state(2, 0), 2), InfeasibleError);
    EXPECT_THROW(complete_fiducial(named_fiducial("psi_T"), 3), DimensionError);
}

TEST(Fiducial, CompletionOrbitIsDesignAtTwoQubits) {
    CompletionResult r = complete_fiducial(named_fiducial("psi_T"), 2);
    EXPECT_NEAR(orbit_frame_potential_exact(r.state, 4, 2).value, 1.0 / 35, 1e-12);
}

TEST(Fiducial, BisectionConverges) {
    for (int n = 1; n <= 3; n++) {
        auto [p1, p2] = default_bisection_seeds(n);
        EXPECT_GT(deviation_epsilon(p1), 0);
        EXPECT_LT(deviation_epsilon(p2), 0);
        BisectionResult r = bisect_fiducial(p1, p2, 1e-8, 200);
        EXPECT_LE(std::abs(r.epsilon), 1e-8);
        EXPECT_NEAR(deviation_epsilon(r.state), r.epsilon, 1e-12);
        EXPECT_NEAR(r.state.norm(), 1, 1e-12);
        EXPECT_LE(r.iterations, 60);
        BisectionResult s = bisect_fiducial(p1, p2, 1e-8, 1000, BisectionMode::Weighted);
        EXPECT_LE(std::abs(s.epsilon), 1e-8);
    }
    auto [p1, p2] = default_bisection_seeds(2);
    EXPECT_THROW(bisect_fiducial(p1, p2, 1e-14, 2), ConvergenceError);
    EXPECT_THROW(bisect_fiducial(p2, p1, 1e-8, 100), InfeasibleError);
    EXPECT_THROW(bisect_fiducial(basis_state(2, 0), basis_state(2, 1), 1e-8, 100), InfeasibleError);
}

TEST(Fiducial, BisectionRootIsDesignAtTwoQubits) {
    auto [p1, p2] = default_bisection_seeds(2);
    BisectionResult r = bisect_fiducial(p1, p2, 1e-12, 200);
    EXPECT_NEAR(orbit_frame_potential_exact(r.state, 4, 2).value, 1.0 / 35, 1e-12);
}

TEST(Fiducial, WeightedTwoOrbit) {
    StateVector plus = basis_state(2, 0);
    StateVector minus = named_fiducial("psi_T");
    WeightedDesign w = weighted_two_orbit(plus, minus, 1);
    EXPECT_EQ(w.orbit1, 6);
    EXPECT_EQ(w.orbit2, 8);
    double total = 0;
    for (double x : w.weights) {
        total += x;
    }
    EXPECT_NEAR(total, 1, 1e-12);
    EXPECT_NEAR(frame_potential(w.states, 4, w.weights), 0.2, 1e-12);

    WeightedDesign w2 = weighted_two_orbit(basis_state(4, 0), named_fiducial("psi_T^2"), 2);
    EXPECT_EQ(w2.orbit1, 60);
    EXPECT_EQ(w2.orbit2, 640);
    EXPECT_NEAR(frame_potential(w2.states, 4, w2.weights), 1.0 / 35, 1e-12);
    EXPECT_THROW(weighted_two_orbit(minus, plus, 1), InfeasibleError);
}

TEST(Fiducial, SingerCycles) {
    for (int n = 1; n <= 2; n++) {
        F2Matrix s = singer_symplectic_search(n);
        EXPECT_TRUE(is_singer_cycle(s));
        EXPECT_EQ(f2_order(s), (1 << n) + 1);
    }
    for (int n = 1; n <= 5; n++) {
        F2Matrix f = singer_symplectic_field(n);
        EXPECT_TRUE(is_singer_cycle(f)) << n;
        for (int k = 1; k <= (1 << n); k++) {
            F2Matrix p = f;
            for (int j = 1; j < k; j++) {
                p = p * f;
            }
            ASSERT_EQ(fixed_space_dim(p), 0);
        }
    }
    EXPECT_FALSE(is_singer_cycle(F2Matrix::identity(2)));
}

TEST(Fiducial, SingerEigenbasisIsUnbiased) {
    for (int n = 1; n <= 3; n++) {
        SingerData s = singer_unitary(n);
        int64_t d = int64_t(1) << n;
        ASSERT_EQ(int64_t(s.eigenvectors.size()), d);
        EXPECT_LT(s.mub_deviation, 1e-9);
        // Powers U^m, m = 1..d, carry the computational basis to unbiased bases.
        Matrix p = Matrix::Identity(d, d);
        for (int64_t m = 1; m <= d; m++) {
            p = s.u.matrix() * p;
            ASSERT_LT((p.cwiseAbs2().array() - 1.0 / d).abs().maxCoeff(), 1e-9) << "n=" << n << " m=" << m;
        }
        p = s.u.matrix() * p;
        EXPECT_NEAR(std::abs(p(0, 0)), 1, 1e-9);
        for (int64_t i = 0; i < d; i++) {
            StateVector v = s.u.apply(s.eigenvectors[i]);
            EXPECT_LT((v - s.eigenvalues[i] * s.eigenvectors[i]).norm(), 1e-9);
            for (int64_t j = 0; j < d; j++) {
                EXPECT_NEAR(std::abs(s.eigenvectors[i].dot(s.eigenvectors[j])), i == j ? 1 : 0, 1e-9);
            }
        }
    }
}

TEST(Fiducial, SingerEpsilonValues) {
    auto table = singer_epsilon_table({1, 2, 3, 4});
    const double expect[] = {-2.0 / 9, -0.12, -0.0617, -0.031142};
    const double tol[] = {1e-12, 1e-12, 1e-4, 1e-6};
    for (size_t i = 0; i < table.size(); i++) {
        EXPECT_NEAR(table[i].epsilon, expect[i], tol[i]) << table[i].n;
        EXPECT_LT(table[i].spread, 1e-9);
        SingerData s = singer_unitary(table[i].n);
        StateVector psi = tensor_product(s.eigenvectors[0], named_fiducial("psi_T"));
        EXPECT_NEAR(design_report(psi, table[i].n + 1).epsilon, table[i].epsilon, 1e-10);
    }
}

TEST(Fiducial, HigherPotentials) {
    BlochVector b = solve_bloch_quartic(0.6);
    HigherPotentialReport r = higher_potential_probe(1, bloch_state(b.x, b.y, b.z));
    ASSERT_EQ(r.potentials.size(), 3u);
    EXPECT_NEAR(r.deviations[0].second, 0, 1e-12);
    EXPECT_GT(r.deviations[1].second, 1e-6);
    EXPECT_GT(r.deviations[2].second, 1e-6);

    auto [p1, p2] = default_bisection_seeds(2);
    BisectionResult root = bisect_fiducial(p1, p2, 1e-12, 200);
    HigherPotentialReport r2 = higher_potential_probe(2, root.state);
    ASSERT_EQ(r2.potentials.size(), 1u);
    EXPECT_EQ(r2.potentials[0].first, 5);
    EXPECT_GT(r2.deviations[0].second, -1e-12);
    EXPECT_THROW(higher_potential_probe(1, basis_state(2, 0)), InfeasibleError);
    EXPECT_THROW(higher_potential_probe(3, basis_state(8, 0)), CapacityError);
}

}  // namespace
}  // namespace cliff4
