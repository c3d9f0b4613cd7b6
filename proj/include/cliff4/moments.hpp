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

/// Complex Gaussian vector scaled to unit norm.
StateVector sample_uniform_state(int64_t d, Rng &rng);

struct MomentEstimate {
    double mean = 0;
    double second_moment = 0;
    double variance = 0;
    double stderr_ = 0;  // of the mean
    int64_t samples = 0;
    uint64_t seed = 0;
};

/// How two nonzero-or-zero Pauli labels a, b relate.
enum class PairCase { BothIdentity, OneIdentity, Equal, Commuting, Anticommuting };
constexpr std::array<PairCase, 5> kPairCases = {PairCase::BothIdentity, PairCase::OneIdentity, PairCase::Equal,
                                                PairCase::Commuting, PairCase::Anticommuting};

/// c[j] = sum of the signs of tr(U_sigma W_a^{(x)4} (x) W_b^{(x)4}) / d^j over
/// sigma in S_8 with j cycles, found by multiplying Pauli labels around each
/// cycle. The trace is then sum_j c[j] d^j for every n.
std::array<int64_t, 9> pair_trace_signature(PairCase c);
/// tr(P_[8] W_a^{(x)4} (x) W_b^{(x)4}) from the signature.
Rational pair_trace(PairCase c, int64_t d);
/// The same trace from the closed-form polynomials.
Rational pair_trace_closed_form(PairCase c, int64_t d);
/// Number of ordered label pairs (a, b) in each case.
Rational pair_count(PairCase c, int64_t d);

/// E[alpha_+] = tr(P_{n,4} P_[4]) / D_[4], summed over labels.
Rational exact_first_moment(int n);
/// E[alpha_+^2] = tr(P_{n,4}^{(x)2} P_[8]) / D_[8], summed over label pairs, n <= 5.
Rational exact_second_moment(int n);
/// Same value from a dense 256 x 256 trace against all of S_8 (n = 1 only).
Rational exact_second_moment_dense_n1();

struct MomentClosedForms {
    Rational mean_alpha;      // 4 / (d(d+3))
    Rational second_alpha;    // 16(d^2+15d+68) / (d^2(d+3)(d+5)(d+6)(d+7))
    Rational variance_alpha;  // 96(d-1) / (d^2(d+3)^2(d+5)(d+6)(d+7))
    Rational mean_eps2;       // 6(d-1) / ((d+5)(d+6)(d+7))
    Rational average_potential_ratio;  // 1 + 24 / ((d+4)(d+5)(d+6)(d+7))
};
MomentClosedForms moment_closed_forms(int64_t d);
/// D_[4] E[Phi_4] written as 1 + 4 E[eps^2] / ((d-1)(d+4)).
Rational average_potential_from_eps2(int64_t d, const Rational &mean_eps2);

/// Cycle-type counts over the even-cycle permutations of S_8.
struct EvenCycleRow {
    std::vector<int> cycle_type;
    int64_t total = 0;     // permutations with this type
    int64_t balanced = 0;  // every cycle meets each half of the parties evenly
    int64_t signed_balanced = 0;  // balanced, counted with the anticommuting sign
};
std::vector<EvenCycleRow> even_cycle_table();

struct MonteCarloMoments {
    int n = 0;
    MomentEstimate alpha;
    MomentEstimate eps;
    MomentEstimate eps2;
};
MonteCarloMoments monte_carlo_moments(int n, int64_t samples, uint64_t seed);

struct TailRow {
    double xi = 0;
    double empirical = 0;
    double stderr_ = 0;
    double chebyshev = 0;
    double levy = 0;
    bool pass = false;
};
struct ConcentrationReport {
    int n = 0;
    int64_t samples = 0;
    uint64_t seed = 0;
    double mean_eps = 0;
    double mean_eps_stderr = 0;
    double mean_eps2 = 0;
    double mean_eps2_stderr = 0;
    std::vector<TailRow> tails;
    bool pass = false;
};
/// Tail frequencies of |eps| against the Chebyshev bound and the Levy bound
/// with Lipschitz constant 5.4(d+3)/4. Requires samples >= 10^4.
ConcentrationReport concentration_report(int n, int64_t samples, const std::vector<double> &thresholds, uint64_t seed);

struct LipschitzReport {
    double max_random = 0;
    double max_near_stabilizer = 0;
    double max_ratio = 0;  // of |alpha(psi) - alpha(phi)| d / ||psi - phi||
    int64_t pairs = 0;
    bool pass = false;  // max_ratio <= 5.4
};
LipschitzReport lipschitz_probe(int n, int64_t pairs, uint64_t seed);

/// (t+1) E[Phi_t(orb psi)] over Haar-random qubit states, each orbit potential
/// exact. Monte-Carlo only.
MomentEstimate qubit_average_potential_ratio(int t, int64_t samples, uint64_t seed);

}  // namespace cliff4
