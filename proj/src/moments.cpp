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


#include "cliff4/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "cliff4/clifford.hpp"
#include "cliff4/kernels.hpp"
#include "cliff4/pauli.hpp"
#include "cliff4/stabrep.hpp"
#include "cliff4/tensor_ops.hpp"

namespace cliff4 {

StateVector sample_uniform_state(int64_t d, Rng &rng) {
    if (d < 1) {
        throw std::invalid_argument("sample_uniform_state: d >= 1");
    }
    std::normal_distribution<double> g;
    StateVector v(d);
    for (int64_t k = 0; k < d; k++) {
        double re = g(rng);
        double im = g(rng);
        v[k] = cplx(re, im);
    }
    return v / v.norm();
}

namespace {

// Sign of tr(U_sigma (x)_p W_{slot p}) / d^{cycles}, or 0 when some cycle
// product is not proportional to the identity.
int slot_trace_sign(const Permutation &sigma, const std::vector<PauliLabel> &slots, int &cycles) {
    int k = int(sigma.size());
    std::vector<bool> seen(k, false);
    int phase = 0;
    cycles = 0;
    for (int s = 0; s < k; s++) {
        if (seen[s]) {
            continue;
        }
        cycles++;
        PauliLabel prod = PauliLabel::identity(slots[0].n());
        for (int j = s; !seen[j]; j = sigma[j]) {
            seen[j] = true;
            prod = pauli_product(prod, slots[j]);
        }
        if (prod.a.bits != 0) {
            return 0;
        }
        phase += prod.phase_exp;
    }
    if (phase % 2) {
        throw InternalError("slot_trace_sign: imaginary trace");
    }
    return phase % 4 == 0 ? 1 : -1;
}

std::vector<int64_t> slot_signature(const std::vector<PauliLabel> &slots) {
    int k = int(slots.size());
    std::vector<int64_t> c(k + 1, 0);
    for (const auto &sigma : all_permutations(k)) {
        int cycles = 0;
        int s = slot_trace_sign(sigma, slots, cycles);
        c[cycles] += s;
    }
    return c;
}

// Representative two-qubit labels: Z (x) I, I (x) Z and X (x) I.
const PauliLabel kI(F2Vector(2, 0));
const PauliLabel kZ0(F2Vector(2, 0b0001));
const PauliLabel kZ1(F2Vector(2, 0b0100));
const PauliLabel kX0(F2Vector(2, 0b0010));

std::pair<PauliLabel, PauliLabel> representatives(PairCase c) {
    switch (c) {
        case PairCase::BothIdentity:
            return {kI, kI};
        case PairCase::OneIdentity:
            return {kZ0, kI};
        case PairCase::Equal:
            return {kZ0, kZ0};
        case PairCase::Commuting:
            return {kZ0, kZ1};
        case PairCase::Anticommuting:
            return {kZ0, kX0};
    }
    throw std::invalid_argument("representatives: bad case");
}

Rational poly_eval(const std::vector<int64_t> &c, int64_t d, int64_t denom) {
    Rational s = 0;
    Rational p = 1;
    for (int64_t v : c) {
        s += v * p;
        p *= d;
    }
    return s / denom;
}

Rational sym_dim_r(int64_t d, int t) {
    return Rational(sym_dim(d, t));
}

}  // namespace

std::array<int64_t, 9> pair_trace_signature(PairCase c) {
    auto [a, b] = representatives(c);
    std::vector<PauliLabel> slots = {a, a, a, a, b, b, b, b};
    auto v = slot_signature(slots);
    std::array<int64_t, 9> out{};
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

Rational pair_trace(PairCase c, int64_t d) {
    auto sig = pair_trace_signature(c);
    return poly_eval(std::vector<int64_t>(sig.begin(), sig.end()), d, 40320);
}

Rational pair_trace_closed_form(PairCase c, int64_t d) {
    Rational D = d;
    switch (c) {
        case PairCase::BothIdentity:
            return sym_dim_r(d, 8);
        case PairCase::OneIdentity:
            return sym_dim_r(d, 8) / sym_dim_r(d, 4) * (3 * D * D + 6 * D) / 24;
        case PairCase::Equal:
            return (7 * D * D * D * D + 84 * D * D * D + 308 * D * D + 336 * D) / 2688;
        case PairCase::Commuting:
            return (D * D * D * D + 28 * D * D * D + 236 * D * D + 560 * D) / 4480;
        case PairCase::Anticommuting:
            return (D * D * D * D + 12 * D * D * D + 44 * D * D + 48 * D) / 4480;
    }
    throw std::invalid_argument("pair_trace_closed_form: bad case");
}

Rational pair_count(PairCase c, int64_t d) {
    Rational D2 = Rational(d) * d;
    switch (c) {
        case PairCase::BothIdentity:
            return 1;
        case PairCase::OneIdentity:
            return 2 * (D2 - 1);
        case PairCase::Equal:
            return D2 - 1;
        case PairCase::Commuting:
            return (D2 - 1) * (D2 / 2 - 2);
        case PairCase::Anticommuting:
            return (D2 - 1) * D2 / 2;
    }
    throw std::invalid_argument("pair_count: bad case");
}

Rational exact_first_moment(int n) {
    if (n < 1 || n > 16) {
        throw CapacityError("exact_first_moment: n must be in 1..16");
    }
    int64_t d = int64_t(1) << n;
    Rational D4 = sym_dim_r(d, 4);
    Rational nonzero = poly_eval(slot_signature({kZ0, kZ0, kZ0, kZ0}), d, 24);
    Rational d2 = Rational(d) * d;
    return (D4 + (d2 - 1) * nonzero) / (d2 * D4);
}

Rational exact_second_moment(int n) {
    if (n < 1 || n > 5) {
        throw CapacityError("exact_second_moment: n must be in 1..5");
    }
    int64_t d = int64_t(1) << n;
    Rational total = 0;
    for (PairCase c : kPairCases) {
        total += pair_count(c, d) * pair_trace(c, d);
    }
    Rational d4 = Rational(d) * d * d * d;
    return total / (d4 * sym_dim_r(d, 8));
}

Rational exact_second_moment_dense_n1() {
    Matrix P = Matrix(stab_projector(1, 4));
    Matrix M = kron(P, P);
    const int k = 8;
    double re = 0;
    double im = 0;
    for (const auto &sigma : all_permutations(k)) {
        for (int64_t i = 0; i < 256; i++) {
            int64_t j = 0;
            for (int p = 0; p < k; p++) {
                int64_t bit = (i >> (k - 1 - sigma[p])) & 1;
                j |= bit << (k - 1 - p);
            }
            re += M(i, j).real();
            im += M(i, j).imag();
        }
    }
    // Entries of P_{1,4} are multiples of 1/4, so M is exact in 1/16.
    double scaled = re * 16;
    int64_t rounded = std::llround(scaled);
    if (std::abs(scaled - double(rounded)) > 1e-6 || std::abs(im) > 1e-6) {
        throw InternalError("exact_second_moment_dense_n1: trace is not a multiple of 1/16");
    }
    return Rational(rounded) / (16 * 40320 * sym_dim_r(2, 8));
}

MomentClosedForms moment_closed_forms(int64_t d) {
    Rational D = d;
    MomentClosedForms f;
    f.mean_alpha = Rational(4) / (D * (D + 3));
    f.second_alpha = 16 * (D * D + 15 * D + 68) / (D * D * (D + 3) * (D + 5) * (D + 6) * (D + 7));
    f.variance_alpha = 96 * (D - 1) / (D * D * (D + 3) * (D + 3) * (D + 5) * (D + 6) * (D + 7));
    f.mean_eps2 = 6 * (D - 1) / ((D + 5) * (D + 6) * (D + 7));
    f.average_potential_ratio = 1 + Rational(24) / ((D + 4) * (D + 5) * (D + 6) * (D + 7));
    return f;
}

Rational average_potential_from_eps2(int64_t d, const Rational &mean_eps2) {
    Rational D = d;
    return 1 + 4 * mean_eps2 / ((D - 1) * (D + 4));
}

std::vector<EvenCycleRow> even_cycle_table() {
    std::vector<PauliLabel> anti = {kZ0, kZ0, kZ0, kZ0, kX0, kX0, kX0, kX0};
    std::map<std::vector<int>, EvenCycleRow> rows;
    for (const auto &sigma : all_permutations(8)) {
        auto type = cycle_type(sigma);
        if (std::any_of(type.begin(), type.end(), [](int l) { return l % 2; })) {
            continue;
        }
        EvenCycleRow &r = rows[type];
        r.cycle_type = type;
        r.total++;
        std::vector<bool> seen(8, false);
        bool balanced = true;
        for (int s = 0; s < 8; s++) {
            if (seen[s]) {
                continue;
            }
            int low = 0;
            int high = 0;
            for (int j = s; !seen[j]; j = sigma[j]) {
                seen[j] = true;
                (j < 4 ? low : high)++;
            }
            balanced = balanced && low % 2 == 0 && high % 2 == 0;
        }
        if (balanced) {
            r.balanced++;
            int cycles = 0;
            r.signed_balanced += slot_trace_sign(sigma, anti, cycles);
        }
    }
    std::vector<EvenCycleRow> out;
    for (auto &[type, row] : rows) {
        out.push_back(row);
    }
    return out;
}

namespace {

MomentEstimate estimate(const std::vector<double> &v, uint64_t seed) {
    MomentEstimate e;
    e.samples = int64_t(v.size());
    e.seed = seed;
    double s1 = 0;
    double s2 = 0;
    for (double x : v) {
        s1 += x;
        s2 += x * x;
    }
    e.mean = s1 / double(v.size());
    e.second_moment = s2 / double(v.size());
    e.variance = std::max(0.0, e.second_moment - e.mean * e.mean);
    e.stderr_ = std::sqrt(e.variance / double(v.size()));
    return e;
}

}  // namespace

MonteCarloMoments monte_carlo_moments(int n, int64_t samples, uint64_t seed) {
    if (n < 1 || n > 8) {
        throw CapacityError("monte_carlo_moments: n must be in 1..8");
    }
    if (samples < 2) {
        throw std::invalid_argument("monte_carlo_moments: at least two samples");
    }
    auto raw = kernels::haar_samples_omp(n, samples, seed);
    std::vector<double> alpha;
    std::vector<double> eps;
    std::vector<double> eps2;
    for (const auto &s : raw) {
        alpha.push_back(s.alpha_plus);
        eps.push_back(s.epsilon);
        eps2.push_back(s.epsilon * s.epsilon);
    }
    MonteCarloMoments m;
    m.n = n;
    m.alpha = estimate(alpha, seed);
    m.eps = estimate(eps, seed);
    m.eps2 = estimate(eps2, seed);
    return m;
}

ConcentrationReport concentration_report(int n, int64_t samples, const std::vector<double> &thresholds,
                                         uint64_t seed) {
    if (samples < 10000) {
        throw std::invalid_argument("concentration_report: samples >= 10^4 required");
    }
    auto mc = monte_carlo_moments(n, samples, seed);
    auto raw = kernels::haar_samples_omp(n, samples, seed);
    double d = double(int64_t(1) << n);
    double eps2 = rational_to_double(moment_closed_forms(int64_t(d)).mean_eps2);
    double eta = 5.4 * (d + 3) / 4;
    ConcentrationReport r;
    r.n = n;
    r.samples = samples;
    r.seed = seed;
    r.mean_eps = mc.eps.mean;
    r.mean_eps_stderr = mc.eps.stderr_;
    r.mean_eps2 = mc.eps2.mean;
    r.mean_eps2_stderr = mc.eps2.stderr_;
    r.pass = std::abs(r.mean_eps) <= 4 * r.mean_eps_stderr && std::abs(r.mean_eps2 - eps2) <= 4 * r.mean_eps2_stderr;
    for (double xi : thresholds) {
        if (xi <= 0) {
            throw std::invalid_argument("concentration_report: thresholds must be positive");
        }
        TailRow row;
        row.xi = xi;
        int64_t hits = std::count_if(raw.begin(), raw.end(), [&](const auto &s) { return std::abs(s.epsilon) >= xi; });
        row.empirical = double(hits) / double(samples);
        row.stderr_ = std::sqrt(row.empirical * (1 - row.empirical) / double(samples));
        row.chebyshev = eps2 / (xi * xi);
        row.levy = 2 * std::exp(-d * xi * xi / (9 * std::pow(std::numbers::pi, 3) * eta * eta));
        row.pass = row.empirical <= std::min(row.chebyshev, row.levy) + 3 * row.stderr_;
        r.pass = r.pass && row.pass;
        r.tails.push_back(row);
    }
    return r;
}

namespace {

double alpha_plus(const StateVector &psi) {
    double d = double(psi.size());
    return ell4_norm4(psi) / (d * d);
}

double ratio(const StateVector &psi, const StateVector &phi) {
    double dist = (psi - phi).norm();
    if (dist <= 1e-8) {
        return 0;
    }
    return std::abs(alpha_plus(psi) - alpha_plus(phi)) * double(psi.size()) / dist;
}

StateVector perturb(const StateVector &psi, double delta, Rng &rng) {
    StateVector g = sample_uniform_state(psi.size(), rng);
    StateVector v = psi + delta * g;
    return v / v.norm();
}

}  // namespace

LipschitzReport lipschitz_probe(int n, int64_t pairs, uint64_t seed) {
    if (pairs < 1000) {
        throw std::invalid_argument("lipschitz_probe: pairs >= 10^3 required");
    }
    if (n < 1 || n > 6) {
        throw CapacityError("lipschitz_probe: n must be in 1..6");
    }
    int64_t d = int64_t(1) << n;
    Rng rng(seed);
    LipschitzReport r;
    r.pairs = pairs;
    const double deltas[] = {1e-1, 1e-2, 1e-3};
    StateVector zero = StateVector::Zero(d);
    zero[0] = 1;
    for (int64_t i = 0; i < pairs; i++) {
        switch (i % 3) {
            case 0: {
                StateVector psi = sample_uniform_state(d, rng);
                StateVector phi = sample_uniform_state(d, rng);
                r.max_random = std::max(r.max_random, ratio(psi, phi));
                break;
            }
            case 1: {
                StateVector psi = sample_uniform_state(d, rng);
                StateVector phi = perturb(psi, deltas[(i / 3) % 3], rng);
                r.max_random = std::max(r.max_random, ratio(psi, phi));
                break;
            }
            default: {
                StateVector psi = random_clifford(n, rng).apply(zero);
                StateVector phi = perturb(psi, deltas[(i / 3) % 3], rng);
                r.max_near_stabilizer = std::max(r.max_near_stabilizer, ratio(psi, phi));
                break;
            }
        }
    }
    r.max_ratio = std::max(r.max_random, r.max_near_stabilizer);
    r.pass = r.max_ratio <= 5.4;
    return r;
}

MomentEstimate qubit_average_potential_ratio(int t, int64_t samples, uint64_t seed) {
    if (t < 1 || samples < 2) {
        throw std::invalid_argument("qubit_average_potential_ratio: t >= 1 and samples >= 2");
    }
    int64_t shards = (samples + kernels::kShardSize - 1) / kernels::kShardSize;
    std::vector<double> values(samples);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t s = 0; s < shards; s++) {
        std::seed_seq seq{seed, uint64_t(s), uint64_t(0x726174696f)};
        Rng rng(seq);
        for (int64_t i = s * kernels::kShardSize; i < std::min(samples, (s + 1) * kernels::kShardSize); i++) {
            StateVector psi = sample_uniform_state(2, rng);
            values[i] = (t + 1) * kernels::overlap_power_mean_serial(psi, clifford_images(psi, 1), t);
        }
    }
    return estimate(values, seed);
}

}  // namespace cliff4
