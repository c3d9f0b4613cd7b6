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

#include "cliff4/stabrep.hpp"

#include <cmath>
#include <set>

#include "cliff4/clifford.hpp"
#include "cliff4/kernels.hpp"
#include "cliff4/pauli.hpp"

namespace cliff4 {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Columns: cycle types (1^4), (2^2), (2,1^2), (3,1), (4).
const int kCharTable[5][5] = {
    {1, 1, 1, 1, 1},    // [4]
    {1, 1, -1, 1, -1},  // [1,1,1,1]
    {2, 2, 0, -1, 0},   // [2,2]
    {3, -1, -1, 0, 1},  // [2,1,1]
    {3, -1, 1, 0, -1},  // [3,1]
};

int class_index(const std::vector<int> &c) {
    if (c == std::vector<int>{1, 1, 1, 1}) {
        return 0;
    }
    if (c == std::vector<int>{2, 2}) {
        return 1;
    }
    if (c == std::vector<int>{2, 1, 1}) {
        return 2;
    }
    if (c == std::vector<int>{3, 1}) {
        return 3;
    }
    if (c == std::vector<int>{4}) {
        return 4;
    }
    throw DimensionError("s4_character: not a cycle type of S_4");
}

void check_code_size(int n, int k) {
    if (n < 1) {
        throw DimensionError("stabilizer code: n must be positive");
    }
    if (k <= 0 || k % 4) {
        throw InvalidDegreeError("stabilizer code: k must be a positive multiple of 4");
    }
    if (n * k > 16) {
        throw CapacityError("stabilizer code: d^k must not exceed 65536");
    }
}

int64_t to_int(const Rational &r, const char *what) {
    if (boost::multiprecision::denominator(r) != 1) {
        throw InternalError(std::string(what) + ": value is not an integer");
    }
    return boost::multiprecision::numerator(r).convert_to<int64_t>();
}

}  // namespace

std::string partition_name(Partition4 l) {
    switch (l) {
        case Partition4::P4:
            return "[4]";
        case Partition4::P1111:
            return "[1,1,1,1]";
        case Partition4::P22:
            return "[2,2]";
        case Partition4::P211:
            return "[2,1,1]";
        case Partition4::P31:
            return "[3,1]";
    }
    return "?";
}

Partition4 parse_partition(const std::string &s) {
    for (auto l : kPartitions) {
        if (partition_name(l) == s) {
            return l;
        }
    }
    throw std::invalid_argument("unknown partition " + s);
}

int specht_dim(Partition4 l) {
    return kCharTable[int(l)][0];
}

int s4_character(Partition4 l, const std::vector<int> &cycles) {
    return kCharTable[int(l)][class_index(cycles)];
}

std::vector<DimensionRow> dimension_table(int n) {
    if (n < 1 || n > 6) {
        throw CapacityError("dimension_table: 1 <= n <= 6");
    }
    BigInt d = BigInt(1) << n;
    std::vector<DimensionRow> rows;
    auto perms = all_permutations(4);
    for (auto l : kPartitions) {
        BigInt trace_sum = 0;
        BigInt pauli_sum = 0;
        for (const auto &p : perms) {
            auto c = cycle_type(p);
            int chi = s4_character(l, c);
            BigInt dc = 1;
            bool all_even = true;
            for (int len : c) {
                dc *= d;
                all_even &= (len % 2 == 0);
            }
            trace_sum += chi * dc;
            // For a != 0, tr(U_sigma W_a^{(x)4}) = prod over cycles of tr(W_a^len).
            if (all_even) {
                pauli_sum += chi * dc;
            }
        }
        Rational D = Rational(trace_sum, 24);
        Rational Dp = (D + Rational(pauli_sum * (d * d - 1), 24)) / Rational(d * d);
        DimensionRow r;
        r.lambda = l;
        r.d_lambda = specht_dim(l);
        r.D_lambda = to_int(D, "dimension_table D");
        r.D_plus = to_int(Dp, "dimension_table D+");
        r.D_minus = r.D_lambda - r.D_plus;
        rows.push_back(r);
    }
    return rows;
}

std::vector<DimensionRow> dimension_table_closed_form(int n) {
    BigInt d = BigInt(1) << n;
    auto I = [](const BigInt &num, int den) {
        if (num % den != 0) {
            throw InternalError("closed form is not an integer");
        }
        return BigInt(num / den).convert_to<int64_t>();
    };
    BigInt d2 = d * d;
    std::vector<DimensionRow> rows(5);
    rows[0] = {Partition4::P4, 1, I(d * (d + 1) * (d + 2) * (d + 3), 24), I((d + 1) * (d + 2), 6),
               I((d - 1) * (d + 1) * (d + 2) * (d + 4), 24)};
    rows[1] = {Partition4::P1111, 1, I(d * (d - 1) * (d - 2) * (d - 3), 24), I((d - 1) * (d - 2), 6),
               I((d + 1) * (d - 1) * (d - 2) * (d - 4), 24)};
    rows[2] = {Partition4::P22, 2, I(d2 * (d2 - 1), 12), I(d2 - 1, 3), I((d2 - 4) * (d2 - 1), 12)};
    int64_t d211 = I(d * (d - 2) * (d2 - 1), 8);
    int64_t d31 = I(d * (d + 2) * (d2 - 1), 8);
    rows[3] = {Partition4::P211, 3, d211, 0, d211};
    rows[4] = {Partition4::P31, 3, d31, 0, d31};
    return rows;
}

SparseMatrix stab_projector(int n, int k) {
    check_code_size(n, k);
    int64_t size = int64_t(1) << (n * k);
    uint64_t labels = 1ULL << (2 * n);
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(size * labels);
    double w = 1.0 / double(labels);
    for (uint64_t a = 0; a < labels; a++) {
        PauliMasks m = pauli_masks(a, n);
        uint64_t xr = 0;
        uint64_t zr = 0;
        for (int c = 0; c < k; c++) {
            xr |= m.x << (c * n);
            zr |= m.z << (c * n);
        }
        cplx ph = kIPow[(m.y * k) & 3] * w;
        for (int64_t i = 0; i < size; i++) {
            trip.emplace_back(int64_t(uint64_t(i) ^ xr), i, (std::popcount(zr & uint64_t(i)) & 1) ? -ph : ph);
        }
    }
    SparseMatrix p(size, size);
    p.setFromTriplets(trip.begin(), trip.end());
    p.prune([](const Eigen::Index &, const Eigen::Index &, const cplx &v) { return std::abs(v) > 1e-14; });
    return p;
}

std::vector<StateVector> stab_code_basis(int n, int k) {
    check_code_size(n, k);
    // Single-qubit patterns: even weight with u[0] = 0; bit c of the word is copy c.
    std::vector<uint64_t> patterns;
    for (uint64_t u = 0; u < (1ULL << k); u++) {
        if (!(u & 1) && std::popcount(u) % 2 == 0) {
            patterns.push_back(u);
        }
    }
    int64_t size = int64_t(1) << (n * k);
    uint64_t full = low_mask(k);
    double amp = std::pow(2.0, -0.5 * n);
    std::vector<StateVector> out;
    uint64_t count = 1;
    for (int q = 0; q < n; q++) {
        count *= patterns.size();
    }
    for (uint64_t t = 0; t < count; t++) {
        std::vector<uint64_t> pick(n);
        uint64_t rest = t;
        for (int q = n - 1; q >= 0; q--) {
            pick[q] = patterns[rest % patterns.size()];
            rest /= patterns.size();
        }
        StateVector v = StateVector::Zero(size);
        for (uint64_t s = 0; s < (1ULL << n); s++) {
            uint64_t idx = 0;
            for (int q = 0; q < n; q++) {
                uint64_t p = ((s >> q) & 1) ? (pick[q] ^ full) : pick[q];
                for (int c = 0; c < k; c++) {
                    idx |= ((p >> c) & 1) << ((k - 1 - c) * n + (n - 1 - q));
                }
            }
            v[idx] += amp;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<StateVector> vec_pauli_basis(int n) {
    if (n < 1 || n > 3) {
        throw CapacityError("vec_pauli_basis: n <= 3");
    }
    int64_t d = int64_t(1) << n;
    std::vector<StateVector> out;
    for (uint64_t a = 0; a < (1ULL << (2 * n)); a++) {
        Matrix w = pauli_matrix(PauliLabel(F2Vector(n, a)));
        StateVector v(d * d);
        for (int64_t i = 0; i < d; i++) {
            for (int64_t j = 0; j < d; j++) {
                v[i * d + j] = w(i, j);
            }
        }
        out.push_back(tensor_product(v, v));
    }
    return out;
}

Matrix young_projector(Partition4 l, int n) {
    if (n < 1 || n > 2) {
        throw CapacityError("young_projector: dense form only for n <= 2; use apply_young_projector");
    }
    int64_t size = int64_t(1) << (4 * n);
    Matrix p = Matrix::Zero(size, size);
    double w = specht_dim(l) / 24.0;
    for (const auto &sigma : all_permutations(4)) {
        int chi = s4_character(l, cycle_type(sigma));
        if (!chi) {
            continue;
        }
        p += (w * chi) * Matrix(factor_permutation_matrix(sigma, n));
    }
    return p;
}

StateVector apply_young_projector(Partition4 l, int n, const StateVector &v) {
    StateVector acc = StateVector::Zero(v.size());
    double w = specht_dim(l) / 24.0;
    for (const auto &sigma : all_permutations(4)) {
        int chi = s4_character(l, cycle_type(sigma));
        if (chi) {
            acc += (w * chi) * apply_factor_permutation(sigma, v, n);
        }
    }
    return acc;
}

double symplectic_character(const F2Matrix &F, int k) {
    if (k <= 0 || k % 4) {
        throw InvalidDegreeError("symplectic_character: k must be a positive multiple of 4");
    }
    double base = std::pow(-4.0, k / 4) / 2.0;
    return std::pow(base, fixed_space_dim(F));
}

cplx symplectic_character_numeric(const F2Matrix &F, int k) {
    int n = F.n();
    SparseMatrix p = stab_projector(n, k);
    Matrix u = lift_symplectic(F).matrix();
    uint64_t digit = low_mask(n);
    cplx acc = 0;
    for (int col = 0; col < p.outerSize(); col++) {
        for (SparseMatrix::InnerIterator it(p, col); it; ++it) {
            uint64_t i = uint64_t(it.row());
            uint64_t j = uint64_t(it.col());
            // tr(A P) = sum_{i,j} A_{j,i} P_{i,j}.
            cplx a = 1;
            for (int c = 0; c < k; c++) {
                int shift = (k - 1 - c) * n;
                a *= u((j >> shift) & digit, (i >> shift) & digit);
            }
            acc += a * it.value();
        }
    }
    return acc;
}

Rational multiplicity_sum(const std::vector<F2Matrix> &R, int k, bool verify_group) {
    if (k <= 0 || k % 4) {
        throw InvalidDegreeError("multiplicity_sum: k must be a positive multiple of 4");
    }
    if (R.empty()) {
        throw std::invalid_argument("multiplicity_sum: empty set");
    }
    if (verify_group) {
        auto key = [](const F2Matrix &F) {
            std::vector<uint64_t> r;
            for (int i = 0; i < F.size(); i++) {
                r.push_back(F.row(i));
            }
            return r;
        };
        std::set<std::vector<uint64_t>> members;
        for (const auto &F : R) {
            members.insert(key(F));
        }
        for (const auto &A : R) {
            for (const auto &B : R) {
                if (!members.count(key(A * B))) {
                    throw std::invalid_argument("multiplicity_sum: set is not closed under multiplication");
                }
            }
        }
    }
    BigInt total = 0;
    for (const auto &F : R) {
        total += BigInt(1) << (fixed_space_dim(F) * (k - 2));
    }
    return Rational(total, BigInt(R.size()));
}

const std::vector<int64_t> &sp_fixed_dim_histogram(int n) {
    switch (n) {
        case 1: {
            static const auto h = kernels::sp_fixed_dim_histogram_omp(1);
            return h;
        }
        case 2: {
            static const auto h = kernels::sp_fixed_dim_histogram_omp(2);
            return h;
        }
        case 3: {
            static const auto h = kernels::sp_fixed_dim_histogram_omp(3);
            return h;
        }
        default:
            throw CapacityError("Sp(2n) group sums need n <= 3; larger groups are out of enumeration range");
    }
}

Rational multiplicity_sum_sp(int n, int k) {
    if (k <= 0 || k % 4) {
        throw InvalidDegreeError("multiplicity_sum: k must be a positive multiple of 4");
    }
    const auto &h = sp_fixed_dim_histogram(n);
    BigInt total = 0;
    for (size_t m = 0; m < h.size(); m++) {
        total += h[m] * (BigInt(1) << (m * (k - 2)));
    }
    return Rational(total, sp_order(n));
}

Rational clifford_frame_potential(int n, int t) {
    if (t < 1) {
        throw std::invalid_argument("clifford_frame_potential: t >= 1");
    }
    const auto &h = sp_fixed_dim_histogram(n);
    BigInt total = 0;
    for (size_t m = 0; m < h.size(); m++) {
        total += h[m] * (BigInt(1) << (m * (t - 1)));
    }
    return Rational(total, sp_order(n));
}

std::vector<std::pair<IsotropicSubspace, StateVector>> isotropic_orbit_states(int n) {
    if (n < 1 || n > 2) {
        throw CapacityError("isotropic_orbit_states: n <= 2");
    }
    int64_t size = int64_t(1) << (4 * n);
    uint64_t labels = 1ULL << (2 * n);
    uint64_t digit = low_mask(n);
    std::vector<std::pair<IsotropicSubspace, StateVector>> out;
    for (auto &M : maximal_isotropic_subspaces(n)) {
        auto elems = M.elements();
        // Group elements (W_a W_b W_c) (x) (W_a W_b) (x) (W_a W_c) (x) W_a.
        std::vector<std::array<PauliLabel, 4>> group;
        for (uint64_t a = 0; a < labels; a++) {
            PauliLabel A(F2Vector(n, a));
            for (uint64_t b : elems) {
                PauliLabel B(F2Vector(n, b));
                PauliLabel AB = pauli_product(A, B);
                for (uint64_t c : elems) {
                    PauliLabel C(F2Vector(n, c));
                    group.push_back({pauli_product(AB, C), AB, pauli_product(A, C), A});
                }
            }
        }
        StateVector psi;
        for (int64_t k = 0; k < size; k++) {
            StateVector acc = StateVector::Zero(size);
            for (const auto &g : group) {
                uint64_t j = 0;
                int phase = 0;
                int sign = 0;
                for (int c = 0; c < 4; c++) {
                    int shift = (3 - c) * n;
                    uint64_t dig = (uint64_t(k) >> shift) & digit;
                    PauliMasks m = pauli_masks(g[c].a.bits, n);
                    phase += m.y + g[c].phase_exp;
                    sign += std::popcount(m.z & dig);
                    j |= (dig ^ m.x) << shift;
                }
                cplx v = kIPow[phase & 3];
                acc[j] += (sign & 1) ? -v : v;
            }
            if (acc.norm() > 1e-6) {
                psi = acc.normalized();
                break;
            }
        }
        for (int64_t i = 0; i < psi.size(); i++) {
            if (std::abs(psi[i]) > 1e-9) {
                psi *= std::conj(psi[i]) / std::abs(psi[i]);
                break;
            }
        }
        out.emplace_back(std::move(M), std::move(psi));
    }
    return out;
}

std::pair<int64_t, int64_t> string_orbit_dimensions(int n) {
    if (n < 1 || n > 6) {
        throw CapacityError("string_orbit_dimensions: n <= 6");
    }
    // Letters index the single-qubit code basis; bit c of a pattern is copy c.
    const uint64_t pattern[4] = {0b0000, 0b1001, 0b1010, 0b1100};
    auto perms = all_permutations(4);
    std::vector<std::array<int, 4>> letter_map;
    std::vector<int> signs;
    for (const auto &sigma : perms) {
        std::array<int, 4> m{};
        for (int l = 0; l < 4; l++) {
            uint64_t moved = 0;
            for (int p = 0; p < 4; p++) {
                moved |= ((pattern[l] >> sigma[p]) & 1) << p;
            }
            int found = -1;
            for (int l2 = 0; l2 < 4; l2++) {
                if (moved == pattern[l2] || (moved ^ 0b1111) == pattern[l2]) {
                    found = l2;
                }
            }
            if (found < 0) {
                throw InternalError("string_orbit_dimensions: permuted pattern left the code basis");
            }
            m[l] = found;
        }
        letter_map.push_back(m);
        signs.push_back(perm_sign(sigma));
    }
    uint64_t count = 1ULL << (2 * n);
    auto act = [&](size_t s, uint64_t str) {
        uint64_t out = 0;
        for (int q = 0; q < n; q++) {
            out |= uint64_t(letter_map[s][(str >> (2 * q)) & 3]) << (2 * q);
        }
        return out;
    };
    int64_t orbits = 0;
    int64_t alternating = 0;
    for (uint64_t str = 0; str < count; str++) {
        bool is_min = true;
        bool odd_stabilizer = false;
        for (size_t s = 0; s < perms.size(); s++) {
            uint64_t img = act(s, str);
            if (img < str) {
                is_min = false;
                break;
            }
            if (img == str && signs[s] < 0) {
                odd_stabilizer = true;
            }
        }
        if (!is_min) {
            continue;
        }
        orbits++;
        if (!odd_stabilizer) {
            alternating++;
        }
    }
    return {orbits, alternating};
}

}  // namespace cliff4
