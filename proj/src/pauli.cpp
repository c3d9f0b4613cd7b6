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

#include "cliff4/pauli.hpp"

#include <cmath>
#include <sstream>

#include "cliff4/kernels.hpp"

namespace cliff4 {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline int y_count(uint64_t a) {
    return std::popcount(a & (a >> 1) & kEvenBits);
}

void check_state_dim(const StateVector &psi, int n) {
    if (psi.size() != (Eigen::Index)(1ULL << n)) {
        throw DimensionError("state dimension does not match 2^n");
    }
}

}  // namespace

PauliMasks pauli_masks(uint64_t a, int n) {
    PauliMasks m;
    for (int q = 0; q < n; q++) {
        int bit = n - 1 - q;
        m.z |= ((a >> (2 * q)) & 1) << bit;
        m.x |= ((a >> (2 * q + 1)) & 1) << bit;
    }
    m.y = std::popcount(m.x & m.z);
    return m;
}

uint64_t label_from_masks(uint64_t x, uint64_t z, int n) {
    uint64_t a = 0;
    for (int q = 0; q < n; q++) {
        int bit = n - 1 - q;
        a |= ((z >> bit) & 1) << (2 * q);
        a |= ((x >> bit) & 1) << (2 * q + 1);
    }
    return a;
}

Matrix pauli_matrix(const PauliLabel &p) {
    int n = p.n();
    int64_t d = int64_t(1) << n;
    PauliMasks m = pauli_masks(p.a.bits, n);
    Matrix out = Matrix::Zero(d, d);
    cplx ph = kIPow[(m.y + p.phase_exp) & 3];
    for (int64_t k = 0; k < d; k++) {
        out(k ^ m.x, k) = (std::popcount(m.z & uint64_t(k)) & 1) ? -ph : ph;
    }
    return out;
}

PauliLabel pauli_product(const PauliLabel &p, const PauliLabel &q) {
    if (p.n() != q.n()) {
        throw DimensionError("pauli_product: qubit count mismatch");
    }
    uint64_t a = p.a.bits;
    uint64_t b = q.a.bits;
    uint64_t c = a ^ b;
    // W_a = i^{y(a)} X^x Z^z, and moving Z^{z_a} past X^{x_b} costs (-1)^{|z_a & x_b|}.
    int cross = std::popcount(a & (b >> 1) & kEvenBits);
    int phase = p.phase_exp + q.phase_exp + y_count(a) + y_count(b) + 2 * cross - y_count(c);
    return PauliLabel(F2Vector(p.n(), c), phase);
}

PauliLabel pauli_inverse(const PauliLabel &p) {
    return PauliLabel(p.a, -p.phase_exp);
}

void apply_pauli_bits(uint64_t a, int n, const StateVector &psi, StateVector &out) {
    PauliMasks m = pauli_masks(a, n);
    int64_t d = psi.size();
    out.resize(d);
    cplx ph = kIPow[m.y & 3];
    for (int64_t k = 0; k < d; k++) {
        cplx v = ph * psi[k];
        out[k ^ m.x] = (std::popcount(m.z & uint64_t(k)) & 1) ? -v : v;
    }
}

StateVector apply_pauli(const PauliLabel &p, const StateVector &psi) {
    check_state_dim(psi, p.n());
    StateVector out;
    apply_pauli_bits(p.a.bits, p.n(), psi, out);
    if (p.phase_exp) {
        out *= kIPow[p.phase_exp];
    }
    return out;
}

CharacteristicFunction characteristic_function(const StateVector &psi) {
    require_normalized(psi);
    auto raw = kernels::characteristic_omp(psi);
    CharacteristicFunction xi;
    xi.n = qubits_of(psi);
    xi.values.resize(raw.size());
    for (size_t a = 0; a < raw.size(); a++) {
        if (std::abs(raw[a].imag()) > 1e-12) {
            throw InternalError("characteristic_function: expectation of a Hermitian operator is not real");
        }
        xi.values[a] = raw[a].real();
    }
    return xi;
}

double ell4_norm4(const CharacteristicFunction &xi) {
    double s = 0;
    for (double v : xi.values) {
        double v2 = v * v;
        s += v2 * v2;
    }
    return s;
}

double ell4_norm4(const StateVector &psi) {
    return ell4_norm4(characteristic_function(psi));
}

std::string CharacteristicFunction::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "label,value\n";
    for (size_t a = 0; a < values.size(); a++) {
        for (int i = 0; i < 2 * n; i++) {
            out << ((a >> i) & 1);
        }
        out << "," << values[a] << "\n";
    }
    return out.str();
}

}  // namespace cliff4
