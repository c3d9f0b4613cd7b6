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

#include <random>

#include "cliff4/common.hpp"

namespace cliff4::testing {

inline StateVector random_state(int64_t d, Rng &rng) {
    std::normal_distribution<double> g;
    StateVector v(d);
    for (int64_t k = 0; k < d; k++) {
        double re = g(rng);
        double im = g(rng);
        v[k] = cplx(re, im);
    }
    return v / v.norm();
}

inline StateVector basis_state(int64_t d, int64_t k) {
    StateVector v = StateVector::Zero(d);
    v[k] = 1;
    return v;
}

// Single-qubit Paulis written out by hand, indexed by (z, x).
inline Matrix single_pauli(int z, int x) {
    Matrix m(2, 2);
    if (z == 0 && x == 0) {
        m << 1, 0, 0, 1;
    } else if (z == 0 && x == 1) {
        m << 0, 1, 1, 0;
    } else if (z == 1 && x == 0) {
        m << 1, 0, 0, -1;
    } else {
        m << 0, cplx(0, -1), cplx(0, 1), 0;
    }
    return m;
}

// W_a as an explicit Kronecker product, qubit 0 leftmost.
inline Matrix kron_pauli(uint64_t a, int n) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < n; q++) {
        Matrix p = single_pauli(int((a >> (2 * q)) & 1), int((a >> (2 * q + 1)) & 1));
        Matrix next(out.rows() * 2, out.cols() * 2);
        for (int64_t i = 0; i < out.rows(); i++) {
            for (int64_t j = 0; j < out.cols(); j++) {
                next.block(2 * i, 2 * j, 2, 2) = out(i, j) * p;
            }
        }
        out = next;
    }
    return out;
}

}  // namespace cliff4::testing
