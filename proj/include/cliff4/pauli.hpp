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
#include <vector>

#include "cliff4/common.hpp"
#include "cliff4/f2lin.hpp"

namespace cliff4 {

/// i^phase_exp * W_a. W_a is the Kronecker product over qubits 0..n-1 (qubit 0
/// leftmost, i.e. the most significant bit of a basis index) of
/// sigma_(z,x): I, X = sigma_(0,1), Z = sigma_(1,0), Y = sigma_(1,1).
struct PauliLabel {
    F2Vector a;
    int phase_exp = 0;

    PauliLabel() = default;
    PauliLabel(F2Vector a, int phase_exp = 0) : a(a), phase_exp(((phase_exp % 4) + 4) % 4) {
    }
    static PauliLabel identity(int n) {
        return PauliLabel(F2Vector(n, 0));
    }
    int n() const {
        return a.n;
    }
    bool operator==(const PauliLabel &other) const = default;
};

/// Masks acting on basis indices: W_a |k> = i^y (-1)^{|z & k|} |k ^ x>.
struct PauliMasks {
    uint64_t x = 0;
    uint64_t z = 0;
    int y = 0;
};
PauliMasks pauli_masks(uint64_t a, int n);
/// Inverse of pauli_masks.
uint64_t label_from_masks(uint64_t x, uint64_t z, int n);

Matrix pauli_matrix(const PauliLabel &p);
PauliLabel pauli_product(const PauliLabel &p, const PauliLabel &q);
PauliLabel pauli_inverse(const PauliLabel &p);

StateVector apply_pauli(const PauliLabel &p, const StateVector &psi);
/// Applies W_a (no extra phase) in place into out.
void apply_pauli_bits(uint64_t a, int n, const StateVector &psi, StateVector &out);

/// Xi_a(psi) = <psi| W_a |psi>, indexed by the label word a.
struct CharacteristicFunction {
    int n = 0;
    std::vector<double> values;

    double operator[](uint64_t a) const {
        return values[a];
    }
    std::string to_csv() const;
};

/// Parallel transform-based evaluation. Requires ||psi|| = 1 within 1e-10.
CharacteristicFunction characteristic_function(const StateVector &psi);
double ell4_norm4(const CharacteristicFunction &xi);
double ell4_norm4(const StateVector &psi);

}  // namespace cliff4
