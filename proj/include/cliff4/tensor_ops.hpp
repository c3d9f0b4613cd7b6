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

// Matrix-free operators on (C^d)^{\otimes k}, d = 2^n. A basis index is the
// concatenation of the k factor indices with factor 0 most significant.
#pragma once

#include <vector>

#include <Eigen/Sparse>

#include "cliff4/common.hpp"

namespace cliff4 {

using SparseMatrix = Eigen::SparseMatrix<cplx>;
using Permutation = std::vector<int>;

StateVector tensor_product(const StateVector &a, const StateVector &b);
Matrix kron(const Matrix &a, const Matrix &b);

/// All permutations of {0..k-1} in lexicographic order.
std::vector<Permutation> all_permutations(int k);
/// Cycle lengths, sorted descending.
std::vector<int> cycle_type(const Permutation &p);
int perm_sign(const Permutation &p);

/// U_sigma (v_0 (x) ... (x) v_{k-1}) = v_{sigma(0)} (x) ... (x) v_{sigma(k-1)}.
StateVector apply_factor_permutation(const Permutation &sigma, const StateVector &v, int n);
/// Permutation matrix of U_sigma on k factors of dimension 2^n.
SparseMatrix factor_permutation_matrix(const Permutation &sigma, int n);

/// u^{(x)k} v.
StateVector apply_tensor_power(const Matrix &u, const StateVector &v, int k);
/// W_a^{(x)k} v.
StateVector apply_pauli_power(uint64_t a, int n, const StateVector &v, int k);
/// P_{n,k} v = (1/d^2) sum_a W_a^{(x)k} v.
StateVector apply_stab_projector(int n, int k, const StateVector &v);

}  // namespace cliff4
