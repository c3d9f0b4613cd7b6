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
#include <string>
#include <utility>
#include <vector>

#include "cliff4/common.hpp"
#include "cliff4/f2lin.hpp"
#include "cliff4/tensor_ops.hpp"

namespace cliff4 {

/// Irreducible representations of S_4, in the order [4], [1,1,1,1], [2,2],
/// [2,1,1], [3,1].
enum class Partition4 { P4, P1111, P22, P211, P31 };
constexpr std::array<Partition4, 5> kPartitions = {Partition4::P4, Partition4::P1111, Partition4::P22,
                                                   Partition4::P211, Partition4::P31};

std::string partition_name(Partition4 l);
Partition4 parse_partition(const std::string &s);
int specht_dim(Partition4 l);
/// Character value on the class of the given cycle type (lengths descending).
int s4_character(Partition4 l, const std::vector<int> &cycles);

struct DimensionRow {
    Partition4 lambda;
    int64_t d_lambda = 0;
    int64_t D_lambda = 0;
    int64_t D_plus = 0;
    int64_t D_minus = 0;
    bool operator==(const DimensionRow &) const = default;
};

/// Rows computed from S_4 characters and the traces tr(U_sigma W_a^{(x)4}), n <= 6.
std::vector<DimensionRow> dimension_table(int n);
/// The closed-form polynomials in d.
std::vector<DimensionRow> dimension_table_closed_form(int n);

/// P_{n,k} = (1/d^2) sum_a W_a^{(x)k}, sparse, for d^k <= 65536 and 4 | k.
SparseMatrix stab_projector(int n, int k);
/// Orthonormal basis of range(P_{n,k}) built from (|u> + |~u>)/sqrt(2) per qubit.
std::vector<StateVector> stab_code_basis(int n, int k);
/// vec(W_a) (x) vec(W_a) for every label a, n <= 3.
std::vector<StateVector> vec_pauli_basis(int n);
/// (d_lambda / 24) sum_sigma chi(sigma) U_sigma, dense, n <= 2.
Matrix young_projector(Partition4 l, int n);
/// P_lambda v without forming the matrix.
StateVector apply_young_projector(Partition4 l, int n, const StateVector &v);

/// [(-4)^{k/4} / 2]^{dim ker(F - 1)}.
double symplectic_character(const F2Matrix &F, int k);
/// tr(U_F^{(x)k} P_{n,k}) evaluated entrywise on the sparse projector.
cplx symplectic_character_numeric(const F2Matrix &F, int k);

/// (1/|R|) sum_{F in R} f(F)^{k-2}. With verify_group set, throws
/// std::invalid_argument unless R is closed under multiplication.
Rational multiplicity_sum(const std::vector<F2Matrix> &R, int k, bool verify_group = false);
/// Same sum over all of Sp(2n, F_2), n <= 3.
Rational multiplicity_sum_sp(int n, int k);
/// Phi_t(C_n) = (1/|Sp|) sum_F f(F)^{t-1}, n <= 3.
Rational clifford_frame_potential(int n, int t);

/// Cached histogram of dim ker(F - 1) over Sp(2n, F_2), n <= 3.
const std::vector<int64_t> &sp_fixed_dim_histogram(int n);

/// One 4n-qubit state per maximal isotropic subspace, n <= 2.
std::vector<std::pair<IsotropicSubspace, StateVector>> isotropic_orbit_states(int n);

/// (D+_[4], D+_[1,1,1,1]) by counting S_4 orbits on strings in {0,1,2,3}^n, n <= 6.
std::pair<int64_t, int64_t> string_orbit_dimensions(int n);

}  // namespace cliff4
