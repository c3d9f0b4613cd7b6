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

#include "cliff4/tensor_ops.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cliff4/pauli.hpp"

namespace cliff4 {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int factor_count(int64_t size, int n) {
    int bits = std::countr_zero(uint64_t(size));
    if (size <= 0 || !std::has_single_bit(uint64_t(size)) || bits % n) {
        throw DimensionError("tensor vector length is not a power of 2^n");
    }
    return bits / n;
}

uint64_t replicate(uint64_t mask, int n, int k) {
    uint64_t out = 0;
    for (int c = 0; c < k; c++) {
        out |= mask << (c * n);
    }
    return out;
}

}  // namespace

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    StateVector out(a.size() * b.size());
    for (int64_t i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int64_t i = 0; i < a.rows(); i++) {
        for (int64_t j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::vector<Permutation> all_permutations(int k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> cycle_type(const Permutation &p) {
    std::vector<int> out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); i++) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            len++;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int perm_sign(const Permutation &p) {
    int s = 1;
    for (int len : cycle_type(p)) {
        if (len % 2 == 0) {
            s = -s;
        }
    }
    return s;
}

StateVector apply_factor_permutation(const Permutation &sigma, const StateVector &v, int n) {
    int k = factor_count(v.size(), n);
    if ((int)sigma.size() != k) {
        throw DimensionError("apply_factor_permutation: permutation size differs from factor count");
    }
    uint64_t digit = low_mask(n);
    StateVector out(v.size());
    for (int64_t i = 0; i < v.size(); i++) {
        uint64_t j = 0;
        for (int p = 0; p < k; p++) {
            uint64_t dig = (uint64_t(i) >> ((k - 1 - sigma[p]) * n)) & digit;
            j |= dig << ((k - 1 - p) * n);
        }
        out[j] = v[i];
    }
    return out;
}

SparseMatrix factor_permutation_matrix(const Permutation &sigma, int n) {
    int k = (int)sigma.size();
    int64_t size = int64_t(1) << (n * k);
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(size);
    StateVector idx(size);
    for (int64_t i = 0; i < size; i++) {
        idx[i] = double(i);
    }
    StateVector moved = apply_factor_permutation(sigma, idx, n);
    for (int64_t j = 0; j < size; j++) {
        trip.emplace_back(j, (int64_t)std::llround(moved[j].real()), 1.0);
    }
    SparseMatrix m(size, size);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

StateVector apply_tensor_power(const Matrix &u, const StateVector &v, int k) {
    int64_t d = u.rows();
    int n = std::countr_zero(uint64_t(d));
    if (factor_count(v.size(), n) != k) {
        throw DimensionError("apply_tensor_power: vector length is not d^k");
    }
    StateVector cur = v;
    StateVector next(v.size());
    int64_t stride = v.size();
    for (int c = 0; c < k; c++) {
        stride /= d;
        int64_t block = stride * d;
        for (int64_t base = 0; base < v.size(); base += block) {
            for (int64_t s = 0; s < stride; s++) {
                for (int64_t r = 0; r < d; r++) {
                    cplx acc = 0;
                    for (int64_t q = 0; q < d; q++) {
                        acc += u(r, q) * cur[base + q * stride + s];
                    }
                    next[base + r * stride + s] = acc;
                }
            }
        }
        cur.swap(next);
    }
    return cur;
}

StateVector apply_pauli_power(uint64_t a, int n, const StateVector &v, int k) {
    if (factor_count(v.size(), n) != k) {
        throw DimensionError("apply_pauli_power: vector length is not d^k");
    }
    PauliMasks m = pauli_masks(a, n);
    uint64_t xr = replicate(m.x, n, k);
    uint64_t zr = replicate(m.z, n, k);
    cplx ph = kIPow[(m.y * k) & 3];
    StateVector out(v.size());
    for (int64_t i = 0; i < v.size(); i++) {
        cplx val = ph * v[i];
        out[uint64_t(i) ^ xr] = (std::popcount(zr & uint64_t(i)) & 1) ? -val : val;
    }
    return out;
}

StateVector apply_stab_projector(int n, int k, const StateVector &v) {
    StateVector acc = StateVector::Zero(v.size());
    uint64_t labels = 1ULL << (2 * n);
    for (uint64_t a = 0; a < labels; a++) {
        acc += apply_pauli_power(a, n, v, k);
    }
    return acc / double(labels);
}

}  // namespace cliff4
