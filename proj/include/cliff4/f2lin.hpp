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
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliff4/common.hpp"

namespace cliff4 {

/// Vectors in F_2^{2n} are packed into one word. Bit 2q is the z component of
/// qubit q and bit 2q+1 its x component, so the pairing blocks of J sit on
/// adjacent bits.
constexpr int kMaxVectorQubits = 32;
constexpr uint64_t kEvenBits = 0x5555555555555555ULL;

inline uint64_t low_mask(int bits) {
    return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
}

/// Swaps the z and x bit of every qubit, i.e. multiplies by J.
inline uint64_t apply_j(uint64_t b) {
    return ((b & kEvenBits) << 1) | ((b >> 1) & kEvenBits);
}

inline int symplectic_form_bits(uint64_t a, uint64_t b) {
    return std::popcount(a & apply_j(b)) & 1;
}

struct F2Vector {
    uint64_t bits = 0;
    int n = 0;

    F2Vector() = default;
    F2Vector(int n, uint64_t bits);

    int length() const {
        return 2 * n;
    }
    bool get(int i) const {
        return (bits >> i) & 1;
    }
    void set(int i, bool v);
    int weight() const {
        return std::popcount(bits);
    }
    bool is_zero() const {
        return bits == 0;
    }

    F2Vector operator^(const F2Vector &other) const;
    F2Vector &operator^=(const F2Vector &other);
    bool operator==(const F2Vector &other) const = default;
};

/// <a, b> = a^T J b over F_2. Throws DimensionError on length mismatch.
int symplectic_form(const F2Vector &a, const F2Vector &b);

/// Square 2n x 2n binary matrix stored as packed rows (row i, bit j = F_ij).
class F2Matrix {
   public:
    static constexpr int kMaxQubits = 8;
    static constexpr int kMaxRows = 2 * kMaxQubits;

    F2Matrix() = default;
    explicit F2Matrix(int n);
    static F2Matrix identity(int n);
    /// Matrix whose j-th column is cols[j].
    static F2Matrix from_columns(int n, const std::vector<uint64_t> &cols);

    int n() const {
        return n_;
    }
    int size() const {
        return 2 * n_;
    }
    uint64_t row(int i) const {
        return rows_[i];
    }
    void set_row(int i, uint64_t r) {
        rows_[i] = r & low_mask(2 * n_);
    }
    bool get(int i, int j) const {
        return (rows_[i] >> j) & 1;
    }
    void set(int i, int j, bool v);
    uint64_t col(int j) const;
    void set_col(int j, uint64_t c);

    uint64_t apply(uint64_t v) const {
        uint64_t out = 0;
        for (int i = 0; i < 2 * n_; i++) {
            out |= uint64_t(std::popcount(rows_[i] & v) & 1) << i;
        }
        return out;
    }
    F2Vector operator*(const F2Vector &v) const;
    F2Matrix operator*(const F2Matrix &other) const;
    F2Matrix transpose() const;
    bool is_identity() const;
    bool operator==(const F2Matrix &other) const;

    /// One row per line, as hex of the packed row word (bit j = column j).
    std::string to_hex_rows() const;
    static F2Matrix from_hex_rows(std::string_view text, int n);

   private:
    int n_ = 0;
    std::array<uint64_t, kMaxRows> rows_{};
};

/// True iff F J F^T = J.
bool is_symplectic(const F2Matrix &F);

/// dim ker(F - 1). The fixed-point count is 2^result.
int fixed_space_dim(const F2Matrix &F);

/// Rank over F_2 of the given packed vectors.
int f2_rank(std::vector<uint64_t> vecs);

/// Multiplicative order of an invertible matrix (1 for the identity).
int f2_order(const F2Matrix &F, int limit = 1 << 20);

/// |Sp(2n, F_2)| = 2^{n^2} prod_{i=1}^{n} (4^i - 1).
BigInt sp_order(int n);

/// Constructive enumeration of Sp(2n, F_2) for n <= 3.
///
/// The element with columns (v_1, w_1, ..., v_n, w_n) is reached by choosing the
/// image of each hyperbolic pair (e_q, f_q) among the vectors orthogonal to the
/// earlier images. The first pair choice splits the stream into branches that
/// can be walked independently.
class SpEnumerator {
   public:
    static constexpr int kMaxQubits = 3;

    explicit SpEnumerator(int n);

    int n() const {
        return n_;
    }
    size_t branch_count() const {
        return top_pairs_.size();
    }

    template <typename Fn>
    void for_each_in_branch(size_t branch, Fn &&fn) const {
        std::array<uint64_t, 2 * kMaxQubits> cols{};
        cols[0] = top_pairs_[branch].first;
        cols[1] = top_pairs_[branch].second;
        std::array<uint64_t, 64> cand{};
        int m = 0;
        for (uint64_t c = 0; c < (1ULL << (2 * n_)); c++) {
            if (!symplectic_form_bits(c, cols[0]) && !symplectic_form_bits(c, cols[1])) {
                cand[m++] = c;
            }
        }
        recurse(1, cols, cand, m, fn);
    }

    template <typename Fn>
    void for_each(Fn &&fn) const {
        for (size_t b = 0; b < branch_count(); b++) {
            for_each_in_branch(b, fn);
        }
    }

   private:
    template <typename Fn>
    void recurse(int q, std::array<uint64_t, 2 * kMaxQubits> &cols, const std::array<uint64_t, 64> &cand, int m,
                 Fn &fn) const {
        if (q == n_) {
            F2Matrix F(n_);
            for (int j = 0; j < 2 * n_; j++) {
                F.set_col(j, cols[j]);
            }
            fn(F);
            return;
        }
        for (int i = 0; i < m; i++) {
            uint64_t v = cand[i];
            if (v == 0) {
                continue;
            }
            for (int j = 0; j < m; j++) {
                uint64_t w = cand[j];
                if (!symplectic_form_bits(v, w)) {
                    continue;
                }
                cols[2 * q] = v;
                cols[2 * q + 1] = w;
                std::array<uint64_t, 64> next{};
                int k = 0;
                for (int r = 0; r < m; r++) {
                    uint64_t c = cand[r];
                    if (!symplectic_form_bits(c, v) && !symplectic_form_bits(c, w)) {
                        next[k++] = c;
                    }
                }
                recurse(q + 1, cols, next, k, fn);
            }
        }
    }

    int n_;
    std::vector<std::pair<uint64_t, uint64_t>> top_pairs_;
};

/// Materialized enumeration (n <= 2 only; n = 3 must be streamed).
std::vector<F2Matrix> enumerate_sp(int n);

/// Exactly uniform element of Sp(2n, F_2).
F2Matrix random_symplectic(int n, Rng &rng);

/// Symplectic Gram-Schmidt: returns hyperbolic pairs (e_1, f_1, ...) spanning
/// the same space as the input, whose form restricted to the span must be
/// nondegenerate.
std::vector<uint64_t> symplectic_basis(std::vector<uint64_t> span);

/// Reduced row echelon basis, pivots descending. Zero vectors dropped.
std::vector<uint64_t> rref(std::vector<uint64_t> vecs);

struct IsotropicSubspace {
    int n = 0;
    std::vector<F2Vector> basis;

    int dim() const {
        return int(basis.size());
    }
    std::vector<uint64_t> basis_bits() const;
    /// All 2^dim elements.
    std::vector<uint64_t> elements() const;
    bool contains(uint64_t v) const;
    bool is_isotropic() const;
};

/// Span of the z components of every qubit.
IsotropicSubspace z_subspace(int n);

int intersection_dim(const IsotropicSubspace &a, const IsotropicSubspace &b);

/// Every maximal isotropic subspace of F_2^{2n}, n <= 4, in canonical form.
std::vector<IsotropicSubspace> maximal_isotropic_subspaces(int n);

}  // namespace cliff4
