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


#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cliff4/f2lin.hpp"

namespace cliff4 {
namespace {

// F J F^T == J with J written as an explicit 0/1 matrix.
bool symplectic_by_definition(const F2Matrix &F) {
    int m = F.size();
    std::vector<std::vector<int>> J(m, std::vector<int>(m, 0));
    for (int q = 0; q < m / 2; q++) {
        J[2 * q][2 * q + 1] = J[2 * q + 1][2 * q] = 1;
    }
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            int s = 0;
            for (int k = 0; k < m; k++) {
                for (int l = 0; l < m; l++) {
                    s += F.get(i, k) * J[k][l] * F.get(j, l);
                }
            }
            if (s % 2 != J[i][j]) {
                return false;
            }
        }
    }
    return true;
}

std::set<std::string> all_symplectic_by_filter(int n) {
    std::set<std::string> out;
    int m = 2 * n;
    for (uint64_t code = 0; code < (uint64_t(1) << (m * m)); code++) {
        F2Matrix F(n);
        for (int i = 0; i < m; i++) {
            F.set_row(i, (code >> (m * i)) & low_mask(m));
        }
        if (symplectic_by_definition(F)) {
            out.insert(F.to_hex_rows());
        }
    }
    return out;
}

TEST(F2Lin, SymplecticFormExamples) {
    EXPECT_EQ(symplectic_form(F2Vector(1, 0b00), F2Vector(1, 0b11)), 0);
    EXPECT_EQ(symplectic_form(F2Vector(1, 0b01), F2Vector(1, 0b10)), 1);
    for (uint64_t a = 0; a < 16; a++) {
        EXPECT_EQ(symplectic_form(F2Vector(2, a), F2Vector(2, a)), 0);
    }
    EXPECT_THROW(symplectic_form(F2Vector(1, 1), F2Vector(2, 1)), DimensionError);
}

TEST(F2Lin, IsSymplecticExamples) {
    EXPECT_TRUE(is_symplectic(F2Matrix::identity(3)));
    F2Matrix t(1);
    t.set_row(0, 0b11);
    t.set_row(1, 0b10);
    EXPECT_TRUE(is_symplectic(t));
    F2Matrix s(1);
    s.set_row(0, 0b11);
    s.set_row(1, 0b11);
    EXPECT_FALSE(is_symplectic(s));
}

TEST(F2Lin, EnumerationMatchesBruteForceFilter) {
    for (int n = 1; n <= 2; n++) {
        auto oracle = all_symplectic_by_filter(n);
        auto list = enumerate_sp(n);
        std::set<std::string> got;
        for (const auto &F : list) {
            got.insert(F.to_hex_rows());
        }
        EXPECT_EQ(got.size(), list.size()) << "duplicates at n=" << n;
        EXPECT_EQ(got, oracle);
    }
    EXPECT_EQ(all_symplectic_by_filter(1).size(), 6u);
    EXPECT_EQ(all_symplectic_by_filter(2).size(), 720u);
}

TEST(F2Lin, StreamedEnumerationAtThreeQubits) {
    SpEnumerator en(3);
    int64_t count = 0;
    int64_t bad = 0;
    en.for_each([&](const F2Matrix &F) {
        count++;
        if (count % 9973 == 0 && !is_symplectic(F)) {
            bad++;
        }
    });
    EXPECT_EQ(count, 1451520);
    EXPECT_EQ(BigInt(count), sp_order(3));
    EXPECT_EQ(bad, 0);
    EXPECT_THROW(enumerate_sp(3), CapacityError);
    EXPECT_THROW(SpEnumerator(4), CapacityError);
}

TEST(F2Lin, OrderFormula) {
    EXPECT_EQ(sp_order(1), 6);
    EXPECT_EQ(sp_order(2), 720);
    EXPECT_EQ(sp_order(3), 1451520);
    EXPECT_EQ(sp_order(4), BigInt("47377612800"));
}

TEST(F2Lin, FixedSpaceDims) {
    EXPECT_EQ(fixed_space_dim(F2Matrix::identity(4)), 8);
    std::multiset<int> dims;
    for (const auto &F : enumerate_sp(1)) {
        dims.insert(fixed_space_dim(F));
        if (f2_order(F) == 3) {
            EXPECT_EQ(fixed_space_dim(F), 0);
        }
    }
    EXPECT_EQ(dims, (std::multiset<int>{2, 1, 1, 1, 0, 0}));
}

TEST(F2Lin, FixedSpaceDimAgreesWithPointCount) {
    for (const auto &F : enumerate_sp(2)) {
        int fixed = 0;
        for (uint64_t v = 0; v < 16; v++) {
            fixed += F.apply(v) == v;
        }
        ASSERT_EQ(fixed, 1 << fixed_space_dim(F));
    }
}

TEST(F2Lin, RandomSymplecticIsUniform) {
    auto group = enumerate_sp(1);
    std::map<std::string, int> index;
    for (size_t i = 0; i < group.size(); i++) {
        index[group[i].to_hex_rows()] = int(i);
    }
    Rng rng(2024);
    std::vector<int> counts(6, 0);
    const int draws = 60000;
    for (int i = 0; i < draws; i++) {
        counts[index.at(random_symplectic(1, rng).to_hex_rows())]++;
    }
    double chi2 = 0;
    for (int c : counts) {
        chi2 += (c - draws / 6.0) * (c - draws / 6.0) / (draws / 6.0);
    }
    // 0.999 quantile of chi-square with 5 degrees of freedom.
    EXPECT_LT(chi2, 20.515);
}

TEST(F2Lin, RandomSymplecticReplaysAndPreservesForm) {
    for (int n = 1; n <= 8; n++) {
        Rng a(n);
        Rng b(n);
        F2Matrix F = random_symplectic(n, a);
        EXPECT_EQ(F, random_symplectic(n, b));
        EXPECT_TRUE(is_symplectic(F));
        Rng r(100 + n);
        std::uniform_int_distribution<uint64_t> u(0, low_mask(2 * n));
        for (int i = 0; i < 200; i++) {
            uint64_t x = u(r);
            uint64_t y = u(r);
            ASSERT_EQ(symplectic_form_bits(F.apply(x), F.apply(y)), symplectic_form_bits(x, y));
            ASSERT_EQ(F.apply(x ^ y), F.apply(x) ^ F.apply(y));
        }
    }
}

TEST(F2Lin, MaximalIsotropicCounts) {
    const size_t expected[] = {3, 15, 135, 2295};
    for (int n = 1; n <= 4; n++) {
        auto subs = maximal_isotropic_subspaces(n);
        EXPECT_EQ(subs.size(), expected[n - 1]);
        std::set<std::vector<uint64_t>> keys;
        for (const auto &M : subs) {
            EXPECT_EQ(M.dim(), n);
            EXPECT_TRUE(M.is_isotropic());
            EXPECT_EQ(f2_rank(M.basis_bits()), n);
            keys.insert(M.basis_bits());
        }
        EXPECT_EQ(keys.size(), subs.size());
    }
    EXPECT_THROW(maximal_isotropic_subspaces(5), CapacityError);
}

TEST(F2Lin, RankAgreesWithSpanSize) {
    Rng rng(5);
    std::uniform_int_distribution<uint64_t> u(0, 255);
    for (int trial = 0; trial < 200; trial++) {
        std::vector<uint64_t> v(1 + trial % 6);
        for (auto &x : v) {
            x = u(rng);
        }
        std::set<uint64_t> span;
        for (uint64_t mask = 0; mask < (uint64_t(1) << v.size()); mask++) {
            uint64_t s = 0;
            for (size_t i = 0; i < v.size(); i++) {
                if (mask >> i & 1) {
                    s ^= v[i];
                }
            }
            span.insert(s);
        }
        EXPECT_EQ(size_t(1) << f2_rank(v), span.size());
        EXPECT_EQ(int(rref(v).size()), f2_rank(v));
    }
}

TEST(F2Lin, SymplecticBasisIsHyperbolic) {
    std::vector<uint64_t> span = {0b0011, 0b0110, 0b1100, 0b1000};
    auto b = symplectic_basis(span);
    ASSERT_EQ(b.size(), 4u);
    for (size_t i = 0; i < b.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            int want = (i / 2 == j / 2 && i != j) ? 1 : 0;
            EXPECT_EQ(symplectic_form_bits(b[i], b[j]), want);
        }
    }
}

TEST(F2Lin, IsotropicSubspaceHelpers) {
    IsotropicSubspace z = z_subspace(2);
    EXPECT_EQ(z.elements().size(), 4u);
    EXPECT_TRUE(z.contains(0b0101));
    EXPECT_FALSE(z.contains(0b0010));
    EXPECT_EQ(intersection_dim(z, z), 2);
}

TEST(F2Lin, HexRowsRoundTripAndGolden) {
    Rng rng(11);
    for (int n = 1; n <= 8; n++) {
        F2Matrix F = random_symplectic(n, rng);
        EXPECT_EQ(F2Matrix::from_hex_rows(F.to_hex_rows(), n), F);
    }
    // Row word bit j is column j: the transvection x -> x + <x,e_0> e_0.
    F2Matrix t = F2Matrix::from_hex_rows("3\n2\n", 1);
    EXPECT_TRUE(t.get(0, 0));
    EXPECT_TRUE(t.get(0, 1));
    EXPECT_FALSE(t.get(1, 0));
    EXPECT_TRUE(is_symplectic(t));
    EXPECT_THROW(F2Matrix::from_hex_rows("3\nzz\n", 1), DimensionError);
}

TEST(F2Lin, GoldenSymplecticFile) {
    // Action of CNOT with control 0 and target 1: X0 -> X0 X1, Z1 -> Z0 Z1.
    std::ifstream in(CLIFF4_TEST_DATA "/cnot01.hex");
    ASSERT_TRUE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    F2Matrix F = F2Matrix::from_hex_rows(ss.str(), 2);
    EXPECT_TRUE(is_symplectic(F));
    EXPECT_EQ(F.apply(0b0010), 0b1010u);
    EXPECT_EQ(F.apply(0b0100), 0b0101u);
    EXPECT_EQ(F.apply(0b0001), 0b0001u);
    EXPECT_EQ(F.apply(0b1000), 0b1000u);
    EXPECT_EQ(F.to_hex_rows(), ss.str());
}

}  // namespace
}  // namespace cliff4
