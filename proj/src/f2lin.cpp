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

#include "cliff4/f2lin.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace cliff4 {

F2Vector::F2Vector(int n, uint64_t bits) : bits(bits), n(n) {
    if (n < 0 || n > kMaxVectorQubits) {
        throw DimensionError("F2Vector: qubit count out of range");
    }
    if (bits & ~low_mask(2 * n)) {
        throw DimensionError("F2Vector: bits beyond length 2n");
    }
}

void F2Vector::set(int i, bool v) {
    if (i < 0 || i >= 2 * n) {
        throw DimensionError("F2Vector::set: index out of range");
    }
    bits = (bits & ~(1ULL << i)) | (uint64_t(v) << i);
}

F2Vector F2Vector::operator^(const F2Vector &other) const {
    if (n != other.n) {
        throw DimensionError("F2Vector: length mismatch");
    }
    return F2Vector(n, bits ^ other.bits);
}

F2Vector &F2Vector::operator^=(const F2Vector &other) {
    *this = *this ^ other;
    return *this;
}

int symplectic_form(const F2Vector &a, const F2Vector &b) {
    if (a.n != b.n) {
        throw DimensionError("symplectic_form: length mismatch");
    }
    return symplectic_form_bits(a.bits, b.bits);
}

F2Matrix::F2Matrix(int n) : n_(n) {
    if (n < 0 || n > kMaxQubits) {
        throw CapacityError("F2Matrix: at most " + std::to_string(kMaxQubits) + " qubits");
    }
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n);
    for (int i = 0; i < 2 * n; i++) {
        m.rows_[i] = 1ULL << i;
    }
    return m;
}

F2Matrix F2Matrix::from_columns(int n, const std::vector<uint64_t> &cols) {
    if ((int)cols.size() != 2 * n) {
        throw DimensionError("F2Matrix::from_columns: expected 2n columns");
    }
    F2Matrix m(n);
    for (int j = 0; j < 2 * n; j++) {
        m.set_col(j, cols[j]);
    }
    return m;
}

void F2Matrix::set(int i, int j, bool v) {
    rows_[i] = (rows_[i] & ~(1ULL << j)) | (uint64_t(v) << j);
}

uint64_t F2Matrix::col(int j) const {
    uint64_t c = 0;
    for (int i = 0; i < 2 * n_; i++) {
        c |= ((rows_[i] >> j) & 1) << i;
    }
    return c;
}

void F2Matrix::set_col(int j, uint64_t c) {
    for (int i = 0; i < 2 * n_; i++) {
        set(i, j, (c >> i) & 1);
    }
}

F2Vector F2Matrix::operator*(const F2Vector &v) const {
    if (v.n != n_) {
        throw DimensionError("F2Matrix * F2Vector: size mismatch");
    }
    return F2Vector(n_, apply(v.bits));
}

F2Matrix F2Matrix::operator*(const F2Matrix &other) const {
    if (other.n_ != n_) {
        throw DimensionError("F2Matrix product: size mismatch");
    }
    F2Matrix out(n_);
    for (int i = 0; i < 2 * n_; i++) {
        uint64_t r = rows_[i];
        uint64_t acc = 0;
        while (r) {
            int k = std::countr_zero(r);
            acc ^= other.rows_[k];
            r &= r - 1;
        }
        out.rows_[i] = acc;
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix out(n_);
    for (int j = 0; j < 2 * n_; j++) {
        out.rows_[j] = col(j);
    }
    return out;
}

bool F2Matrix::is_identity() const {
    return *this == identity(n_);
}

bool F2Matrix::operator==(const F2Matrix &other) const {
    if (n_ != other.n_) {
        return false;
    }
    for (int i = 0; i < 2 * n_; i++) {
        if (rows_[i] != other.rows_[i]) {
            return false;
        }
    }
    return true;
}

std::string F2Matrix::to_hex_rows() const {
    std::ostringstream out;
    int width = (2 * n_ + 3) / 4;
    for (int i = 0; i < 2 * n_; i++) {
        out << std::hex << std::setw(width) << std::setfill('0') << rows_[i] << "\n";
    }
    return out.str();
}

F2Matrix F2Matrix::from_hex_rows(std::string_view text, int n) {
    F2Matrix m(n);
    std::istringstream in{std::string(text)};
    std::string line;
    int i = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (i >= 2 * n) {
            throw DimensionError("hex rows: too many rows at line " + std::to_string(line_no));
        }
        uint64_t v = 0;
        try {
            size_t used = 0;
            v = std::stoull(line, &used, 16);
            if (used != line.size()) {
                throw std::invalid_argument("trailing");
            }
        } catch (const std::exception &) {
            throw DimensionError("hex rows: bad hex at line " + std::to_string(line_no));
        }
        if (v & ~low_mask(2 * n)) {
            throw DimensionError("hex rows: row wider than 2n at line " + std::to_string(line_no));
        }
        m.rows_[i++] = v;
    }
    if (i != 2 * n) {
        throw DimensionError("hex rows: expected " + std::to_string(2 * n) + " rows");
    }
    return m;
}

bool is_symplectic(const F2Matrix &F) {
    // F J F^T = J is equivalent to the columns forming hyperbolic pairs.
    int m = F.size();
    std::vector<uint64_t> cols(m);
    for (int j = 0; j < m; j++) {
        cols[j] = F.col(j);
    }
    for (int i = 0; i < m; i++) {
        for (int j = i; j < m; j++) {
            int want = (j == (i ^ 1)) ? 1 : 0;
            if (symplectic_form_bits(cols[i], cols[j]) != want) {
                return false;
            }
        }
    }
    return true;
}

int f2_rank(std::vector<uint64_t> vecs) {
    return (int)rref(std::move(vecs)).size();
}

int fixed_space_dim(const F2Matrix &F) {
    std::vector<uint64_t> rows(F.size());
    for (int i = 0; i < F.size(); i++) {
        rows[i] = F.row(i) ^ (1ULL << i);
    }
    return F.size() - f2_rank(rows);
}

int f2_order(const F2Matrix &F, int limit) {
    F2Matrix P = F;
    for (int k = 1; k <= limit; k++) {
        if (P.is_identity()) {
            return k;
        }
        P = P * F;
    }
    throw InternalError("f2_order: order exceeds limit");
}

BigInt sp_order(int n) {
    BigInt r = BigInt(1) << (n * n);
    for (int i = 1; i <= n; i++) {
        r *= (BigInt(1) << (2 * i)) - 1;
    }
    return r;
}

SpEnumerator::SpEnumerator(int n) : n_(n) {
    if (n < 1) {
        throw DimensionError("enumerate_sp: n must be positive");
    }
    if (n > kMaxQubits) {
        throw CapacityError("enumerate_sp: n > 3 is too large to enumerate; use random_symplectic instead");
    }
    uint64_t size = 1ULL << (2 * n);
    for (uint64_t v = 1; v < size; v++) {
        for (uint64_t w = 0; w < size; w++) {
            if (symplectic_form_bits(v, w)) {
                top_pairs_.emplace_back(v, w);
            }
        }
    }
}

std::vector<F2Matrix> enumerate_sp(int n) {
    if (n > 2) {
        throw CapacityError("enumerate_sp: materialized list only for n <= 2; stream with SpEnumerator");
    }
    std::vector<F2Matrix> out;
    SpEnumerator(n).for_each([&](const F2Matrix &F) { out.push_back(F); });
    return out;
}

std::vector<uint64_t> symplectic_basis(std::vector<uint64_t> span) {
    std::vector<uint64_t> out;
    while (true) {
        span.erase(std::remove(span.begin(), span.end(), 0ULL), span.end());
        if (span.empty()) {
            return out;
        }
        uint64_t e = span.front();
        auto it = std::find_if(span.begin(), span.end(), [&](uint64_t y) { return symplectic_form_bits(e, y); });
        if (it == span.end()) {
            throw InternalError("symplectic_basis: degenerate span");
        }
        uint64_t f = *it;
        out.push_back(e);
        out.push_back(f);
        for (auto &x : span) {
            x ^= (symplectic_form_bits(x, f) ? e : 0) ^ (symplectic_form_bits(x, e) ? f : 0);
        }
    }
}

F2Matrix random_symplectic(int n, Rng &rng) {
    if (n < 1 || n > F2Matrix::kMaxQubits) {
        throw CapacityError("random_symplectic: n out of range");
    }
    std::vector<uint64_t> basis;
    for (int j = 0; j < 2 * n; j++) {
        basis.push_back(1ULL << j);
    }
    auto combo = [&](uint64_t coeff) {
        uint64_t v = 0;
        for (size_t j = 0; j < basis.size(); j++) {
            if ((coeff >> j) & 1) {
                v ^= basis[j];
            }
        }
        return v;
    };
    F2Matrix F(n);
    for (int q = 0; q < n; q++) {
        int m = (int)basis.size();
        uint64_t space = 1ULL << m;
        uint64_t v = combo(std::uniform_int_distribution<uint64_t>(1, space - 1)(rng));
        uint64_t w = combo(std::uniform_int_distribution<uint64_t>(0, space - 1)(rng));
        if (!symplectic_form_bits(v, w)) {
            // Adding a fixed partner of v flips the pairing, a bijection between the
            // two halves, so w stays uniform among vectors pairing to 1 with v.
            auto it = std::find_if(basis.begin(), basis.end(), [&](uint64_t b) { return symplectic_form_bits(v, b); });
            w ^= *it;
        }
        F.set_col(2 * q, v);
        F.set_col(2 * q + 1, w);
        std::vector<uint64_t> rest;
        for (uint64_t x : basis) {
            rest.push_back(x ^ (symplectic_form_bits(x, w) ? v : 0) ^ (symplectic_form_bits(x, v) ? w : 0));
        }
        basis = symplectic_basis(rest);
    }
    return F;
}

std::vector<uint64_t> rref(std::vector<uint64_t> vecs) {
    std::vector<uint64_t> out;
    for (uint64_t v : vecs) {
        for (uint64_t b : out) {
            if (v & (1ULL << (63 - std::countl_zero(b)))) {
                v ^= b;
            }
        }
        if (!v) {
            continue;
        }
        uint64_t pivot = 1ULL << (63 - std::countl_zero(v));
        for (auto &b : out) {
            if (b & pivot) {
                b ^= v;
            }
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<uint64_t> IsotropicSubspace::basis_bits() const {
    std::vector<uint64_t> out;
    for (const auto &b : basis) {
        out.push_back(b.bits);
    }
    return out;
}

std::vector<uint64_t> IsotropicSubspace::elements() const {
    std::vector<uint64_t> out;
    for (uint64_t c = 0; c < (1ULL << basis.size()); c++) {
        uint64_t v = 0;
        for (size_t j = 0; j < basis.size(); j++) {
            if ((c >> j) & 1) {
                v ^= basis[j].bits;
            }
        }
        out.push_back(v);
    }
    return out;
}

bool IsotropicSubspace::contains(uint64_t v) const {
    auto b = basis_bits();
    int r = (int)b.size();
    b.push_back(v);
    return f2_rank(b) == r;
}

bool IsotropicSubspace::is_isotropic() const {
    auto b = basis_bits();
    if (f2_rank(b) != (int)b.size()) {
        return false;
    }
    for (size_t i = 0; i < b.size(); i++) {
        for (size_t j = i + 1; j < b.size(); j++) {
            if (symplectic_form_bits(b[i], b[j])) {
                return false;
            }
        }
    }
    return true;
}

IsotropicSubspace z_subspace(int n) {
    std::vector<uint64_t> b;
    for (int q = 0; q < n; q++) {
        b.push_back(1ULL << (2 * q));
    }
    IsotropicSubspace s;
    s.n = n;
    for (uint64_t v : rref(b)) {
        s.basis.emplace_back(n, v);
    }
    return s;
}

int intersection_dim(const IsotropicSubspace &a, const IsotropicSubspace &b) {
    auto u = a.basis_bits();
    auto v = b.basis_bits();
    u.insert(u.end(), v.begin(), v.end());
    return a.dim() + b.dim() - f2_rank(u);
}

std::vector<IsotropicSubspace> maximal_isotropic_subspaces(int n) {
    if (n < 1) {
        throw DimensionError("maximal_isotropic_subspaces: n must be positive");
    }
    if (n > 4) {
        throw CapacityError("maximal_isotropic_subspaces: n <= 4");
    }
    uint64_t size = 1ULL << (2 * n);
    std::set<std::vector<uint64_t>> level = {{}};
    for (int k = 0; k < n; k++) {
        std::set<std::vector<uint64_t>> next;
        for (const auto &basis : level) {
            for (uint64_t v = 1; v < size; v++) {
                bool ok = true;
                for (uint64_t b : basis) {
                    if (symplectic_form_bits(b, v)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                auto ext = basis;
                ext.push_back(v);
                ext = rref(ext);
                if ((int)ext.size() == k + 1) {
                    next.insert(ext);
                }
            }
        }
        level = std::move(next);
    }
    std::vector<IsotropicSubspace> out;
    for (const auto &basis : level) {
        IsotropicSubspace s;
        s.n = n;
        for (uint64_t v : basis) {
            s.basis.emplace_back(n, v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace cliff4
