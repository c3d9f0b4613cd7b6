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

#include "cliff4/common.hpp"

#include <bit>
#include <cmath>

namespace cliff4 {

void require_normalized(const StateVector &psi, double tol) {
    double err = std::abs(psi.squaredNorm() - 1.0);
    if (!(err <= tol)) {
        throw NormalizationError("state is not normalized (| ||psi||^2 - 1 | = " + std::to_string(err) + ")");
    }
}

int qubits_of(const StateVector &psi) {
    uint64_t d = (uint64_t)psi.size();
    if (d == 0 || !std::has_single_bit(d)) {
        throw DimensionError("state length is not a power of two");
    }
    return std::countr_zero(d);
}

std::string rational_string(const Rational &r) {
    BigInt p = boost::multiprecision::numerator(r);
    BigInt q = boost::multiprecision::denominator(r);
    if (q == 1) {
        return p.str();
    }
    return p.str() + "/" + q.str();
}

double rational_to_double(const Rational &r) {
    return r.convert_to<double>();
}

BigInt binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r = 1;
    for (int64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

BigInt sym_dim(int64_t d, int t) {
    return binomial(d + t - 1, t);
}

}  // namespace cliff4
