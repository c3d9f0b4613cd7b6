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

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace cliff4 {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Rng = std::mt19937_64;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};
struct NormalizationError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InfeasibleError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotCliffordError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InvalidDegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws NormalizationError unless | ||psi||^2 - 1 | <= tol.
void require_normalized(const StateVector &psi, double tol = 1e-10);

/// Number of qubits of a state whose length is a power of two.
int qubits_of(const StateVector &psi);

/// "p/q" (or "p" when q = 1).
std::string rational_string(const Rational &r);
double rational_to_double(const Rational &r);

/// Exact binomial coefficient.
BigInt binomial(int64_t n, int64_t k);

/// D_[t] = C(d + t - 1, t), the dimension of the symmetric subspace.
BigInt sym_dim(int64_t d, int t);

}  // namespace cliff4
