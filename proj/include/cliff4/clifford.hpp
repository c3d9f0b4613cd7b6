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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliff4/common.hpp"
#include "cliff4/f2lin.hpp"
#include "cliff4/pauli.hpp"

namespace cliff4 {

/// U W_a U^dag = (-1)^{f(a)} W_{Fa}. Only f on the basis labels e_j is stored
/// (bit j of signs); other values follow from the product rule, see
/// conjugate_pauli.
struct SymplecticAction {
    F2Matrix F;
    uint64_t signs = 0;
};

class CliffordElement {
   public:
    CliffordElement() = default;
    CliffordElement(Matrix u, int n, std::optional<SymplecticAction> action = std::nullopt);

    const Matrix &matrix() const {
        return u_;
    }
    int n() const {
        return n_;
    }
    int64_t dim() const {
        return u_.rows();
    }
    const std::optional<SymplecticAction> &action() const {
        return action_;
    }
    /// Returns the cached action, extracting it first if needed.
    const SymplecticAction &ensure_action();

    CliffordElement operator*(const CliffordElement &other) const;
    StateVector apply(const StateVector &psi) const {
        return u_ * psi;
    }
    std::string to_csv() const;

   private:
    Matrix u_;
    int n_ = 0;
    std::optional<SymplecticAction> action_;
};

enum class GateKind { H, S, CNOT };

struct GateToken {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
};
using GateWord = std::vector<GateToken>;

/// Parses whitespace-separated tokens like `H0 S1 CX0,2` (CNOT also accepted).
GateWord parse_gate_word(std::string_view text);
std::string format_gate_word(const GateWord &w);

CliffordElement generator_matrix(const GateToken &g, int n);
CliffordElement compose_word(const GateWord &w, int n);

/// Throws NotCliffordError if some conjugated basis Pauli is not +-W_b.
SymplecticAction extract_action(const Matrix &u, int n);

/// Label of U p U^dag under the given action.
PauliLabel conjugate_pauli(const SymplecticAction &act, const PauliLabel &p);

/// Transvection vectors h_1..h_k with F = T_{h_1} ... T_{h_k}, where
/// T_h x = x + <x,h> h.
std::vector<uint64_t> transvection_decomposition(const F2Matrix &F);

/// ((1-i)/2)(1 + i W_h): the transvection lift (1 + i W_h)/sqrt(2) times the
/// phase e^{-i pi/4}, which keeps every entry in Q[i].
Matrix transvection_unitary(uint64_t h, int n);

/// Some Clifford unitary whose action has matrix F. The representative is the
/// product of transvection lifts and is otherwise unspecified.
CliffordElement lift_symplectic(const F2Matrix &F);

/// lift_symplectic(random_symplectic) times a uniform Pauli.
CliffordElement random_clifford(int n, Rng &rng);

struct TraceCheck {
    cplx trace;
    int kernel_dim = 0;
    bool traceless = false;
    bool pass = false;
};
TraceCheck clifford_trace_check(CliffordElement &u);

/// Lifts of every element of Sp(2n, F_2) in enumeration order, cached (n <= 2).
const std::vector<CliffordElement> &symplectic_lifts(int n);

/// U_F W_a psi for every F in Sp(2n) and every label a (n <= 2).
std::vector<StateVector> clifford_images(const StateVector &psi, int n);

/// Distinct states of the Clifford orbit of psi up to global phase (n <= 2).
std::vector<StateVector> projective_orbit(const StateVector &psi, int n);

/// Phase-invariant key: entries of |psi><psi| rounded to 1e-9.
std::vector<int64_t> projector_key(const StateVector &psi);

}  // namespace cliff4
