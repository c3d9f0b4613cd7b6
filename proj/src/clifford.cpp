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

#include "cliff4/clifford.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace cliff4 {

namespace {

const cplx kI(0, 1);
const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw DimensionError("gate qubit index " + std::to_string(q) + " out of range for n = " + std::to_string(n));
    }
}

Matrix embed_single(const Eigen::Matrix2cd &g, int q, int n) {
    int64_t d = int64_t(1) << n;
    int shift = n - 1 - q;
    Matrix u = Matrix::Zero(d, d);
    for (int64_t k = 0; k < d; k++) {
        int b = (k >> shift) & 1;
        int64_t base = k & ~(int64_t(1) << shift);
        for (int o = 0; o < 2; o++) {
            u(base | (int64_t(o) << shift), k) = g(o, b);
        }
    }
    return u;
}

// In place M <- W_h M.
void left_multiply_pauli(uint64_t h, int n, Matrix &m) {
    PauliMasks pm = pauli_masks(h, n);
    int64_t d = m.rows();
    Matrix out(d, m.cols());
    cplx ph = kIPow[pm.y & 3];
    for (int64_t r = 0; r < d; r++) {
        cplx s = (std::popcount(pm.z & uint64_t(r)) & 1) ? -ph : ph;
        out.row(r ^ pm.x) = s * m.row(r);
    }
    m.swap(out);
}

}  // namespace

CliffordElement::CliffordElement(Matrix u, int n, std::optional<SymplecticAction> action)
    : u_(std::move(u)), n_(n), action_(std::move(action)) {
    if (u_.rows() != (int64_t(1) << n) || u_.cols() != u_.rows()) {
        throw DimensionError("CliffordElement: matrix must be 2^n x 2^n");
    }
}

const SymplecticAction &CliffordElement::ensure_action() {
    if (!action_) {
        action_ = extract_action(u_, n_);
    }
    return *action_;
}

CliffordElement CliffordElement::operator*(const CliffordElement &other) const {
    if (n_ != other.n_) {
        throw DimensionError("CliffordElement product: qubit count mismatch");
    }
    return CliffordElement(u_ * other.u_, n_);
}

std::string CliffordElement::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "row,col,re,im\n";
    for (int64_t r = 0; r < u_.rows(); r++) {
        for (int64_t c = 0; c < u_.cols(); c++) {
            out << r << "," << c << "," << u_(r, c).real() << "," << u_(r, c).imag() << "\n";
        }
    }
    return out.str();
}

GateWord parse_gate_word(std::string_view text) {
    GateWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        GateToken g{};
        std::string args;
        if (tok.rfind("CNOT", 0) == 0) {
            g.kind = GateKind::CNOT;
            args = tok.substr(4);
        } else if (tok.rfind("CX", 0) == 0) {
            g.kind = GateKind::CNOT;
            args = tok.substr(2);
        } else if (tok[0] == 'H') {
            g.kind = GateKind::H;
            args = tok.substr(1);
        } else if (tok[0] == 'S') {
            g.kind = GateKind::S;
            args = tok.substr(1);
        } else {
            throw std::invalid_argument("gate word: unknown token '" + tok + "'");
        }
        try {
            size_t used = 0;
            if (g.kind == GateKind::CNOT) {
                auto comma = args.find(',');
                if (comma == std::string::npos) {
                    throw std::invalid_argument("missing comma");
                }
                g.q0 = std::stoi(args.substr(0, comma), &used);
                g.q1 = std::stoi(args.substr(comma + 1), &used);
                if (comma + 1 + used != args.size() || g.q0 == g.q1) {
                    throw std::invalid_argument("bad operands");
                }
            } else {
                g.q0 = std::stoi(args, &used);
                if (used != args.size()) {
                    throw std::invalid_argument("trailing");
                }
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("gate word: bad operands in '" + tok + "'");
        }
        w.push_back(g);
    }
    return w;
}

std::string format_gate_word(const GateWord &w) {
    std::string out;
    for (const auto &g : w) {
        if (!out.empty()) {
            out += ' ';
        }
        switch (g.kind) {
            case GateKind::H:
                out += "H" + std::to_string(g.q0);
                break;
            case GateKind::S:
                out += "S" + std::to_string(g.q0);
                break;
            case GateKind::CNOT:
                out += "CX" + std::to_string(g.q0) + "," + std::to_string(g.q1);
                break;
        }
    }
    return out;
}

CliffordElement generator_matrix(const GateToken &g, int n) {
    check_qubit(g.q0, n);
    Eigen::Matrix2cd m;
    switch (g.kind) {
        case GateKind::H:
            m << 1, 1, 1, -1;
            m *= cplx(0.5, 0.5);
            return CliffordElement(embed_single(m, g.q0, n), n);
        case GateKind::S:
            m << 1, 0, 0, -kI;
            return CliffordElement(embed_single(m, g.q0, n), n);
        case GateKind::CNOT: {
            check_qubit(g.q1, n);
            if (g.q0 == g.q1) {
                throw DimensionError("CNOT: control equals target");
            }
            int64_t d = int64_t(1) << n;
            int64_t cbit = int64_t(1) << (n - 1 - g.q0);
            int64_t tbit = int64_t(1) << (n - 1 - g.q1);
            Matrix u = Matrix::Zero(d, d);
            for (int64_t k = 0; k < d; k++) {
                u((k & cbit) ? (k ^ tbit) : k, k) = 1;
            }
            return CliffordElement(u, n);
        }
    }
    throw InternalError("generator_matrix: unknown gate");
}

CliffordElement compose_word(const GateWord &w, int n) {
    int64_t d = int64_t(1) << n;
    Matrix u = Matrix::Identity(d, d);
    for (const auto &g : w) {
        u = u * generator_matrix(g, n).matrix();
    }
    CliffordElement out(u, n);
    out.ensure_action();
    return out;
}

SymplecticAction extract_action(const Matrix &u, int n) {
    int64_t d = int64_t(1) << n;
    if (u.rows() != d || u.cols() != d) {
        throw DimensionError("extract_action: matrix must be 2^n x 2^n");
    }
    SymplecticAction act{F2Matrix(n), 0};
    Matrix ud = u.adjoint();
    for (int j = 0; j < 2 * n; j++) {
        Matrix m = ud;
        left_multiply_pauli(1ULL << j, n, m);
        m = u * m;
        Eigen::Index xr = 0;
        m.col(0).cwiseAbs().maxCoeff(&xr);
        uint64_t x = (uint64_t)xr;
        cplx pivot = m(xr, 0);
        if (std::abs(pivot) < 0.5) {
            throw NotCliffordError("extract_action: conjugated Pauli is not a signed Pauli");
        }
        uint64_t z = 0;
        for (int p = 0; p < n; p++) {
            uint64_t k = 1ULL << p;
            cplx ratio = m(Eigen::Index(k ^ x), Eigen::Index(k)) / pivot;
            if (ratio.real() < 0) {
                z |= k;
            }
        }
        int y = std::popcount(x & z);
        cplx s = pivot / kIPow[y & 3];
        double sign = s.real() < 0 ? -1.0 : 1.0;
        uint64_t b = label_from_masks(x, z, n);
        Matrix w = pauli_matrix(PauliLabel(F2Vector(n, b)));
        double err = (m - sign * w).cwiseAbs().maxCoeff();
        if (err > 1e-8) {
            throw NotCliffordError("extract_action: conjugated basis Pauli " + std::to_string(j) +
                                   " is not +-W_b (deviation " + std::to_string(err) + ")");
        }
        act.F.set_col(j, b);
        if (sign < 0) {
            act.signs |= 1ULL << j;
        }
    }
    if (!is_symplectic(act.F)) {
        throw NotCliffordError("extract_action: induced matrix is not symplectic");
    }
    return act;
}

PauliLabel conjugate_pauli(const SymplecticAction &act, const PauliLabel &p) {
    int n = p.n();
    if (act.F.n() != n) {
        throw DimensionError("conjugate_pauli: qubit count mismatch");
    }
    PauliLabel basis_prod = PauliLabel::identity(n);
    PauliLabel image = PauliLabel::identity(n);
    for (int j = 0; j < 2 * n; j++) {
        if (!p.a.get(j)) {
            continue;
        }
        basis_prod = pauli_product(basis_prod, PauliLabel(F2Vector(n, 1ULL << j)));
        int s = ((act.signs >> j) & 1) ? 2 : 0;
        image = pauli_product(image, PauliLabel(F2Vector(n, act.F.col(j)), s));
    }
    // W_a = i^{-c} prod_j W_{e_j} where basis_prod = i^c W_a.
    return PauliLabel(image.a, image.phase_exp - basis_prod.phase_exp + p.phase_exp);
}

std::vector<uint64_t> transvection_decomposition(const F2Matrix &F) {
    if (!is_symplectic(F)) {
        throw std::invalid_argument("transvection_decomposition: matrix is not symplectic");
    }
    int n = F.n();
    std::vector<uint64_t> cols(2 * n);
    for (int j = 0; j < 2 * n; j++) {
        cols[j] = F.col(j);
    }
    std::vector<uint64_t> hs;
    auto apply = [&](uint64_t h) {
        for (auto &c : cols) {
            if (symplectic_form_bits(c, h)) {
                c ^= h;
            }
        }
        hs.push_back(h);
    };
    for (int q = 0; q < n; q++) {
        uint64_t e = 1ULL << (2 * q);
        uint64_t f = 1ULL << (2 * q + 1);
        uint64_t x = cols[2 * q];
        if (x != e) {
            if (symplectic_form_bits(x, e)) {
                apply(x ^ e);
            } else {
                // Need z in the span of pairs q..n-1 pairing to 1 with both x and e.
                int free_bits = 2 * (n - q);
                uint64_t z = 0;
                for (uint64_t c = 1; c < (1ULL << free_bits); c++) {
                    uint64_t cand = c << (2 * q);
                    if (symplectic_form_bits(x, cand) && symplectic_form_bits(e, cand)) {
                        z = cand;
                        break;
                    }
                }
                if (!z) {
                    throw InternalError("transvection_decomposition: no connecting vector");
                }
                apply(x ^ z);
                apply(z ^ e);
            }
        }
        uint64_t y = cols[2 * q + 1];
        if (y != f) {
            if (symplectic_form_bits(y, f)) {
                apply(y ^ f);
            } else {
                uint64_t z = e ^ f;
                apply(y ^ z);
                apply(z ^ f);
            }
        }
    }
    return hs;
}

Matrix transvection_unitary(uint64_t h, int n) {
    int64_t d = int64_t(1) << n;
    Matrix m = Matrix::Identity(d, d);
    left_multiply_pauli(h, n, m);
    return cplx(0.5, -0.5) * (Matrix::Identity(d, d) + kI * m);
}

CliffordElement lift_symplectic(const F2Matrix &F) {
    int n = F.n();
    auto hs = transvection_decomposition(F);
    int64_t d = int64_t(1) << n;
    Matrix m = Matrix::Identity(d, d);
    for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
        Matrix wm = m;
        left_multiply_pauli(*it, n, wm);
        m = cplx(0.5, -0.5) * (m + kI * wm);
    }
    CliffordElement u(m, n);
    if (!(u.ensure_action().F == F)) {
        throw InternalError("lift_symplectic: lifted action differs from input");
    }
    return u;
}

CliffordElement random_clifford(int n, Rng &rng) {
    F2Matrix F = random_symplectic(n, rng);
    uint64_t a = std::uniform_int_distribution<uint64_t>(0, low_mask(2 * n))(rng);
    Matrix m = lift_symplectic(F).matrix();
    // Right-multiplying by W_a: (M W_a) = (W_a^dag M^dag)^dag = (W_a M^dag)^dag.
    Matrix md = m.adjoint();
    left_multiply_pauli(a, n, md);
    CliffordElement u(md.adjoint(), n);
    u.ensure_action();
    return u;
}

TraceCheck clifford_trace_check(CliffordElement &u) {
    TraceCheck r;
    const auto &act = u.ensure_action();
    r.trace = u.matrix().trace();
    r.kernel_dim = fixed_space_dim(act.F);
    r.traceless = std::abs(r.trace) <= 1e-8;
    if (r.traceless) {
        r.pass = true;
        return r;
    }
    double scale = std::pow(4.0, r.kernel_dim);
    cplx expect = std::pow(-4.0, r.kernel_dim);
    cplx t2 = r.trace * r.trace;
    r.pass = std::abs(t2 * t2 - expect) < 1e-6 * scale;
    return r;
}

const std::vector<CliffordElement> &symplectic_lifts(int n) {
    auto build = [](int m) {
        std::vector<CliffordElement> out;
        for (const auto &F : enumerate_sp(m)) {
            out.push_back(lift_symplectic(F));
        }
        return out;
    };
    if (n == 1) {
        static const std::vector<CliffordElement> lifts1 = build(1);
        return lifts1;
    }
    if (n == 2) {
        static const std::vector<CliffordElement> lifts2 = build(2);
        return lifts2;
    }
    throw CapacityError("Clifford orbit enumeration supports n <= 2");
}

std::vector<StateVector> clifford_images(const StateVector &psi, int n) {
    const auto &lifts = symplectic_lifts(n);
    if (psi.size() != (int64_t(1) << n)) {
        throw DimensionError("clifford_images: state dimension mismatch");
    }
    uint64_t labels = 1ULL << (2 * n);
    std::vector<StateVector> shifted(labels);
    for (uint64_t a = 0; a < labels; a++) {
        apply_pauli_bits(a, n, psi, shifted[a]);
    }
    std::vector<StateVector> out;
    out.reserve(lifts.size() * labels);
    for (const auto &u : lifts) {
        for (const auto &v : shifted) {
            out.push_back(u.matrix() * v);
        }
    }
    return out;
}

std::vector<int64_t> projector_key(const StateVector &psi) {
    std::vector<int64_t> key;
    key.reserve(2 * psi.size() * psi.size());
    for (int64_t i = 0; i < psi.size(); i++) {
        for (int64_t j = 0; j < psi.size(); j++) {
            cplx e = psi[i] * std::conj(psi[j]);
            key.push_back(std::llround(e.real() * 1e9));
            key.push_back(std::llround(e.imag() * 1e9));
        }
    }
    return key;
}

std::vector<StateVector> projective_orbit(const StateVector &psi, int n) {
    if (n > 2) {
        throw CapacityError("projective_orbit: n <= 2 (the projective Clifford group has 11520 elements at n = 2)");
    }
    std::map<std::vector<int64_t>, size_t> seen;
    std::vector<StateVector> out;
    for (auto &phi : clifford_images(psi, n)) {
        auto key = projector_key(phi);
        if (seen.emplace(std::move(key), out.size()).second) {
            out.push_back(std::move(phi));
        }
    }
    return out;
}

}  // namespace cliff4
