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

#include "cliff4/fiducial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cliff4/designs.hpp"
#include "cliff4/kernels.hpp"
#include "cliff4/pauli.hpp"
#include "cliff4/tensor_ops.hpp"

namespace cliff4 {

namespace {

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

StateVector parse_bloch(const std::string &args) {
    std::vector<double> v;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(trim(item), &used));
            if (used != trim(item).size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("named_fiducial: bad Bloch coordinate '" + item + "'");
        }
    }
    if (v.size() != 3) {
        throw std::invalid_argument("named_fiducial: bloch needs three coordinates");
    }
    double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(r - 1) > 1e-6) {
        throw std::invalid_argument("named_fiducial: Bloch vector is not a unit vector");
    }
    return bloch_state(v[0] / r, v[1] / r, v[2] / r);
}

StateVector psi_t() {
    double s = 1 / std::sqrt(3.0);
    return bloch_state(s, s, s);
}

}  // namespace

StateVector named_fiducial(const std::string &raw) {
    std::string name = trim(raw);
    size_t caret = name.rfind('^');
    if (caret != std::string::npos) {
        std::string exp = name.substr(caret + 1);
        if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(c); })) {
            throw std::invalid_argument("named_fiducial: bad power in '" + name + "'");
        }
        int k = std::stoi(exp);
        if (k < 1 || k > 16) {
            throw std::invalid_argument("named_fiducial: power out of range in '" + name + "'");
        }
        StateVector base = named_fiducial(name.substr(0, caret));
        StateVector out = base;
        for (int i = 1; i < k; i++) {
            out = tensor_product(out, base);
        }
        return out;
    }
    if (name == "psi_T" || name == "psi_t" || name == "T") {
        return psi_t();
    }
    if (name == "hoggar") {
        StateVector v(8);
        v << cplx(1, 1), 0, -1, 1, cplx(0, -1), -1, 0, 0;
        return v / std::sqrt(6.0);
    }
    if (name == "zero") {
        StateVector v = StateVector::Zero(2);
        v[0] = 1;
        return v;
    }
    if (name.rfind("bloch:", 0) == 0) {
        return parse_bloch(name.substr(6));
    }
    if (name.rfind("bloch(", 0) == 0 && name.back() == ')') {
        return parse_bloch(name.substr(6, name.size() - 7));
    }
    throw std::invalid_argument("named_fiducial: unknown name '" + name + "'");
}

StateVector named_product(const std::vector<std::string> &names) {
    if (names.empty()) {
        throw std::invalid_argument("named_product: no factors");
    }
    StateVector out = named_fiducial(names[0]);
    for (size_t i = 1; i < names.size(); i++) {
        out = tensor_product(out, named_fiducial(names[i]));
    }
    return out;
}

BlochVector solve_bloch_quartic(double q) {
    const double tol = 1e-12;
    if (!(q >= 1.0 / 3 - tol && q <= 1 + tol)) {
        std::ostringstream msg;
        msg << "solve_bloch_quartic: x^4+y^4+z^4 = " << q << " is outside [1/3, 1]";
        throw InfeasibleError(msg.str());
    }
    q = std::clamp(q, 1.0 / 3, 1.0);
    double s = (1 + std::sqrt(std::max(0.0, 6 * q - 2))) / 3;
    BlochVector b;
    b.x = std::sqrt(s);
    b.y = b.z = std::sqrt(std::max(0.0, (1 - s) / 2));
    if (std::abs(b.quartic() - q) > 1e-12) {
        throw InternalError("solve_bloch_quartic: residual too large");
    }
    return b;
}

CompletionResult complete_fiducial(const StateVector &prev, int n) {
    if (n < 2 || prev.size() != (int64_t(1) << (n - 1))) {
        throw DimensionError("complete_fiducial: previous state must have n - 1 qubits, n >= 2");
    }
    require_normalized(prev);
    double d = double(int64_t(1) << n);
    double ell = ell4_norm4(prev);
    double lo = 2 * d / (d + 2);
    double hi = 3 * d / (d + 3);
    if (ell > hi + 1e-12 || ell < lo - 1e-12) {
        std::ostringstream msg;
        msg << "complete_fiducial: ||Xi||^4 = " << ell << " violates " << lo << " <= ||Xi||^4 <= 3d/(d+3) = " << hi;
        throw InfeasibleError(msg.str());
    }
    CompletionResult r;
    r.c = 4 * d / ((d + 3) * ell);
    r.bloch = solve_bloch_quartic(r.c - 1);
    r.state = tensor_product(prev, bloch_state(r.bloch.x, r.bloch.y, r.bloch.z));
    r.epsilon = design_report(r.state, n).epsilon;
    if (std::abs(r.epsilon) > 1e-10) {
        throw InternalError("complete_fiducial: completed state is not a root of epsilon");
    }
    return r;
}

namespace {

// Rotates psi2 so that <psi1|psi2> is real and positive.
void align_phase(const StateVector &psi1, StateVector &psi2) {
    cplx ov = psi1.dot(psi2);
    if (std::abs(ov) <= 1e-12) {
        throw InfeasibleError("bisect_fiducial: inputs are orthogonal");
    }
    psi2 *= std::conj(ov) / std::abs(ov);
}

}  // namespace

BisectionResult bisect_fiducial(const StateVector &psi1_in, const StateVector &psi2_in, double tol, int max_iter,
                           BisectionMode mode) {
    if (psi1_in.size() != psi2_in.size()) {
        throw DimensionError("bisect_fiducial: inputs differ in dimension");
    }
    require_normalized(psi1_in);
    require_normalized(psi2_in);
    StateVector psi1 = psi1_in;
    StateVector psi2 = psi2_in;
    double e1 = deviation_epsilon(psi1);
    double e2 = deviation_epsilon(psi2);
    if (std::abs(e2) <= tol) {
        return {psi2, e2, 0};
    }
    if (std::abs(e1) <= tol) {
        return {psi1, e1, 0};
    }
    if (!(e1 > 0 && e2 < 0)) {
        std::ostringstream msg;
        msg << "bisect_fiducial: need eps(psi1) > 0 > eps(psi2), got " << e1 << " and " << e2;
        throw InfeasibleError(msg.str());
    }
    align_phase(psi1, psi2);
    for (int it = 1; it <= max_iter; it++) {
        StateVector mid;
        if (mode == BisectionMode::Midpoint) {
            mid = (psi1 + psi2) / 2;
        } else {
            mid = (e1 * psi1 - e2 * psi2) / (e1 - e2);
        }
        double norm = mid.norm();
        if (norm <= 1e-12) {
            throw InternalError("bisect_fiducial: midpoint vanished");
        }
        StateVector psi3 = mid / norm;
        double e3 = deviation_epsilon(psi3);
        if (std::abs(e3) <= tol) {
            return {psi3, e3, it};
        }
        if (e3 > 0) {
            psi1 = psi3;
            e1 = e3;
        } else {
            psi2 = psi3;
            e2 = e3;
        }
        align_phase(psi1, psi2);
    }
    std::ostringstream msg;
    msg << "bisect_fiducial: no root within " << max_iter << " iterations (bracket " << e1 << ", " << e2 << ")";
    throw ConvergenceError(msg.str());
}

std::pair<StateVector, StateVector> default_bisection_seeds(int n) {
    if (n < 1 || n > 8) {
        throw CapacityError("default_bisection_seeds: n must be in 1..8");
    }
    StateVector psi2;
    if (n == 1) {
        psi2 = psi_t();
    } else if (n == 4) {
        psi2 = named_fiducial("psi_T^4");
    } else {
        psi2 = tensor_product(singer_unitary(n - 1).eigenvectors[0], psi_t());
    }
    if (deviation_epsilon(psi2) >= 0) {
        throw InternalError("default_bisection_seeds: negative seed has eps >= 0");
    }
    int64_t d = psi2.size();
    int64_t k = 0;
    if (std::abs(psi2[0]) <= 1e-6) {
        psi2.cwiseAbs().maxCoeff(&k);
    }
    StateVector psi1 = StateVector::Zero(d);
    psi1[k] = 1;
    return {psi1, psi2};
}

WeightedDesign weighted_two_orbit(const StateVector &psi1, const StateVector &psi2, int n) {
    if (n > 2) {
        throw CapacityError("weighted_two_orbit: explicit orbits need n <= 2");
    }
    if (psi1.size() != (int64_t(1) << n) || psi2.size() != psi1.size()) {
        throw DimensionError("weighted_two_orbit: state dimension is not 2^n");
    }
    WeightedDesign w;
    w.epsilon1 = deviation_epsilon(psi1);
    w.epsilon2 = deviation_epsilon(psi2);
    if (!(w.epsilon1 > 0 && w.epsilon2 < 0)) {
        throw InfeasibleError("weighted_two_orbit: need eps(psi1) > 0 > eps(psi2)");
    }
    auto orb1 = projective_orbit(psi1, n);
    auto orb2 = projective_orbit(psi2, n);
    w.orbit1 = int64_t(orb1.size());
    w.orbit2 = int64_t(orb2.size());
    double a1 = std::abs(w.epsilon1);
    double a2 = std::abs(w.epsilon2);
    double w1 = a2 / (double(w.orbit1) * (a1 + a2));
    double w2 = a1 / (double(w.orbit2) * (a1 + a2));
    for (auto &s : orb1) {
        w.states.push_back(std::move(s));
        w.weights.push_back(w1);
    }
    for (auto &s : orb2) {
        w.states.push_back(std::move(s));
        w.weights.push_back(w2);
    }
    return w;
}

bool is_singer_cycle(const F2Matrix &F) {
    int n = F.n();
    int d = 1 << n;
    if (!is_symplectic(F) || f2_order(F, 4 * d) != d + 1) {
        return false;
    }
    std::vector<uint64_t> zbasis;
    for (int q = 0; q < n; q++) {
        zbasis.push_back(uint64_t(1) << (2 * q));
    }
    F2Matrix P = F;
    for (int k = 1; k <= d; k++, P = P * F) {
        if (fixed_space_dim(P) != 0) {
            return false;
        }
        std::vector<uint64_t> span = zbasis;
        for (uint64_t z : zbasis) {
            span.push_back(P.apply(z));
        }
        if (f2_rank(span) != 2 * n) {
            return false;
        }
    }
    return true;
}

F2Matrix singer_symplectic_search(int n) {
    for (const F2Matrix &F : enumerate_sp(n)) {
        if (is_singer_cycle(F)) {
            return F;
        }
    }
    throw InternalError("singer_symplectic_search: no Singer cycle found");
}

namespace {

// GF(2^m) with elements as bit vectors of polynomial coefficients.
struct GF2m {
    int m = 0;
    uint64_t poly = 0;

    uint64_t mul(uint64_t a, uint64_t b) const {
        uint64_t r = 0;
        while (b) {
            if (b & 1) {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if (a >> m & 1) {
                a ^= poly;
            }
        }
        return r;
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    int trace(uint64_t a) const {
        uint64_t t = 0;
        for (int k = 0; k < m; k++) {
            t ^= a;
            a = mul(a, a);
        }
        if (t > 1) {
            throw InternalError("GF2m::trace: value outside F_2");
        }
        return int(t);
    }
};

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= v; p++) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) {
                v /= p;
            }
        }
    }
    if (v > 1) {
        out.push_back(v);
    }
    return out;
}

GF2m primitive_field(int m) {
    uint64_t order = (uint64_t(1) << m) - 1;
    auto factors = prime_factors(order);
    for (uint64_t low = 1; low < (uint64_t(1) << m); low += 2) {
        GF2m f{m, (uint64_t(1) << m) | low};
        if (f.pow(2, order) != 1) {
            continue;
        }
        bool primitive = true;
        for (uint64_t p : factors) {
            if (f.pow(2, order / p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            return f;
        }
    }
    throw InternalError("primitive_field: no primitive polynomial");
}

// Kernel of the F_2-linear map given by the images of the unit vectors.
std::vector<uint64_t> f2_kernel(const std::vector<uint64_t> &images) {
    std::vector<std::pair<uint64_t, uint64_t>> rows;  // (image, combination)
    std::vector<uint64_t> kernel;
    for (size_t i = 0; i < images.size(); i++) {
        uint64_t img = images[i];
        uint64_t comb = uint64_t(1) << i;
        for (const auto &[r, c] : rows) {
            if (img & (uint64_t(1) << (63 - std::countl_zero(r)))) {
                img ^= r;
                comb ^= c;
            }
        }
        if (img == 0) {
            kernel.push_back(comb);
        } else {
            rows.emplace_back(img, comb);
        }
    }
    return kernel;
}

// Inverse of an n x n matrix over F_2 given as rows (bit j = column j).
std::vector<uint64_t> f2_inverse(std::vector<uint64_t> a) {
    int n = int(a.size());
    std::vector<uint64_t> inv(n);
    for (int i = 0; i < n; i++) {
        inv[i] = uint64_t(1) << i;
    }
    for (int c = 0; c < n; c++) {
        int p = c;
        while (p < n && !(a[p] >> c & 1)) {
            p++;
        }
        if (p == n) {
            throw InternalError("f2_inverse: singular matrix");
        }
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        for (int r = 0; r < n; r++) {
            if (r != c && (a[r] >> c & 1)) {
                a[r] ^= a[c];
                inv[r] ^= inv[c];
            }
        }
    }
    return inv;
}

}  // namespace

F2Matrix singer_symplectic_field(int n) {
    if (n < 1 || n > F2Matrix::kMaxQubits) {
        throw CapacityError("singer_symplectic_field: n must be in 1..8");
    }
    int m = 2 * n;
    GF2m f = primitive_field(m);
    uint64_t q = uint64_t(1) << n;
    const uint64_t omega = 2;
    uint64_t g = f.pow(omega, q - 1);
    auto conj = [&](uint64_t y) { return f.pow(y, q); };
    auto form = [&](uint64_t x, uint64_t y) { return f.trace(f.mul(x, conj(y))); };

    // The subfield F_q is the kernel of y -> y^q + y.
    std::vector<uint64_t> images;
    for (int i = 0; i < m; i++) {
        uint64_t e = uint64_t(1) << i;
        images.push_back(conj(e) ^ e);
    }
    std::vector<uint64_t> u = f2_kernel(images);
    if (int(u.size()) != n) {
        throw InternalError("singer_symplectic_field: subfield has the wrong dimension");
    }
    std::vector<uint64_t> gram(n, 0);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            gram[i] |= uint64_t(form(u[i], f.mul(omega, u[j]))) << j;
        }
    }
    std::vector<uint64_t> ginv = f2_inverse(gram);
    std::vector<uint64_t> fvec(n, 0);
    for (int j = 0; j < n; j++) {
        for (int k = 0; k < n; k++) {
            if (ginv[k] >> j & 1) {
                fvec[j] ^= f.mul(omega, u[k]);
            }
        }
    }
    // Coordinates: bit 2i is the coefficient of u_i, bit 2i+1 that of f_i.
    auto coords = [&](uint64_t y) {
        uint64_t c = 0;
        for (int i = 0; i < n; i++) {
            c |= uint64_t(form(y, fvec[i])) << (2 * i);
            c |= uint64_t(form(y, u[i])) << (2 * i + 1);
        }
        return c;
    };
    std::vector<uint64_t> cols;
    for (int i = 0; i < n; i++) {
        cols.push_back(coords(f.mul(g, u[i])));
        cols.push_back(coords(f.mul(g, fvec[i])));
    }
    F2Matrix F = F2Matrix::from_columns(n, cols);
    if (!is_singer_cycle(F)) {
        throw InternalError("singer_symplectic_field: construction is not a Singer cycle");
    }
    return F;
}

namespace {

Matrix matrix_power(Matrix base, uint64_t e) {
    Matrix r = Matrix::Identity(base.rows(), base.cols());
    while (e) {
        if (e & 1) {
            r = r * base;
        }
        e >>= 1;
        if (e) {
            base = base * base;
        }
    }
    return r;
}

}  // namespace

SingerData singer_unitary(int n) {
    if (n < 1 || n > F2Matrix::kMaxQubits) {
        throw CapacityError("singer_unitary: n must be in 1..8");
    }
    F2Matrix F = n <= 2 ? singer_symplectic_search(n) : singer_symplectic_field(n);
    SingerData out;
    out.u = lift_symplectic(F);
    const Matrix &U = out.u.matrix();
    int64_t d = U.rows();

    Matrix P = matrix_power(U, uint64_t(d + 1));
    cplx lambda = P(0, 0);
    if (std::abs(std::abs(lambda) - 1) > 1e-9 || (P - lambda * Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9) {
        throw InternalError("singer_unitary: U^{d+1} is not scalar");
    }

    Eigen::ComplexEigenSolver<Matrix> es(U);
    if (es.info() != Eigen::Success) {
        throw InternalError("singer_unitary: eigen-decomposition failed");
    }
    for (int64_t i = 0; i < d; i++) {
        out.eigenvalues.push_back(es.eigenvalues()[i]);
        out.eigenvectors.push_back(es.eigenvectors().col(i).normalized());
    }
    double gap = 1e300;
    for (int64_t i = 0; i < d; i++) {
        for (int64_t j = i + 1; j < d; j++) {
            gap = std::min(gap, std::abs(out.eigenvalues[i] - out.eigenvalues[j]));
        }
    }
    if (d > 1 && gap < 1e-6) {
        throw InternalError("singer_unitary: degenerate spectrum");
    }

    // (U^j)^dag U^k = U^{k-j}, so pairwise unbiasedness reduces to flat powers.
    if (d <= 64) {
        Matrix Q = U;
        for (int64_t m = 1; m <= d; m++, Q = Q * U) {
            double dev = (Q.cwiseAbs2().array() - 1.0 / double(d)).abs().maxCoeff();
            out.mub_deviation = std::max(out.mub_deviation, dev);
        }
    }
    return out;
}

std::vector<SingerEpsilon> singer_epsilon_table(const std::vector<int> &ns) {
    std::vector<SingerEpsilon> out;
    StateVector t = psi_t();
    for (int n : ns) {
        SingerData s = singer_unitary(n);
        std::vector<double> eps(s.eigenvectors.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (int64_t i = 0; i < int64_t(eps.size()); i++) {
            eps[i] = design_report(tensor_product(s.eigenvectors[i], t), n + 1).epsilon;
        }
        auto [lo, hi] = std::minmax_element(eps.begin(), eps.end());
        SingerEpsilon row;
        row.n = n;
        row.spread = *hi - *lo;
        double sum = 0;
        for (double e : eps) {
            sum += e;
        }
        row.epsilon = sum / double(eps.size());
        if (row.spread > 1e-9) {
            throw InternalError("singer_epsilon_table: eigenvectors disagree on eps");
        }
        out.push_back(row);
    }
    return out;
}

HigherPotentialReport higher_potential_probe(int n, const StateVector &psi) {
    if (n < 1 || n > 2) {
        throw CapacityError("higher_potential_probe: n must be 1 or 2");
    }
    if (psi.size() != (int64_t(1) << n)) {
        throw DimensionError("higher_potential_probe: state dimension is not 2^n");
    }
    HigherPotentialReport r;
    r.n = n;
    r.epsilon = deviation_epsilon(psi);
    if (std::abs(r.epsilon) > 1e-8) {
        throw InfeasibleError("higher_potential_probe: input is not a root of eps");
    }
    auto images = clifford_images(psi, n);
    std::vector<int> ts = n == 1 ? std::vector<int>{5, 6, 7} : std::vector<int>{5};
    for (int t : ts) {
        double phi = kernels::overlap_power_mean_omp(psi, images, t);
        double floor = 1.0 / sym_dim(psi.size(), t).convert_to<double>();
        r.potentials.emplace_back(t, phi);
        r.deviations.emplace_back(t, phi - floor);
    }
    return r;
}

}  // namespace cliff4
