// Copyright 2026 The pps-sim Authors
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

#include "pps/qmath.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pps/rng.h"
#include "pps/simd/kernels.h"

namespace pps {

bool is_power_of_two(uint64_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

unsigned qubits_for_dim(uint64_t dim) {
    if (!is_power_of_two(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    unsigned m = 0;
    while ((uint64_t{1} << m) < dim) {
        m++;
    }
    return m;
}

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be at least 1");
    }
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be at least 1");
    }
    if (entries_.size() != dim * dim) {
        throw std::invalid_argument("expected " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(entries_.size()));
    }
    if (!is_finite()) {
        throw std::invalid_argument("matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    if (dim_ == 0) {
        throw std::invalid_argument("matrix dimension must be at least 1");
    }
    entries_.reserve(dim_ * dim_);
    for (const auto &r : rows) {
        if (r.size() != dim_) {
            throw std::invalid_argument("matrix rows must all have length " + std::to_string(dim_));
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    if (!is_finite()) {
        throw std::invalid_argument("matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    if (!m.is_finite()) {
        throw std::invalid_argument("matrix entries must be finite");
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    std::vector<Complex> c(diag.begin(), diag.end());
    return diagonal(std::span<const Complex>(c));
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
    std::vector<double> d(dim_);
    for (size_t i = 0; i < dim_; i++) {
        d[i] = (*this)(i, i).real();
    }
    return d;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = i; j < dim_; j++) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    std::vector<Complex> product(dim_ * dim_);
    simd::active_kernels().matmul_adjoint(entries_.data(), entries_.data(), product.data(), dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            Complex expected = i == j ? 1.0 : 0.0;
            if (std::abs(product[i * dim_ + j] - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("matrix addition: dimension mismatch");
    }
    simd::axpy(1.0, other.entries_, entries_);
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    }
    simd::axpy(-1.0, other.entries_, entries_);
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2 || !is_power_of_two(amplitudes_.size())) {
        throw std::invalid_argument("pure state needs 2^m amplitudes with m >= 1, got " +
                                    std::to_string(amplitudes_.size()));
    }
    num_qubits_ = qubits_for_dim(amplitudes_.size());
    double norm = 0;
    for (Complex a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("pure state amplitudes must be finite");
        }
        norm += std::norm(a);
    }
    if (std::abs(norm - 1) > kNormTolerance) {
        throw std::invalid_argument("pure state is not normalized (sum |a|^2 = " + std::to_string(norm) + ")");
    }
}

PureState PureState::basis(unsigned num_qubits, uint64_t index) {
    if (num_qubits == 0 || num_qubits > 30) {
        throw std::invalid_argument("basis state needs 1..30 qubits");
    }
    std::vector<Complex> amps(size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw std::out_of_range("basis index out of range");
    }
    amps[index] = 1;
    return PureState(std::move(amps));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double norm = 0;
    for (Complex a : amplitudes) {
        norm += std::norm(a);
    }
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double scale = 1 / std::sqrt(norm);
    for (Complex &a : amplitudes) {
        a *= scale;
    }
    return PureState(std::move(amplitudes));
}

ComplexMatrix PureState::density_matrix() const {
    size_t d = dim();
    ComplexMatrix rho(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            rho(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
        }
    }
    return rho;
}

Unitary::Unitary(ComplexMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_unitary(kUnitaryTolerance)) {
        throw std::invalid_argument("matrix is not unitary within 1e-10");
    }
}

namespace gates {

ComplexMatrix hadamard() {
    const double r = 1 / std::sqrt(2.0);
    return ComplexMatrix{{r, r}, {r, -r}};
}

ComplexMatrix pauli_x() {
    return ComplexMatrix{{0, 1}, {1, 0}};
}

ComplexMatrix pauli_z() {
    return ComplexMatrix{{1, 0}, {0, -1}};
}

ComplexMatrix hadamard_layer(unsigned num_qubits) {
    return tensor_power(hadamard(), num_qubits);
}

}  // namespace gates

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t da = a.dim();
    size_t db = b.dim();
    if (!is_power_of_two(da) || !is_power_of_two(db)) {
        throw std::invalid_argument("tensor: operand dimensions must be powers of two");
    }
    ComplexMatrix r(da * db);
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            Complex aij = a(i, j);
            for (size_t k = 0; k < db; k++) {
                for (size_t l = 0; l < db; l++) {
                    r(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

PureState tensor(const PureState &a, const PureState &b) {
    std::vector<Complex> amps(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t k = 0; k < b.dim(); k++) {
            amps[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return PureState::normalized(std::move(amps));
}

ComplexMatrix tensor_power(const ComplexMatrix &a, unsigned k) {
    ComplexMatrix r = ComplexMatrix::identity(1);
    for (unsigned i = 0; i < k; i++) {
        r = tensor(r, a);
    }
    return r;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    ComplexMatrix b_adj = b.adjoint();
    ComplexMatrix c(a.dim());
    simd::active_kernels().matmul_adjoint(a.entries().data(), b_adj.entries().data(), c.entries().data(), a.dim());
    return c;
}

ComplexMatrix apply_unitary(const ComplexMatrix &rho, const Unitary &u) {
    size_t d = rho.dim();
    if (u.dim() != d) {
        throw std::invalid_argument("apply_unitary: dimension mismatch (rho " + std::to_string(d) + ", U " +
                                    std::to_string(u.dim()) + ")");
    }
    const auto &kernels = simd::active_kernels();
    const auto &um = u.matrix();
    ComplexMatrix rho_adj = rho.adjoint();
    ComplexMatrix u_rho(d);
    kernels.matmul_adjoint(um.entries().data(), rho_adj.entries().data(), u_rho.entries().data(), d);
    ComplexMatrix out(d);
    kernels.matmul_adjoint(u_rho.entries().data(), um.entries().data(), out.entries().data(), d);
    return out;
}

ComplexMatrix apply_unitary(const ComplexMatrix &rho, const ComplexMatrix &u) {
    if (u.dim() != rho.dim()) {
        throw std::invalid_argument("apply_unitary: dimension mismatch (rho " + std::to_string(rho.dim()) +
                                    ", U " + std::to_string(u.dim()) + ")");
    }
    return apply_unitary(rho, Unitary(u));
}

ComplexMatrix apply_permutation(const ComplexMatrix &rho, std::span<const uint64_t> perm) {
    size_t d = rho.dim();
    if (perm.size() != d) {
        throw std::invalid_argument("apply_permutation: permutation length does not match dimension");
    }
    std::vector<bool> seen(d);
    for (uint64_t p : perm) {
        if (p >= d || seen[p]) {
            throw std::invalid_argument("apply_permutation: not a permutation");
        }
        seen[p] = true;
    }
    ComplexMatrix out(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            out(perm[i], perm[j]) = rho(i, j);
        }
    }
    return out;
}

namespace {

uint64_t qubit_mask(unsigned qubit, unsigned total_qubits) {
    return uint64_t{1} << (total_qubits - 1 - qubit);
}

void check_qubits(std::span<const unsigned> qubits, unsigned total_qubits, const char *what) {
    std::vector<bool> seen(total_qubits);
    for (unsigned q : qubits) {
        if (q >= total_qubits) {
            throw std::out_of_range(std::string(what) + ": qubit index " + std::to_string(q) + " out of range [0, " +
                                    std::to_string(total_qubits) + ")");
        }
        if (seen[q]) {
            throw std::invalid_argument(std::string(what) + ": duplicate qubit index " + std::to_string(q));
        }
        seen[q] = true;
    }
}

// Full-register index of every assignment to the given qubits (ascending qubit
// order, first qubit most significant), all other bits zero.
std::vector<uint64_t> scatter_table(const std::vector<unsigned> &qubits, unsigned total_qubits) {
    size_t count = size_t{1} << qubits.size();
    std::vector<uint64_t> table(count);
    for (size_t v = 0; v < count; v++) {
        uint64_t idx = 0;
        for (size_t b = 0; b < qubits.size(); b++) {
            if ((v >> (qubits.size() - 1 - b)) & 1) {
                idx |= qubit_mask(qubits[b], total_qubits);
            }
        }
        table[v] = idx;
    }
    return table;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const unsigned> keep, unsigned total_qubits) {
    if (rho.dim() != (size_t{1} << total_qubits)) {
        throw std::invalid_argument("partial_trace: rho dimension does not match 2^total_qubits");
    }
    check_qubits(keep, total_qubits, "partial_trace");
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: must keep at least one qubit");
    }
    std::vector<unsigned> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    std::vector<unsigned> traced;
    for (unsigned q = 0; q < total_qubits; q++) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    auto kept_idx = scatter_table(kept, total_qubits);
    auto traced_idx = scatter_table(traced, total_qubits);
    ComplexMatrix out(kept_idx.size());
    for (size_t r = 0; r < kept_idx.size(); r++) {
        for (size_t c = 0; c < kept_idx.size(); c++) {
            Complex sum = 0;
            for (uint64_t t : traced_idx) {
                sum += rho(kept_idx[r] | t, kept_idx[c] | t);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::initializer_list<unsigned> keep, unsigned total_qubits) {
    return partial_trace(rho, std::span<const unsigned>(keep.begin(), keep.size()), total_qubits);
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::span<const unsigned> transposed,
                                unsigned total_qubits) {
    if (rho.dim() != (size_t{1} << total_qubits)) {
        throw std::invalid_argument("partial_transpose: rho dimension does not match 2^total_qubits");
    }
    check_qubits(transposed, total_qubits, "partial_transpose");
    uint64_t mask = 0;
    for (unsigned q : transposed) {
        mask |= qubit_mask(q, total_qubits);
    }
    size_t d = rho.dim();
    ComplexMatrix out(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            size_t i2 = (i & ~mask) | (j & mask);
            size_t j2 = (j & ~mask) | (i & mask);
            out(i2, j2) = rho(i, j);
        }
    }
    return out;
}

double expectation(const ComplexMatrix &rho, const PureState &psi) {
    if (rho.dim() != psi.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    // <psi|rho|psi> = sum_i conj(psi_i) (rho psi)_i, and (rho psi)_i = dot_conj(row_i, conj psi).
    std::vector<Complex> conj_psi(psi.dim());
    for (size_t i = 0; i < psi.dim(); i++) {
        conj_psi[i] = std::conj(psi[i]);
    }
    std::vector<Complex> rho_psi(psi.dim());
    for (size_t i = 0; i < psi.dim(); i++) {
        rho_psi[i] = simd::dot_conj(rho.row(i), conj_psi);
    }
    return simd::dot_conj(rho_psi, psi.amplitudes()).real();
}

Unitary random_unitary(size_t dim, Rng &rng) {
    std::vector<std::vector<Complex>> rows(dim, std::vector<Complex>(dim));
    for (auto &r : rows) {
        for (auto &e : r) {
            e = Complex(rng.normal(), rng.normal());
        }
    }
    // Modified Gram-Schmidt over rows, run twice for orthogonality at 1e-15.
    for (int pass = 0; pass < 2; pass++) {
        for (size_t i = 0; i < dim; i++) {
            for (size_t k = 0; k < i; k++) {
                Complex overlap = simd::dot_conj(rows[i], rows[k]);
                simd::axpy(-overlap, rows[k], rows[i]);
            }
            double norm = std::sqrt(simd::dot_conj(rows[i], rows[i]).real());
            for (auto &e : rows[i]) {
                e /= norm;
            }
        }
    }
    std::vector<Complex> flat;
    flat.reserve(dim * dim);
    for (const auto &r : rows) {
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Unitary(ComplexMatrix(dim, std::move(flat)));
}

PureState random_pure_state(unsigned num_qubits, Rng &rng) {
    std::vector<Complex> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        a = Complex(rng.normal(), rng.normal());
    }
    return PureState::normalized(std::move(amps));
}

}  // namespace pps
