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

#ifndef PPS_QMATH_H
#define PPS_QMATH_H

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pps {

class Rng;

using Complex = std::complex<double>;

/// Absolute entrywise tolerance used when validating unitaries.
inline constexpr double kUnitaryTolerance = 1e-10;
/// Tolerance on sum |a_i|^2 = 1 for pure states.
inline constexpr double kNormTolerance = 1e-12;

bool is_power_of_two(uint64_t v);

/// log2(dim); throws std::invalid_argument when dim is not a power of two.
unsigned qubits_for_dim(uint64_t dim);

/// Dense square complex matrix, row-major.
///
/// Basis index bits are ordered so that qubit 0 is the most significant bit of
/// the label: |q0 q1 ... q_{m-1}>.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::span<const double> diag);

    size_t dim() const { return dim_; }
    unsigned num_qubits() const { return qubits_for_dim(dim_); }

    Complex operator()(size_t row, size_t col) const { return entries_[row * dim_ + col]; }
    Complex &operator()(size_t row, size_t col) { return entries_[row * dim_ + col]; }
    std::span<const Complex> row(size_t r) const { return {entries_.data() + r * dim_, dim_}; }
    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    Complex trace() const;
    std::vector<double> real_diagonal() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;
    double max_abs_diff(const ComplexMatrix &other) const;
    bool is_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t dim_;
    std::vector<Complex> entries_;
};

/// Unit-norm amplitude vector over num_qubits qubits.
class PureState {
   public:
    /// Validates length 2^m (m >= 1), finiteness, and unit norm within kNormTolerance.
    explicit PureState(std::vector<Complex> amplitudes);

    static PureState basis(unsigned num_qubits, uint64_t index);
    /// Rescales to unit norm; throws on the zero vector.
    static PureState normalized(std::vector<Complex> amplitudes);

    unsigned num_qubits() const { return num_qubits_; }
    size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](size_t i) const { return amplitudes_[i]; }

    /// |psi><psi|.
    ComplexMatrix density_matrix() const;

   private:
    unsigned num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// A matrix that has passed the U U^dagger = I check once.
class Unitary {
   public:
    /// Throws std::invalid_argument when not unitary within kUnitaryTolerance.
    explicit Unitary(ComplexMatrix m);
    const ComplexMatrix &matrix() const { return matrix_; }
    size_t dim() const { return matrix_.dim(); }

   private:
    ComplexMatrix matrix_;
};

namespace gates {
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_z();
/// H applied to each of num_qubits qubits.
ComplexMatrix hadamard_layer(unsigned num_qubits);
}  // namespace gates

/// Kronecker product: entry (i*db + k, j*db + l) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
PureState tensor(const PureState &a, const PureState &b);
ComplexMatrix tensor_power(const ComplexMatrix &a, unsigned k);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// U rho U^dagger.
ComplexMatrix apply_unitary(const ComplexMatrix &rho, const Unitary &u);
/// Validates u before applying.
ComplexMatrix apply_unitary(const ComplexMatrix &rho, const ComplexMatrix &u);

/// P rho P^T for the permutation matrix sending |i> to |perm[i]>.
ComplexMatrix apply_permutation(const ComplexMatrix &rho, std::span<const uint64_t> perm);

/// Traces out every qubit not listed in keep. The result orders kept qubits
/// by ascending index.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const unsigned> keep, unsigned total_qubits);
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::initializer_list<unsigned> keep, unsigned total_qubits);

/// Transposes the listed qubits' tensor factors.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::span<const unsigned> transposed,
                                unsigned total_qubits);

/// <psi| rho |psi>, real part.
double expectation(const ComplexMatrix &rho, const PureState &psi);

/// Ascending eigenvalues of a Hermitian matrix (cyclic complex Jacobi).
/// Throws std::invalid_argument when m is not Hermitian within 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// Haar-random unitary from QR of a complex Gaussian matrix.
Unitary random_unitary(size_t dim, Rng &rng);
/// Haar-random pure state.
PureState random_pure_state(unsigned num_qubits, Rng &rng);

}  // namespace pps

#endif
