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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pps/qmath.h"

namespace pps {
namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<Complex> &a, size_t n) {
    double sum = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                sum += std::norm(a[i * n + j]);
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    if (!m.is_hermitian(kHermitianTolerance)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian within 1e-10");
    }
    const size_t n = m.dim();
    // Work on the exactly Hermitian part so rounding noise in the input cannot
    // stall the sweep.
    std::vector<Complex> a(n * n);
    for (size_t i = 0; i < n; i++) {
        a[i * n + i] = m(i, i).real();
        for (size_t j = i + 1; j < n; j++) {
            Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a[i * n + j] = v;
            a[j * n + i] = std::conj(v);
        }
    }

    double frobenius = 0;
    for (Complex v : a) {
        frobenius += std::norm(v);
    }
    const double threshold = kOffDiagonalTolerance * std::max(1.0, std::sqrt(frobenius));

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) >= threshold; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex apq = a[p * n + q];
                double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                // V = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on (p, q) zeroes a_pq,
                // where a_pq = |a_pq| e^{i phi}.
                Complex phase = std::conj(apq) / mag;
                double app = a[p * n + p].real();
                double aqq = a[q * n + q].real();
                double theta = (aqq - app) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                Complex vpp = c;
                Complex vpq = s;
                Complex vqp = -s * phase;
                Complex vqq = c * phase;

                // Columns: A <- A V.
                for (size_t k = 0; k < n; k++) {
                    Complex akp = a[k * n + p];
                    Complex akq = a[k * n + q];
                    a[k * n + p] = akp * vpp + akq * vqp;
                    a[k * n + q] = akp * vpq + akq * vqq;
                }
                // Rows: A <- V^dagger A.
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a[p * n + k];
                    Complex aqk = a[q * n + k];
                    a[p * n + k] = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a[q * n + k] = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a[p * n + q] = 0;
                a[q * n + p] = 0;
                a[p * n + p] = a[p * n + p].real();
                a[q * n + q] = a[q * n + q].real();
            }
        }
    }

    std::vector<double> eig(n);
    for (size_t i = 0; i < n; i++) {
        eig[i] = a[i * n + i].real();
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace pps
