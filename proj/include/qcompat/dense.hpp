// Copyright 2026 The qcompat authors
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

#ifndef QCOMPAT_DENSE_HPP
#define QCOMPAT_DENSE_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <cstdint>
#include <optional>

#include "qcompat/pauli_string.hpp"

namespace qcompat {

// Brute-force ground truth, independent of the symbolic algebra: explicit
// matrices built by Kronecker products of the four 2x2 Pauli matrices, plus
// matrix-free state application. Site 0 is the leftmost tensor factor and
// therefore the most significant bit of a basis index.

using DenseMatrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

// Dense matrices are 2^n x 2^n; the sparse form holds 2^n entries and exists
// so that identity checks stay cheap well past the dense cap.
inline constexpr std::size_t kMaxDenseSites = 12;
inline constexpr std::size_t kMaxSparseSites = 20;

// Entrywise tolerance for algebraic identities on exactly representable
// entries, and the per-amplitude tolerance for eigenvalue checks on
// normalized states.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

Eigen::Matrix2cd pauli_matrix(Pauli p);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
SparseMatrix kron_sparse(const SparseMatrix& a, const SparseMatrix& b);

DenseMatrix to_dense(const PauliString& p);
SparseMatrix to_sparse(const PauliString& p);

DenseMatrix commutator_dense(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix anticommutator_dense(const DenseMatrix& a, const DenseMatrix& b);
SparseMatrix commutator_sparse(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix anticommutator_sparse(const SparseMatrix& a, const SparseMatrix& b);

struct StateVector {
    int num_sites = 0;
    Eigen::VectorXcd amplitudes;

    double norm() const {
        return amplitudes.norm();
    }

    // Rescales to unit norm; throws on a (near-)zero vector.
    void normalize();
};

StateVector basis_state(int num_sites, std::uint64_t index);

// P applied to s, not renormalized (Pauli strings preserve norm anyway). The
// matrix is never materialized: each basis amplitude moves to the X-flipped
// index and picks up a power of i.
StateVector apply(const PauliString& p, const StateVector& s);

// The eigenvalue lambda with apply(p, s) = lambda * s within kEigenTol per
// amplitude, or empty when s is not an eigenstate.
std::optional<std::complex<double>> eigen_check(const PauliString& p, const StateVector& s);

}  // namespace qcompat

#endif
