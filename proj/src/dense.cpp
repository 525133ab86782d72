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

#include "qcompat/dense.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "qcompat/errors.hpp"

namespace qcompat {

namespace {

using Complex = std::complex<double>;

void check_site_cap(std::size_t num_sites, std::size_t cap, const char* what) {
    if (num_sites > cap) {
        throw capacity_error(
            std::string(what) + " over " + std::to_string(num_sites) +
            " sites exceeds the cap of " + std::to_string(cap));
    }
}

void check_equal_dims(Eigen::Index a, Eigen::Index b) {
    if (a != b) {
        throw std::invalid_argument(
            "matrix dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

SparseMatrix kron_sparse(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(a.nonZeros()) * static_cast<std::size_t>(b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ka++) {
        for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); kb++) {
                for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
                    triplets.emplace_back(
                        ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                        ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

DenseMatrix to_dense(const PauliString& p) {
    check_site_cap(p.num_sites(), kMaxDenseSites, "dense matrix");
    DenseMatrix out(1, 1);
    out(0, 0) = p.phase().value();
    for (std::size_t s = 0; s < p.num_sites(); s++) {
        out = kron(out, DenseMatrix(pauli_matrix(p.site(s))));
    }
    return out;
}

SparseMatrix to_sparse(const PauliString& p) {
    check_site_cap(p.num_sites(), kMaxSparseSites, "sparse matrix");
    SparseMatrix out(1, 1);
    out.insert(0, 0) = p.phase().value();
    out.makeCompressed();
    for (std::size_t s = 0; s < p.num_sites(); s++) {
        out = kron_sparse(out, pauli_matrix(p.site(s)).sparseView());
    }
    return out;
}

DenseMatrix commutator_dense(const DenseMatrix& a, const DenseMatrix& b) {
    check_equal_dims(a.rows(), b.rows());
    return a * b - b * a;
}

DenseMatrix anticommutator_dense(const DenseMatrix& a, const DenseMatrix& b) {
    check_equal_dims(a.rows(), b.rows());
    return a * b + b * a;
}

SparseMatrix commutator_sparse(const SparseMatrix& a, const SparseMatrix& b) {
    check_equal_dims(a.rows(), b.rows());
    return SparseMatrix(a * b) - SparseMatrix(b * a);
}

SparseMatrix anticommutator_sparse(const SparseMatrix& a, const SparseMatrix& b) {
    check_equal_dims(a.rows(), b.rows());
    return SparseMatrix(a * b) + SparseMatrix(b * a);
}

void StateVector::normalize() {
    double n = norm();
    if (n < 1e-12) {
        throw std::runtime_error("cannot normalize a zero vector");
    }
    amplitudes /= n;
}

StateVector basis_state(int num_sites, std::uint64_t index) {
    check_site_cap(static_cast<std::size_t>(num_sites), kMaxDenseSites, "state");
    if (index >> num_sites != 0) {
        throw std::invalid_argument(
            "basis index " + std::to_string(index) + " needs more than " +
            std::to_string(num_sites) + " sites");
    }
    StateVector s;
    s.num_sites = num_sites;
    s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_sites);
    s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

StateVector apply(const PauliString& p, const StateVector& s) {
    if (static_cast<std::size_t>(s.num_sites) != p.num_sites()) {
        throw std::invalid_argument(
            "operator has " + std::to_string(p.num_sites()) + " sites but the state has " +
            std::to_string(s.num_sites));
    }
    check_site_cap(p.num_sites(), kMaxDenseSites, "state application");
    std::size_t n = p.num_sites();
    // Basis masks: site s maps to bit n-1-s of a basis index.
    std::uint64_t xmask = 0, zmask = 0;
    int y_count = 0;
    for (std::size_t s2 = 0; s2 < n; s2++) {
        unsigned xb = pauli_x_bit(p.site(s2)), zb = pauli_z_bit(p.site(s2));
        xmask |= std::uint64_t{xb} << (n - 1 - s2);
        zmask |= std::uint64_t{zb} << (n - 1 - s2);
        y_count += static_cast<int>(xb & zb);
    }
    // sigma_(x,z) = i^{xz} X^x Z^z sitewise, so basis state |b> maps to
    // i^{phase + #Y + 2*popcount(b & zmask)} |b ^ xmask>.
    StateVector out;
    out.num_sites = s.num_sites;
    out.amplitudes = Eigen::VectorXcd::Zero(s.amplitudes.size());
    int base = p.phase().exponent() + y_count;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); b++) {
        Phase ph(base + 2 * std::popcount(b & zmask));
        out.amplitudes[static_cast<Eigen::Index>(b ^ xmask)] =
            s.amplitudes[static_cast<Eigen::Index>(b)] * ph.value();
    }
    return out;
}

std::optional<std::complex<double>> eigen_check(const PauliString& p, const StateVector& s) {
    StateVector mapped = apply(p, s);
    Eigen::Index pivot = 0;
    s.amplitudes.cwiseAbs().maxCoeff(&pivot);
    std::complex<double> lambda = mapped.amplitudes[pivot] / s.amplitudes[pivot];
    if ((mapped.amplitudes - lambda * s.amplitudes).cwiseAbs().maxCoeff() > kEigenTol) {
        return std::nullopt;
    }
    return lambda;
}

}  // namespace qcompat
