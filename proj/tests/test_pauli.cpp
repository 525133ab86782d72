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

#include "qcompat/pauli.hpp"

#include <string>

#include "doctest.h"
#include "qcompat/dense.hpp"

namespace qcompat {
namespace {

constexpr Pauli kAll[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

TEST_CASE("single products match the frozen table") {
    // Rows a, columns b: exponent of i and resulting letter for a * b.
    struct Entry {
        int exp;
        Pauli out;
    };
    constexpr Entry kTable[4][4] = {
        {{0, Pauli::I}, {0, Pauli::X}, {0, Pauli::Y}, {0, Pauli::Z}},
        {{0, Pauli::X}, {0, Pauli::I}, {1, Pauli::Z}, {3, Pauli::Y}},
        {{0, Pauli::Y}, {3, Pauli::Z}, {0, Pauli::I}, {1, Pauli::X}},
        {{0, Pauli::Z}, {1, Pauli::Y}, {3, Pauli::X}, {0, Pauli::I}},
    };
    for (Pauli a : kAll) {
        for (Pauli b : kAll) {
            SingleProduct got = single_product(a, b);
            const Entry& want = kTable[static_cast<int>(a)][static_cast<int>(b)];
            CAPTURE(pauli_letter(a));
            CAPTURE(pauli_letter(b));
            CHECK(got.phase.exponent() == want.exp);
            CHECK(got.result == want.out);
        }
    }
}

TEST_CASE("single products match explicit 2x2 matrices") {
    for (Pauli a : kAll) {
        for (Pauli b : kAll) {
            SingleProduct got = single_product(a, b);
            Eigen::Matrix2cd lhs = pauli_matrix(a) * pauli_matrix(b);
            Eigen::Matrix2cd rhs = got.phase.value() * pauli_matrix(got.result);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < kAlgebraTol);
        }
    }
}

TEST_CASE("every single-site pair either commutes or anticommutes, never both") {
    for (Pauli a : kAll) {
        for (Pauli b : kAll) {
            bool c = commutes_single(a, b);
            bool ac = anticommutes_single(a, b);
            CHECK(c != ac);
            // Against the matrices.
            Eigen::Matrix2cd comm = commutator_dense(pauli_matrix(a), pauli_matrix(b));
            Eigen::Matrix2cd anti = anticommutator_dense(pauli_matrix(a), pauli_matrix(b));
            CHECK(c == (comm.cwiseAbs().maxCoeff() < kAlgebraTol));
            CHECK(ac == (anti.cwiseAbs().maxCoeff() < kAlgebraTol));
        }
    }
}

TEST_CASE("phase arithmetic wraps mod 4") {
    CHECK(Phase(5) == Phase(1));
    CHECK(Phase(-1) == Phase(3));
    CHECK((Phase(1) * Phase(3)).exponent() == 0);
    CHECK((Phase(1) / Phase(3)).exponent() == 2);
    CHECK(Phase(1).negated() == Phase(3));
    CHECK(Phase(0).is_real());
    CHECK(!Phase(1).is_real());
    CHECK(Phase(2).value() == std::complex<double>(-1.0, 0.0));
    CHECK(Phase(3).value() == std::complex<double>(0.0, -1.0));
    CHECK(Phase(0).prefix() == "+");
    CHECK(Phase(1).prefix() == "+i");
    CHECK(Phase(2).prefix() == "-");
    CHECK(Phase(3).prefix() == "-i");
    CHECK(Phase(3).scalar_label() == "-i");
}

TEST_CASE("letter and digit spellings") {
    CHECK(pauli_letter(Pauli::I) == 'I');
    CHECK(pauli_letter(Pauli::Y) == 'Y');
    CHECK(pauli_digit(Pauli::I) == '0');
    CHECK(pauli_digit(Pauli::Z) == '3');
    for (Pauli p : kAll) {
        CHECK(pauli_from_xz(pauli_x_bit(p), pauli_z_bit(p)) == p);
    }
}

}  // namespace
}  // namespace qcompat
