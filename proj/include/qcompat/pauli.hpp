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

#ifndef QCOMPAT_PAULI_HPP
#define QCOMPAT_PAULI_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace qcompat {

// Single-site Pauli operator, indexed 0..3 = I, X, Y, Z.
enum class Pauli : std::uint8_t {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
};

constexpr char pauli_letter(Pauli p) {
    return "IXYZ"[static_cast<unsigned>(p)];
}

constexpr char pauli_digit(Pauli p) {
    return "0123"[static_cast<unsigned>(p)];
}

// Symplectic bit pair: I = (0,0), X = (1,0), Y = (1,1), Z = (0,1).
constexpr unsigned pauli_x_bit(Pauli p) {
    unsigned v = static_cast<unsigned>(p);
    return (v == 1 || v == 2) ? 1u : 0u;
}

constexpr unsigned pauli_z_bit(Pauli p) {
    unsigned v = static_cast<unsigned>(p);
    return (v == 2 || v == 3) ? 1u : 0u;
}

constexpr Pauli pauli_from_xz(unsigned x, unsigned z) {
    constexpr std::array<std::array<Pauli, 2>, 2> table{{
        {Pauli::I, Pauli::X},
        {Pauli::Z, Pauli::Y},
    }};
    return table[z & 1][x & 1];
}

// Power of i attached to a Pauli product, stored as the exponent mod 4.
class Phase {
  public:
    constexpr Phase() = default;
    constexpr explicit Phase(int exponent)
        : exp_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {}

    constexpr int exponent() const {
        return exp_;
    }

    constexpr bool is_real() const {
        return (exp_ & 1) == 0;
    }

    constexpr Phase operator*(Phase rhs) const {
        return Phase(exp_ + rhs.exp_);
    }

    constexpr Phase& operator*=(Phase rhs) {
        exp_ = static_cast<std::uint8_t>((exp_ + rhs.exp_) & 3);
        return *this;
    }

    // Phase ratio: i^a / i^b.
    constexpr Phase operator/(Phase rhs) const {
        return Phase(exp_ - rhs.exp_);
    }

    constexpr Phase negated() const {
        return Phase(exp_ + 2);
    }

    constexpr std::complex<double> value() const {
        switch (exp_) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }

    // Prefix used in the canonical string form: "+", "+i", "-", "-i".
    constexpr std::string_view prefix() const {
        constexpr std::array<std::string_view, 4> names{"+", "+i", "-", "-i"};
        return names[exp_];
    }

    // Standalone scalar spelling: "+1", "+i", "-1", "-i".
    constexpr std::string_view scalar_label() const {
        constexpr std::array<std::string_view, 4> names{"+1", "+i", "-1", "-i"};
        return names[exp_];
    }

    friend constexpr bool operator==(Phase, Phase) = default;

  private:
    std::uint8_t exp_ = 0;
};

struct SingleProduct {
    Phase phase;
    Pauli result;
};

// sigma_a * sigma_b = i^g * sigma_c with c = a XOR b on the symplectic bits and
// g = x1*z1 + x2*z2 - x3*z3 + 2*(z1 & x2)  (mod 4), where (x3, z3) = (x1^x2, z1^z2).
constexpr SingleProduct single_product(Pauli a, Pauli b) {
    unsigned x1 = pauli_x_bit(a), z1 = pauli_z_bit(a);
    unsigned x2 = pauli_x_bit(b), z2 = pauli_z_bit(b);
    unsigned x3 = x1 ^ x2, z3 = z1 ^ z2;
    int g = static_cast<int>((x1 & z1) + (x2 & z2)) - static_cast<int>(x3 & z3) +
            2 * static_cast<int>(z1 & x2);
    return {Phase(g), pauli_from_xz(x3, z3)};
}

// [a, b] = 0 exactly when the two operators are equal or one is the identity.
constexpr bool commutes_single(Pauli a, Pauli b) {
    return a == b || a == Pauli::I || b == Pauli::I;
}

// {a, b} = 0 exactly when both are non-identity and distinct.
constexpr bool anticommutes_single(Pauli a, Pauli b) {
    return a != b && a != Pauli::I && b != Pauli::I;
}

}  // namespace qcompat

#endif
