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

#include "qcompat/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qcompat/errors.hpp"
#include "qcompat/paradox.hpp"

namespace qcompat {

namespace {

using Complex = std::complex<double>;

void check_state_cap(int num_sites) {
    if (num_sites > static_cast<int>(kMaxDenseSites)) {
        throw capacity_error(
            "state over " + std::to_string(num_sites) + " sites exceeds the cap of " +
            std::to_string(kMaxDenseSites));
    }
}

void require_sites(std::string_view name, int num_sites, bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(
            std::string(name) + " requires " + what + ", got " + std::to_string(num_sites));
    }
}

StateVector zero_state(int num_sites) {
    StateVector s;
    s.num_sites = num_sites;
    s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_sites);
    return s;
}

// Per-name site-count contract: 3 for the psi states, n >= 2 for phi1, odd n
// in [3, 11] for phi2 and phi3.
void check_name_sites(std::string_view name, int num_sites) {
    if (name.substr(0, 3) == "psi") {
        require_sites(name, num_sites, num_sites == 3, "exactly 3 sites");
    } else if (name == "phi1") {
        require_sites(name, num_sites, num_sites >= 2, "at least 2 sites");
        check_state_cap(num_sites);
    } else {
        require_sites(
            name, num_sites, num_sites >= 3 && num_sites <= 11 && num_sites % 2 == 1,
            "an odd site count in [3, 11]");
    }
}

std::vector<int> repeated(int value, int num_sites) {
    return std::vector<int>(static_cast<std::size_t>(num_sites), value);
}

}  // namespace

NamedState build_named(std::string_view name, int num_sites) {
    static constexpr std::string_view kNames[] = {
        "psi1", "psi2", "psi3", "psi4", "phi1", "phi2", "phi3"};
    bool known = false;
    for (std::string_view candidate : kNames) {
        known = known || candidate == name;
    }
    if (!known) {
        throw std::invalid_argument("unknown state name '" + std::string(name) + "'");
    }
    check_name_sites(name, num_sites);

    NamedState state;
    state.name = name;
    state.num_sites = num_sites;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (name == "psi1" || name == "phi1") {
        state.vector = zero_state(num_sites);
        state.vector.amplitudes[0] = inv_sqrt2;
        state.vector.amplitudes[(Eigen::Index{1} << num_sites) - 1] = inv_sqrt2;
    } else if (name == "psi2") {
        state.vector = zero_state(3);
        state.vector.amplitudes[0] = inv_sqrt2;
        state.vector.amplitudes[7] = Complex(0, -inv_sqrt2);
    } else if (name == "psi3" || name == "phi2") {
        state.vector = zero_state(num_sites);
        for (int m = 0; m <= num_sites; m += 2) {
            double sign = m / 2 % 2 == 0 ? 1.0 : -1.0;
            state.vector.amplitudes += sign * dicke_permutation_sum(num_sites, m).amplitudes;
        }
        state.vector.normalize();
    } else {
        // psi4 and phi3: even-weight sum plus (-1)^{(n-1)/2} i times the
        // odd-weight sum.
        state.vector = zero_state(num_sites);
        Complex odd_scale = (num_sites - 1) / 2 % 2 == 0 ? Complex(0, 1) : Complex(0, -1);
        for (int m = 0; m <= num_sites; m++) {
            Complex scale = m % 2 == 0 ? Complex(1) : odd_scale;
            state.vector.amplitudes += scale * dicke_permutation_sum(num_sites, m).amplitudes;
        }
        state.vector.normalize();
    }
    return state;
}

StateVector dicke_permutation_sum(int num_sites, int weight) {
    if (weight < 0 || weight > num_sites) {
        throw std::invalid_argument(
            "weight " + std::to_string(weight) + " outside [0, " + std::to_string(num_sites) +
            "]");
    }
    check_state_cap(num_sites);
    StateVector s = zero_state(num_sites);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << num_sites); b++) {
        if (std::popcount(b) == weight) {
            s.amplitudes[static_cast<Eigen::Index>(b)] = 1.0;
        }
    }
    return s;
}

std::vector<PauliString> state_family(std::string_view name, int num_sites) {
    check_name_sites(name, num_sites);
    if (name == "psi1") {
        return build_3qubit_family(1, 2, 3);
    }
    if (name == "psi2") {
        return build_3qubit_family(2, 1, 3);
    }
    if (name == "psi3") {
        return build_3qubit_family(3, 1, 2);
    }
    if (name == "psi4") {
        return build_3qubit_family(2, 3, 1);
    }
    if (name == "phi1") {
        if (num_sites < 3) {
            return {};
        }
        return build_nqubit_family(repeated(1, num_sites), repeated(2, num_sites));
    }
    if (name == "phi2") {
        return build_nqubit_family(repeated(3, num_sites), repeated(1, num_sites));
    }
    if (name == "phi3") {
        return build_nqubit_family(repeated(2, num_sites), repeated(3, num_sites));
    }
    throw std::invalid_argument("unknown state name '" + std::string(name) + "'");
}

std::vector<EigenRelation> verify_eigen_relations(
    const StateVector& state, const std::vector<PauliString>& observables) {
    std::vector<EigenRelation> table;
    table.reserve(observables.size());
    for (const PauliString& p : observables) {
        table.push_back({p, eigen_check(p, state)});
    }
    return table;
}

bool bipartite_entangled(const StateVector& state, std::size_t site_a, std::size_t site_b) {
    std::size_t n = static_cast<std::size_t>(state.num_sites);
    if (site_a >= n || site_b >= n || site_a == site_b) {
        throw std::invalid_argument(
            "sites " + std::to_string(site_a + 1) + ", " + std::to_string(site_b + 1) +
            " are not a distinct in-range pair");
    }
    check_state_cap(state.num_sites);

    // Reduced density operator of the pair: rho[(va vb), (wa wb)] sums
    // amp(va, vb, rest) * conj(amp(wa, wb, rest)) over the traced-out rest.
    auto with_bits = [&](std::uint64_t b, unsigned va, unsigned vb) {
        std::uint64_t bit_a = std::uint64_t{1} << (n - 1 - site_a);
        std::uint64_t bit_b = std::uint64_t{1} << (n - 1 - site_b);
        b = (b & ~bit_a) | (va ? bit_a : 0);
        b = (b & ~bit_b) | (vb ? bit_b : 0);
        return b;
    };
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); b++) {
        unsigned va = (b >> (n - 1 - site_a)) & 1;
        unsigned vb = (b >> (n - 1 - site_b)) & 1;
        for (unsigned wa = 0; wa < 2; wa++) {
            for (unsigned wb = 0; wb < 2; wb++) {
                rho(va * 2 + vb, wa * 2 + wb) +=
                    state.amplitudes[static_cast<Eigen::Index>(b)] *
                    std::conj(state.amplitudes[static_cast<Eigen::Index>(with_bits(b, wa, wb))]);
            }
        }
    }

    // Partial transpose on the second member of the pair.
    Eigen::Matrix4cd pt;
    for (unsigned va = 0; va < 2; va++) {
        for (unsigned vb = 0; vb < 2; vb++) {
            for (unsigned wa = 0; wa < 2; wa++) {
                for (unsigned wb = 0; wb < 2; wb++) {
                    pt(va * 2 + vb, wa * 2 + wb) = rho(va * 2 + wb, wa * 2 + vb);
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt);
    return solver.eigenvalues().minCoeff() < -kPptTol;
}

}  // namespace qcompat
