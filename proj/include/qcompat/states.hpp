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

#ifndef QCOMPAT_STATES_HPP
#define QCOMPAT_STATES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcompat/dense.hpp"
#include "qcompat/pauli_string.hpp"

namespace qcompat {

// Named entangled states and the observable families they stabilize. |0> is
// the +1 eigenstate of the single-site Z operator, and basis index bit
// n-1-s holds site s, so |011> has index 3.
//
// The three-site states (all on 3 sites):
//   psi1 = (|000> + |111>) / sqrt(2)
//   psi2 = (|000> - i|111>) / sqrt(2)
//   psi3 = (|000> - |011> - |101> - |110>) / 2
//   psi4 = (sum of even-weight states - i * sum of odd-weight states) / (2*sqrt(2))
// The parameterized families:
//   phi1(n) = GHZ, n >= 2
//   phi2(n) = normalized sum over even m of (-1)^{m/2} * (weight-m Dicke sum), odd n in [3, 11]
//   phi3(n) = normalized [sum over even m + (-1)^{(n-1)/2} * i * sum over odd m], odd n in [3, 11]
// phi2(3) equals psi3 exactly and phi3(3) equals psi4 exactly.
struct NamedState {
    std::string name;
    int num_sites = 0;
    StateVector vector;
};

NamedState build_named(std::string_view name, int num_sites);

// Unnormalized equal-amplitude sum over all basis states of Hamming weight
// `weight`.
StateVector dicke_permutation_sum(int num_sites, int weight);

// The observable family each named state is a joint eigenstate of. The psi
// states use the five-member three-site families (index triples (1,2,3),
// (2,1,3), (3,1,2), (2,3,1) for psi1..psi4); phi1, phi2, phi3 use the n+1
// member families with all-equal index vectors (1,2), (3,1), (2,3). Empty for
// phi1 below 3 sites, where no such family exists.
std::vector<PauliString> state_family(std::string_view name, int num_sites);

struct EigenRelation {
    PauliString observable;
    std::optional<std::complex<double>> eigenvalue;
};

std::vector<EigenRelation> verify_eigen_relations(
    const StateVector& state, const std::vector<PauliString>& observables);

// Negative partial-transpose eigenvalues below this threshold certify
// entanglement of a two-site reduced state; the test is conclusive in both
// directions at this dimension.
inline constexpr double kPptTol = 1e-10;

// Traces out all sites except the given pair and applies the partial
// transpose test to the reduced two-site density operator.
bool bipartite_entangled(const StateVector& state, std::size_t site_a, std::size_t site_b);

}  // namespace qcompat

#endif
