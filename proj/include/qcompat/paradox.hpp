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

#ifndef QCOMPAT_PARADOX_HPP
#define QCOMPAT_PARADOX_HPP

#include <array>
#include <utility>
#include <vector>

#include "qcompat/dense.hpp"
#include "qcompat/pauli_string.hpp"

namespace qcompat {

// A Kochen-Specker-style sign paradox: two ordered products of observables
// that any noncontextual value assignment forces to the same number, while
// the operator algebra forces them to differ by a sign.

// Per-site record of the two ordered local operator sequences, the phase each
// accumulates when multiplied out left to right, and the resulting local
// operator.
struct SiteTrace {
    std::vector<Pauli> sequence_a;
    std::vector<Pauli> sequence_b;
    Phase phase_a;
    Phase phase_b;
    Pauli local_a = Pauli::I;
    Pauli local_b = Pauli::I;
};

struct ParadoxCertificate {
    std::vector<PauliString> side_a;
    std::vector<PauliString> side_b;
    bool commutation_ok = false;  // each side is internally pairwise commuting
    PauliString product_a;        // ordered product of side_a
    PauliString product_b;
    Phase sign_a;  // the products' global phases
    Phase sign_b;
    bool paradox = false;
    std::vector<SiteTrace> site_traces;
};

// multiply(multiply(p, q), r) after checking that the three observables are
// pairwise globally compatible; throws std::invalid_argument naming the
// offending pair otherwise.
PauliString triple_product(const PauliString& p, const PauliString& q, const PauliString& r);

// The two mutually commuting two-qubit triples whose full products carry
// opposite signs: (XY, YX, ZZ) and (XX, YY, ZZ). The triples are not jointly
// compatible with each other.
std::pair<std::array<PauliString, 3>, std::array<PauliString, 3>> mermin_triples();

// The five mutually commuting three-site observables built from pairwise
// distinct indexes j, k, l in {1,2,3}: sigma_jjj, sigma_jkk, sigma_kjk,
// sigma_kkj, sigma_ll0.
std::vector<PauliString> build_3qubit_family(int j, int k, int l);

// The same five observables arranged into the two product sequences whose
// values disagree by a sign: (sigma_ll0, sigma_jjj, sigma_kkj) and
// (sigma_ll0, sigma_kjk, sigma_jkk).
std::pair<std::vector<PauliString>, std::vector<PauliString>> build_3qubit_partition(
    int j, int k, int l);

// The n+1 mutually commuting n-site observables: sigma over jvec, followed by
// the n variants that replace j with k at two cyclically adjacent positions,
// from the last adjacent pair down to the first and then the wrap-around
// pair. Pairs of family members differ at 2 or 4 positions. Requires n >= 3
// and, at every position, distinct nonzero jvec/kvec entries.
std::vector<PauliString> build_nqubit_family(
    const std::vector<int>& jvec, const std::vector<int>& kvec);

// Certifies the sign paradox for the two ordered observable lists. Each side
// must be internally pairwise globally compatible (throws otherwise; the
// sides need not be compatible with each other). The certificate reports
// paradox = true iff
//   - the two products are equal strings with phases differing by a sign,
//   - at every site, every non-identity operator occurs with the same
//     multiplicity parity in both sequences (so noncontextual local values
//     multiply to the same number on both sides), and
//   - either both products are identity strings, or all observables of both
//     sides are mutually globally compatible (so a joint eigenstate fixes
//     both product values).
ParadoxCertificate verify_ks(
    const std::vector<PauliString>& side_a, const std::vector<PauliString>& side_b);

// Per site, the ratio of the two accumulated local phases (a power of i).
// Requires the two local products to agree sitewise as operators; throws
// std::invalid_argument otherwise. A paradox shows up as an odd number of
// sites with ratio -1.
std::vector<Phase> local_permutation_parity(const std::vector<SiteTrace>& traces);

// The joint eigenvector selected by applying the projectors
// (identity + sign * P) / 2 to the first standard basis vector that survives
// them all, then normalizing: deterministic even when the joint eigenspace is
// degenerate. Observables must be pairwise globally compatible and carry real
// phases; signs must be +1 or -1. When no basis vector survives, the signs
// are inconsistent and the error names a violated product constraint.
StateVector common_eigenstate(
    const std::vector<PauliString>& observables, const std::vector<int>& signs);

}  // namespace qcompat

#endif
