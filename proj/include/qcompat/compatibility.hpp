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

#ifndef QCOMPAT_COMPATIBILITY_HPP
#define QCOMPAT_COMPATIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcompat/pauli_string.hpp"

namespace qcompat {

// Two observables can commute as whole matrices while anticommuting at
// individual sites; such sites hide local noncommutativity behind global
// compatibility. The report captures both levels plus the standard case
// labels for two and three sites.
struct CompatibilityReport {
    bool globally_compatible = false;
    std::vector<std::size_t> noncommuting_sites;  // ascending, 0-based
    std::size_t hidden_count = 0;                 // always |noncommuting_sites|
    bool fully_nontrivial_pair = false;
    bool dichotomic = false;  // equal strings up to an overall sign
    // "2.i" | "2.ii" for two sites, "3.i".."3.iv" for three sites (assigned by
    // the count of anticommuting sites), otherwise "hidden=<count>,<parity>".
    std::string case_label;
};

// True iff no site carries the identity.
bool is_fully_nontrivial(const PauliString& p);

CompatibilityReport classify_pair(const PauliString& p, const PauliString& q);

// True iff every pair in the list commutes globally with no anticommuting
// sites at all: compatibility with nothing hidden behind it.
bool mutually_compatible_without_hidden(const std::vector<PauliString>& observables);

struct SweepResult {
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<PauliString, PauliString>> counterexample;

    bool verified() const {
        return !counterexample.has_value();
    }
};

// Exhaustive sweeps over fully nontrivial letter pairs (3^{2n} of them).
// Workers partition the index range; the reported counterexample is always
// the first in enumeration order, so the jobs count never changes the result.
inline constexpr int kMinSweepSites = 2;
inline constexpr int kMaxSweepSites = 5;

// Checks, for every fully nontrivial pair: no anticommuting sites implies
// sitewise equal letters, and global compatibility implies an even number of
// anticommuting sites.
SweepResult verify_parity_law(int num_sites, int jobs = 1);

// Checks that globally compatible fully nontrivial pairs differ at an even
// number of sites.
SweepResult verify_even_difference(int num_sites, int jobs = 1);

// All 256 two-site letter pairs: global compatibility holds iff every site
// commutes or every site anticommutes.
SweepResult verify_pair_cases();

// All 729 fully nontrivial three-site pairs: global compatibility holds iff
// the case label is 3.ii or 3.iv.
SweepResult verify_triple_cases();

// All letter pairs at num_sites in {2, 3}: exactly one term across the
// commutator and anticommutator expansions is nonzero.
SweepResult verify_unique_term_law(int num_sites);

}  // namespace qcompat

#endif
