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

#ifndef QCOMPAT_DECOMPOSITION_HPP
#define QCOMPAT_DECOMPOSITION_HPP

#include <complex>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "qcompat/pauli_string.hpp"

namespace qcompat {

// The commutator [P, Q] (and likewise the anticommutator {P, Q}) of two
// n-site tensor products expands into 2^{n-1} terms, one per assignment of a
// bracket to every site: the assignment picks the sites that receive the
// single-site commutator, the remaining sites receive the anticommutator, and
// the commutator (anticommutator) expansion uses exactly the assignments of
// odd (even) size. Each term carries a 1/2^{n-1} prefactor.

enum class BracketKind : std::uint8_t {
    commutator,
    anticommutator,
};

// Exact scalar-times-string value 2^pow2 * i^phase * string, or zero. The
// string member never carries a phase of its own.
struct ScaledPauli {
    bool zero = true;
    int pow2 = 0;
    Phase phase;
    PauliString string;

    std::complex<double> scalar() const;

    // "0", "2i*ZI", "-2*ZZ", "1*II", ...
    std::string str() const;

    bool operator==(const ScaledPauli&) const = default;
};

struct DecompositionTerm {
    std::vector<std::size_t> commutator_sites;  // ascending, 0-based
    bool is_zero = true;
    ScaledPauli value;
};

// Lazy forward range over the terms of one bracket expansion, in ascending
// order of the assignment-set bit mask (site p = bit p). Terms are evaluated
// on dereference; nothing is stored. Site count is capped at
// kMaxDecompositionSites because the range is exponentially long.
inline constexpr std::size_t kMaxDecompositionSites = 16;

class DecompositionRange {
  public:
    DecompositionRange(const PauliString& p, const PauliString& q, BracketKind kind);

    std::size_t size() const {
        return std::size_t{1} << (p_.num_sites() - 1);
    }

    class iterator {
      public:
        using value_type = DecompositionTerm;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        DecompositionTerm operator*() const;

        iterator& operator++();

        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }

        bool operator==(const iterator& other) const {
            return mask_ == other.mask_;
        }

      private:
        friend class DecompositionRange;
        iterator(const DecompositionRange* range, std::uint32_t mask)
            : range_(range), mask_(mask) {}

        const DecompositionRange* range_ = nullptr;
        std::uint32_t mask_ = 0;
    };

    iterator begin() const;
    iterator end() const;

  private:
    friend class iterator;
    PauliString p_, q_;
    BracketKind kind_;
    std::uint32_t nonzero_mask_ = 0;  // the anticommuting-site set of (p, q)
};

DecompositionRange decompose_commutator(const PauliString& p, const PauliString& q);
DecompositionRange decompose_anticommutator(const PauliString& p, const PauliString& q);

// The single nonzero term across both expansions. Its assignment is exactly
// the anticommuting-site set; it belongs to the commutator expansion iff that
// set has odd size. No site-count cap: the term is computed directly.
struct UniqueTerm {
    BracketKind which = BracketKind::anticommutator;
    DecompositionTerm term;
};

UniqueTerm unique_nonzero_term(const PauliString& p, const PauliString& q);

}  // namespace qcompat

#endif
