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

#ifndef QCOMPAT_PAULI_STRING_HPP
#define QCOMPAT_PAULI_STRING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcompat/pauli.hpp"

namespace qcompat {

// An n-site tensor product of single-site Pauli operators with a global phase
// in {+1, +i, -1, -i}. Site p is the p-th tensor factor counting from the
// left; sites are stored as symplectic bit pairs packed into 64-bit words
// (site p lives at bit p % 64 of word p / 64). Bits past num_sites stay zero,
// so whole-word equality and popcount tricks are valid.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::size_t num_sites, Phase phase = Phase())
        : num_sites_(num_sites),
          phase_(phase),
          x_((num_sites + 63) / 64, 0),
          z_((num_sites + 63) / 64, 0) {}

    // Text form: optional phase prefix ("+", "-", "i", "+i", "-i") followed by
    // at least one letter from {I,X,Y,Z} or, alternatively, at least one digit
    // from {0,1,2,3}. Mixing letters and digits is an error. Error messages
    // name the 1-based offending position in the full input.
    static PauliString parse(std::string_view text);

    std::size_t num_sites() const {
        return num_sites_;
    }

    Phase phase() const {
        return phase_;
    }

    void set_phase(Phase phase) {
        phase_ = phase;
    }

    Pauli site(std::size_t p) const {
        return pauli_from_xz((x_[p >> 6] >> (p & 63)) & 1, (z_[p >> 6] >> (p & 63)) & 1);
    }

    void set_site(std::size_t p, Pauli v) {
        std::uint64_t bit = std::uint64_t{1} << (p & 63);
        x_[p >> 6] = (x_[p >> 6] & ~bit) | (pauli_x_bit(v) ? bit : 0);
        z_[p >> 6] = (z_[p >> 6] & ~bit) | (pauli_z_bit(v) ? bit : 0);
    }

    // True when every site is the identity (the phase is ignored).
    bool is_identity_string() const;

    // Letters only, e.g. "XYI".
    std::string letters() const;

    // Canonical form: explicit phase prefix plus letters, e.g. "+XYI", "-iZZ".
    // parse(str()) reproduces the string exactly.
    std::string str() const;

    const std::vector<std::uint64_t>& x_words() const {
        return x_;
    }

    const std::vector<std::uint64_t>& z_words() const {
        return z_;
    }

    bool operator==(const PauliString&) const = default;

  private:
    std::size_t num_sites_ = 0;
    Phase phase_;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
};

// Sitewise product with all single-site phases accumulated into the global
// phase. The result is never zero. Throws std::invalid_argument on site-count
// mismatch.
PauliString multiply(const PauliString& a, const PauliString& b);

// True iff the commutator of the two strings vanishes as a whole matrix.
// Computed as the symplectic parity: the number of anticommuting sites is
// even. Phases never affect the verdict.
bool global_commutes(const PauliString& a, const PauliString& b);

// Sites p (0-based, ascending) where the single-site operators anticommute.
std::vector<std::size_t> local_noncommuting_sites(const PauliString& a, const PauliString& b);

std::size_t count_noncommuting_sites(const PauliString& a, const PauliString& b);

// Sites where the two strings carry different letters.
std::size_t count_differing_sites(const PauliString& a, const PauliString& b);

// True when both strings carry the same letter at every site (phases ignored).
bool same_sites(const PauliString& a, const PauliString& b);

}  // namespace qcompat

#endif
