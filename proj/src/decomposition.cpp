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

#include "qcompat/decomposition.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qcompat/errors.hpp"

namespace qcompat {

namespace {

// A term with every bracket nonzero evaluates to its prefactor times a factor
// 2 per site (each nonzero single-site bracket equals twice the product), so
// the value is always 2^{n - (n-1)} * P * Q = 2 * P * Q with the phase split
// off the string.
ScaledPauli nonzero_term_value(const PauliString& p, const PauliString& q) {
    PauliString product = multiply(p, q);
    ScaledPauli value;
    value.zero = false;
    value.pow2 = 1;
    value.phase = product.phase();
    product.set_phase(Phase());
    value.string = product;
    return value;
}

std::vector<std::size_t> mask_sites(std::uint32_t mask) {
    std::vector<std::size_t> sites;
    while (mask) {
        sites.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return sites;
}

unsigned wanted_parity(BracketKind kind) {
    return kind == BracketKind::commutator ? 1u : 0u;
}

}  // namespace

std::complex<double> ScaledPauli::scalar() const {
    if (zero) {
        return 0.0;
    }
    return std::ldexp(1.0, pow2) * phase.value();
}

std::string ScaledPauli::str() const {
    if (zero) {
        return "0";
    }
    std::string mag = pow2 >= 0 ? std::to_string(std::int64_t{1} << pow2)
                                : "1/" + std::to_string(std::int64_t{1} << -pow2);
    std::string out;
    if (!phase.is_real()) {
        out = mag == "1" ? "i" : mag + "i";
    } else {
        out = mag;
    }
    if (phase.exponent() >= 2) {
        out = "-" + out;
    }
    return out + "*" + string.letters();
}

DecompositionRange::DecompositionRange(const PauliString& p, const PauliString& q, BracketKind kind)
    : p_(p), q_(q), kind_(kind) {
    if (p.num_sites() != q.num_sites()) {
        throw std::invalid_argument(
            "site counts differ: " + std::to_string(p.num_sites()) + " vs " +
            std::to_string(q.num_sites()));
    }
    if (p.num_sites() == 0) {
        throw std::invalid_argument("expansion needs at least one site");
    }
    if (p.num_sites() > kMaxDecompositionSites) {
        throw capacity_error(
            "expansion over " + std::to_string(p.num_sites()) + " sites exceeds the cap of " +
            std::to_string(kMaxDecompositionSites));
    }
    for (std::size_t s : local_noncommuting_sites(p, q)) {
        nonzero_mask_ |= std::uint32_t{1} << s;
    }
}

DecompositionTerm DecompositionRange::iterator::operator*() const {
    DecompositionTerm term;
    term.commutator_sites = mask_sites(mask_);
    // A single-site commutator vanishes exactly where the operators commute
    // and a single-site anticommutator exactly where they anticommute, so the
    // term is nonzero iff the assignment equals the anticommuting-site set.
    term.is_zero = mask_ != range_->nonzero_mask_;
    if (!term.is_zero) {
        term.value = nonzero_term_value(range_->p_, range_->q_);
    }
    return term;
}

DecompositionRange::iterator& DecompositionRange::iterator::operator++() {
    std::uint32_t limit = std::uint32_t{1} << range_->p_.num_sites();
    do {
        mask_++;
    } while (mask_ < limit &&
             (static_cast<unsigned>(std::popcount(mask_)) & 1) != wanted_parity(range_->kind_));
    return *this;
}

DecompositionRange::iterator DecompositionRange::begin() const {
    iterator it(this, 0);
    if (wanted_parity(kind_) != 0) {
        ++it;
    }
    return it;
}

DecompositionRange::iterator DecompositionRange::end() const {
    return iterator(this, std::uint32_t{1} << p_.num_sites());
}

DecompositionRange decompose_commutator(const PauliString& p, const PauliString& q) {
    return DecompositionRange(p, q, BracketKind::commutator);
}

DecompositionRange decompose_anticommutator(const PauliString& p, const PauliString& q) {
    return DecompositionRange(p, q, BracketKind::anticommutator);
}

UniqueTerm unique_nonzero_term(const PauliString& p, const PauliString& q) {
    UniqueTerm result;
    result.term.commutator_sites = local_noncommuting_sites(p, q);
    result.term.is_zero = false;
    result.term.value = nonzero_term_value(p, q);
    result.which = (result.term.commutator_sites.size() & 1) ? BracketKind::commutator
                                                             : BracketKind::anticommutator;
    return result;
}

}  // namespace qcompat
