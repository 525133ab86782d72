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

#include "qcompat/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace qcompat {

namespace {

void check_same_size(const PauliString& a, const PauliString& b) {
    if (a.num_sites() != b.num_sites()) {
        throw std::invalid_argument(
            "site counts differ: " + std::to_string(a.num_sites()) + " vs " +
            std::to_string(b.num_sites()));
    }
}

// Word mask marking sites where both operands are non-identity and distinct,
// i.e. where the single-site operators anticommute.
std::uint64_t anticommuting_mask(
    std::uint64_t x1, std::uint64_t z1, std::uint64_t x2, std::uint64_t z2) {
    return (x1 | z1) & (x2 | z2) & ((x1 ^ x2) | (z1 ^ z2));
}

[[noreturn]] void parse_fail(std::size_t pos0, const std::string& what) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos0 + 1));
}

}  // namespace

PauliString PauliString::parse(std::string_view text) {
    std::size_t pos = 0;
    Phase phase;
    if (text.substr(0, 2) == "+i" || text.substr(0, 2) == "-i") {
        phase = Phase(text[0] == '+' ? 1 : 3);
        pos = 2;
    } else if (text.substr(0, 1) == "+" || text.substr(0, 1) == "-") {
        phase = Phase(text[0] == '+' ? 0 : 2);
        pos = 1;
    } else if (text.substr(0, 1) == "i") {
        phase = Phase(1);
        pos = 1;
    }
    if (pos >= text.size()) {
        parse_fail(pos, "expected Pauli letters or digits");
    }

    constexpr std::string_view letters = "IXYZ";
    constexpr std::string_view digits = "0123";
    bool letter_form = letters.find(text[pos]) != std::string_view::npos;
    if (!letter_form && digits.find(text[pos]) == std::string_view::npos) {
        parse_fail(pos, std::string("invalid character '") + text[pos] + "'");
    }

    PauliString result(text.size() - pos, phase);
    for (std::size_t p = 0; pos < text.size(); pos++, p++) {
        char c = text[pos];
        std::size_t v = (letter_form ? letters : digits).find(c);
        if (v == std::string_view::npos) {
            if ((letter_form ? digits : letters).find(c) != std::string_view::npos) {
                parse_fail(pos, "mixed letter and digit forms");
            }
            parse_fail(pos, std::string("invalid character '") + c + "'");
        }
        result.set_site(p, static_cast<Pauli>(v));
    }
    return result;
}

bool PauliString::is_identity_string() const {
    for (std::size_t w = 0; w < x_.size(); w++) {
        if (x_[w] | z_[w]) {
            return false;
        }
    }
    return true;
}

std::string PauliString::letters() const {
    std::string out(num_sites_, 'I');
    for (std::size_t p = 0; p < num_sites_; p++) {
        out[p] = pauli_letter(site(p));
    }
    return out;
}

std::string PauliString::str() const {
    return std::string(phase_.prefix()) + letters();
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    PauliString out(a.num_sites(), a.phase() * b.phase());
    // Per site, sigma_a sigma_b = i^g sigma_c with (x3, z3) = (x1^x2, z1^z2)
    // and g = x1*z1 + x2*z2 - x3*z3 + 2*(z1 & x2) mod 4; the terms are summed
    // word-parallel via popcounts.
    std::int64_t g = 0;
    std::vector<std::uint64_t> x(a.x_words().size());
    std::vector<std::uint64_t> z(a.x_words().size());
    for (std::size_t w = 0; w < x.size(); w++) {
        std::uint64_t x1 = a.x_words()[w], z1 = a.z_words()[w];
        std::uint64_t x2 = b.x_words()[w], z2 = b.z_words()[w];
        x[w] = x1 ^ x2;
        z[w] = z1 ^ z2;
        g += std::popcount(x1 & z1) + std::popcount(x2 & z2) - std::popcount(x[w] & z[w]) +
             2 * std::popcount(z1 & x2);
    }
    out.set_phase(out.phase() * Phase(static_cast<int>(g % 4)));
    for (std::size_t p = 0; p < a.num_sites(); p++) {
        out.set_site(p, pauli_from_xz((x[p >> 6] >> (p & 63)) & 1, (z[p >> 6] >> (p & 63)) & 1));
    }
    return out;
}

bool global_commutes(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < a.x_words().size(); w++) {
        parity ^= std::popcount(a.x_words()[w] & b.z_words()[w]) ^
                  std::popcount(a.z_words()[w] & b.x_words()[w]);
    }
    return (parity & 1) == 0;
}

std::vector<std::size_t> local_noncommuting_sites(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    std::vector<std::size_t> sites;
    for (std::size_t w = 0; w < a.x_words().size(); w++) {
        std::uint64_t m =
            anticommuting_mask(a.x_words()[w], a.z_words()[w], b.x_words()[w], b.z_words()[w]);
        while (m) {
            sites.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
            m &= m - 1;
        }
    }
    return sites;
}

std::size_t count_noncommuting_sites(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    std::size_t count = 0;
    for (std::size_t w = 0; w < a.x_words().size(); w++) {
        count += static_cast<std::size_t>(std::popcount(
            anticommuting_mask(a.x_words()[w], a.z_words()[w], b.x_words()[w], b.z_words()[w])));
    }
    return count;
}

std::size_t count_differing_sites(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    std::size_t count = 0;
    for (std::size_t w = 0; w < a.x_words().size(); w++) {
        count += static_cast<std::size_t>(std::popcount(
            (a.x_words()[w] ^ b.x_words()[w]) | (a.z_words()[w] ^ b.z_words()[w])));
    }
    return count;
}

bool same_sites(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    return a.x_words() == b.x_words() && a.z_words() == b.z_words();
}

}  // namespace qcompat
