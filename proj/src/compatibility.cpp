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

#include "qcompat/compatibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "qcompat/decomposition.hpp"
#include "qcompat/errors.hpp"

namespace qcompat {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; i++) {
        out *= base;
    }
    return out;
}

// The idx-th string (base-3 digits, site 0 most significant) over letters
// {X, Y, Z}: the fully nontrivial strings in lexicographic order.
PauliString nontrivial_string(int num_sites, std::uint64_t idx) {
    PauliString p(static_cast<std::size_t>(num_sites));
    for (int s = num_sites - 1; s >= 0; s--) {
        p.set_site(static_cast<std::size_t>(s), static_cast<Pauli>(1 + idx % 3));
        idx /= 3;
    }
    return p;
}

// The idx-th string (base-4 digits) over all four letters.
PauliString any_string(int num_sites, std::uint64_t idx) {
    PauliString p(static_cast<std::size_t>(num_sites));
    for (int s = num_sites - 1; s >= 0; s--) {
        p.set_site(static_cast<std::size_t>(s), static_cast<Pauli>(idx % 4));
        idx /= 4;
    }
    return p;
}

// Too-small counts are malformed input; too-large ones exceed what an
// exhaustive sweep can cover, which is a capacity matter.
void check_sweep_range(int num_sites, int lo, int hi) {
    if (num_sites < lo) {
        throw std::invalid_argument(
            "sweep site count " + std::to_string(num_sites) + " below the minimum of " +
            std::to_string(lo));
    }
    if (num_sites > hi) {
        throw capacity_error(
            "sweep site count " + std::to_string(num_sites) + " above the cap of " +
            std::to_string(hi));
    }
}

// Scans pair indexes [0, strings^2) for the first one violating `ok`,
// splitting the range across jobs workers. Each worker records its local
// first violation; the merge keeps the smallest index, so the result never
// depends on jobs. `build` maps a string index to its PauliString.
template <typename Ok, typename Build>
SweepResult sweep_pairs(std::uint64_t strings, int jobs, Ok&& ok, Build&& build) {
    std::uint64_t total = strings * strings;
    jobs = std::max(1, std::min(jobs, 64));
    std::vector<std::uint64_t> firsts(static_cast<std::size_t>(jobs), total);
    auto scan = [&](int worker) {
        std::uint64_t begin =
            total * static_cast<std::uint64_t>(worker) / static_cast<std::uint64_t>(jobs);
        std::uint64_t end =
            total * static_cast<std::uint64_t>(worker + 1) / static_cast<std::uint64_t>(jobs);
        for (std::uint64_t i = begin; i < end; i++) {
            if (!ok(i / strings, i % strings)) {
                firsts[static_cast<std::size_t>(worker)] = i;
                return;
            }
        }
    };
    if (jobs == 1) {
        scan(0);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; w++) {
            workers.emplace_back(scan, w);
        }
        for (auto& t : workers) {
            t.join();
        }
    }
    SweepResult result;
    result.pairs_checked = total;
    std::uint64_t first = *std::min_element(firsts.begin(), firsts.end());
    if (first < total) {
        result.counterexample = {build(first / strings), build(first % strings)};
    }
    return result;
}

}  // namespace

bool is_fully_nontrivial(const PauliString& p) {
    std::size_t full_words = p.num_sites() / 64;
    for (std::size_t w = 0; w < full_words; w++) {
        if ((p.x_words()[w] | p.z_words()[w]) != ~std::uint64_t{0}) {
            return false;
        }
    }
    std::size_t rest = p.num_sites() % 64;
    if (rest) {
        std::uint64_t mask = (std::uint64_t{1} << rest) - 1;
        if (((p.x_words()[full_words] | p.z_words()[full_words]) & mask) != mask) {
            return false;
        }
    }
    return true;
}

CompatibilityReport classify_pair(const PauliString& p, const PauliString& q) {
    CompatibilityReport report;
    report.noncommuting_sites = local_noncommuting_sites(p, q);
    report.hidden_count = report.noncommuting_sites.size();
    report.globally_compatible = (report.hidden_count & 1) == 0;
    report.fully_nontrivial_pair = is_fully_nontrivial(p) && is_fully_nontrivial(q);
    report.dichotomic = same_sites(p, q) && (p.phase() / q.phase()).is_real();
    std::size_t n = p.num_sites();
    if (n == 2 && report.hidden_count == 0) {
        report.case_label = "2.i";
    } else if (n == 2 && report.hidden_count == 2) {
        report.case_label = "2.ii";
    } else if (n == 3) {
        static const char* kTripleLabels[4] = {"3.iv", "3.iii", "3.ii", "3.i"};
        report.case_label = kTripleLabels[report.hidden_count];
    } else {
        report.case_label = "hidden=" + std::to_string(report.hidden_count) + "," +
                            (report.hidden_count % 2 == 0 ? "even" : "odd");
    }
    return report;
}

bool mutually_compatible_without_hidden(const std::vector<PauliString>& observables) {
    for (std::size_t i = 0; i < observables.size(); i++) {
        for (std::size_t j = i + 1; j < observables.size(); j++) {
            if (count_noncommuting_sites(observables[i], observables[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

SweepResult verify_parity_law(int num_sites, int jobs) {
    check_sweep_range(num_sites, kMinSweepSites, kMaxSweepSites);
    std::uint64_t strings = pow_u64(3, num_sites);
    auto ok = [&](std::uint64_t a, std::uint64_t b) {
        PauliString pa = nontrivial_string(num_sites, a);
        PauliString pb = nontrivial_string(num_sites, b);
        std::size_t hidden = count_noncommuting_sites(pa, pb);
        if (hidden == 0 && !same_sites(pa, pb)) {
            return false;
        }
        return !global_commutes(pa, pb) || hidden % 2 == 0;
    };
    return sweep_pairs(strings, jobs, ok, [&](std::uint64_t i) {
        return nontrivial_string(num_sites, i);
    });
}

SweepResult verify_even_difference(int num_sites, int jobs) {
    check_sweep_range(num_sites, kMinSweepSites, kMaxSweepSites);
    std::uint64_t strings = pow_u64(3, num_sites);
    auto ok = [&](std::uint64_t a, std::uint64_t b) {
        PauliString pa = nontrivial_string(num_sites, a);
        PauliString pb = nontrivial_string(num_sites, b);
        return !global_commutes(pa, pb) || count_differing_sites(pa, pb) % 2 == 0;
    };
    return sweep_pairs(strings, jobs, ok, [&](std::uint64_t i) {
        return nontrivial_string(num_sites, i);
    });
}

SweepResult verify_pair_cases() {
    auto ok = [&](std::uint64_t a, std::uint64_t b) {
        PauliString pa = any_string(2, a);
        PauliString pb = any_string(2, b);
        std::size_t hidden = count_noncommuting_sites(pa, pb);
        return global_commutes(pa, pb) == (hidden == 0 || hidden == 2);
    };
    return sweep_pairs(16, 1, ok, [&](std::uint64_t i) { return any_string(2, i); });
}

SweepResult verify_triple_cases() {
    auto ok = [&](std::uint64_t a, std::uint64_t b) {
        PauliString pa = nontrivial_string(3, a);
        PauliString pb = nontrivial_string(3, b);
        std::string label = classify_pair(pa, pb).case_label;
        return global_commutes(pa, pb) == (label == "3.ii" || label == "3.iv");
    };
    return sweep_pairs(27, 1, ok, [&](std::uint64_t i) { return nontrivial_string(3, i); });
}

SweepResult verify_unique_term_law(int num_sites) {
    check_sweep_range(num_sites, 2, 3);
    std::uint64_t strings = pow_u64(4, num_sites);
    auto ok = [&](std::uint64_t a, std::uint64_t b) {
        PauliString pa = any_string(num_sites, a);
        PauliString pb = any_string(num_sites, b);
        std::size_t nonzero = 0;
        for (const DecompositionTerm& term : decompose_commutator(pa, pb)) {
            nonzero += term.is_zero ? 0 : 1;
        }
        for (const DecompositionTerm& term : decompose_anticommutator(pa, pb)) {
            nonzero += term.is_zero ? 0 : 1;
        }
        return nonzero == 1;
    };
    return sweep_pairs(strings, 1, ok, [&](std::uint64_t i) { return any_string(num_sites, i); });
}

}  // namespace qcompat
