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

#include "qcompat/paradox.hpp"

#include <stdexcept>
#include <string>

#include "qcompat/errors.hpp"

namespace qcompat {

namespace {

void check_index(int value, const char* name) {
    if (value < 1 || value > 3) {
        throw std::invalid_argument(
            std::string("index ") + name + " must be 1, 2, or 3, got " + std::to_string(value));
    }
}

void check_internally_commuting(const std::vector<PauliString>& side, const char* label) {
    for (std::size_t i = 0; i < side.size(); i++) {
        for (std::size_t j = i + 1; j < side.size(); j++) {
            if (!global_commutes(side[i], side[j])) {
                throw std::invalid_argument(
                    "observables " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " of side " + label + " do not commute globally");
            }
        }
    }
}

PauliString ordered_product(const std::vector<PauliString>& side) {
    PauliString product = side.front();
    for (std::size_t i = 1; i < side.size(); i++) {
        product = multiply(product, side[i]);
    }
    return product;
}

// Left-to-right local product of one site's operator sequence.
void accumulate_local(const std::vector<Pauli>& sequence, Phase* phase, Pauli* local) {
    *phase = Phase();
    *local = Pauli::I;
    for (Pauli op : sequence) {
        SingleProduct step = single_product(*local, op);
        *phase *= step.phase;
        *local = step.result;
    }
}

// Multiplicity parity, per site, of each non-identity operator in both
// sequences: equal parities mean the sitewise products of assigned local
// values (each squaring to 1) agree between the sides.
bool local_value_parities_match(const SiteTrace& trace) {
    for (unsigned v = 1; v < 4; v++) {
        int parity = 0;
        for (Pauli op : trace.sequence_a) {
            parity ^= static_cast<unsigned>(op) == v ? 1 : 0;
        }
        for (Pauli op : trace.sequence_b) {
            parity ^= static_cast<unsigned>(op) == v ? 1 : 0;
        }
        if (parity != 0) {
            return false;
        }
    }
    return true;
}

bool mutually_commuting_union(
    const std::vector<PauliString>& side_a, const std::vector<PauliString>& side_b) {
    for (const PauliString& a : side_a) {
        for (const PauliString& b : side_b) {
            if (!global_commutes(a, b)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

PauliString triple_product(const PauliString& p, const PauliString& q, const PauliString& r) {
    const PauliString* ops[3] = {&p, &q, &r};
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            if (!global_commutes(*ops[i], *ops[j])) {
                throw std::invalid_argument(
                    "observables " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " do not commute globally");
            }
        }
    }
    return multiply(multiply(p, q), r);
}

std::pair<std::array<PauliString, 3>, std::array<PauliString, 3>> mermin_triples() {
    return {
        {PauliString::parse("XY"), PauliString::parse("YX"), PauliString::parse("ZZ")},
        {PauliString::parse("XX"), PauliString::parse("YY"), PauliString::parse("ZZ")},
    };
}

std::vector<PauliString> build_3qubit_family(int j, int k, int l) {
    check_index(j, "j");
    check_index(k, "k");
    check_index(l, "l");
    if (j == k || j == l || k == l) {
        throw std::invalid_argument("indexes j, k, l must be pairwise distinct");
    }
    auto make = [](int a, int b, int c) {
        PauliString p(3);
        p.set_site(0, static_cast<Pauli>(a));
        p.set_site(1, static_cast<Pauli>(b));
        p.set_site(2, static_cast<Pauli>(c));
        return p;
    };
    return {make(j, j, j), make(j, k, k), make(k, j, k), make(k, k, j), make(l, l, 0)};
}

std::pair<std::vector<PauliString>, std::vector<PauliString>> build_3qubit_partition(
    int j, int k, int l) {
    std::vector<PauliString> family = build_3qubit_family(j, k, l);
    // family = (jjj, jkk, kjk, kkj, ll0); each side pairs ll0 with the two
    // members whose product against it is proportional to the identity.
    return {
        {family[4], family[0], family[3]},
        {family[4], family[2], family[1]},
    };
}

std::vector<PauliString> build_nqubit_family(
    const std::vector<int>& jvec, const std::vector<int>& kvec) {
    std::size_t n = jvec.size();
    if (kvec.size() != n) {
        throw std::invalid_argument(
            "index vectors differ in length: " + std::to_string(n) + " vs " +
            std::to_string(kvec.size()));
    }
    if (n < 3) {
        throw std::invalid_argument("the family needs at least 3 sites");
    }
    for (std::size_t p = 0; p < n; p++) {
        if (jvec[p] < 1 || jvec[p] > 3 || kvec[p] < 1 || kvec[p] > 3 || jvec[p] == kvec[p]) {
            throw std::invalid_argument(
                "position " + std::to_string(p + 1) +
                ": indexes must be distinct values in {1,2,3}");
        }
    }
    auto base = [&](const std::vector<int>& vec) {
        PauliString p(n);
        for (std::size_t s = 0; s < n; s++) {
            p.set_site(s, static_cast<Pauli>(vec[s]));
        }
        return p;
    };
    std::vector<PauliString> family;
    family.reserve(n + 1);
    family.push_back(base(jvec));
    // Replacement pairs (t, t+1) from the end of the string to the front,
    // then the wrap-around pair {0, n-1}.
    auto replaced = [&](std::size_t s1, std::size_t s2) {
        PauliString p = base(jvec);
        p.set_site(s1, static_cast<Pauli>(kvec[s1]));
        p.set_site(s2, static_cast<Pauli>(kvec[s2]));
        return p;
    };
    for (std::size_t t = n - 1; t >= 1; t--) {
        family.push_back(replaced(t - 1, t));
    }
    family.push_back(replaced(0, n - 1));
    return family;
}

ParadoxCertificate verify_ks(
    const std::vector<PauliString>& side_a, const std::vector<PauliString>& side_b) {
    if (side_a.empty() || side_b.empty()) {
        throw std::invalid_argument("each side needs at least one observable");
    }
    std::size_t n = side_a.front().num_sites();
    for (const std::vector<PauliString>* side : {&side_a, &side_b}) {
        for (const PauliString& p : *side) {
            if (p.num_sites() != n) {
                throw std::invalid_argument("all observables must have the same site count");
            }
        }
    }
    check_internally_commuting(side_a, "a");
    check_internally_commuting(side_b, "b");

    ParadoxCertificate cert;
    cert.side_a = side_a;
    cert.side_b = side_b;
    cert.commutation_ok = true;
    cert.product_a = ordered_product(side_a);
    cert.product_b = ordered_product(side_b);
    cert.sign_a = cert.product_a.phase();
    cert.sign_b = cert.product_b.phase();

    cert.site_traces.resize(n);
    for (std::size_t s = 0; s < n; s++) {
        SiteTrace& trace = cert.site_traces[s];
        for (const PauliString& p : side_a) {
            trace.sequence_a.push_back(p.site(s));
        }
        for (const PauliString& p : side_b) {
            trace.sequence_b.push_back(p.site(s));
        }
        accumulate_local(trace.sequence_a, &trace.phase_a, &trace.local_a);
        accumulate_local(trace.sequence_b, &trace.phase_b, &trace.local_b);
    }

    bool sign_opposed = same_sites(cert.product_a, cert.product_b) &&
                        (cert.sign_a / cert.sign_b).exponent() == 2;
    bool parities_match = true;
    for (const SiteTrace& trace : cert.site_traces) {
        parities_match = parities_match && local_value_parities_match(trace);
    }
    bool value_anchored =
        (cert.product_a.is_identity_string() && cert.product_b.is_identity_string()) ||
        mutually_commuting_union(side_a, side_b);
    cert.paradox = sign_opposed && parities_match && value_anchored;
    return cert;
}

std::vector<Phase> local_permutation_parity(const std::vector<SiteTrace>& traces) {
    std::vector<Phase> ratios;
    ratios.reserve(traces.size());
    for (std::size_t s = 0; s < traces.size(); s++) {
        if (traces[s].local_a != traces[s].local_b) {
            throw std::invalid_argument(
                "local products differ at site " + std::to_string(s + 1) +
                ": the orderings are not comparable");
        }
        ratios.push_back(traces[s].phase_a / traces[s].phase_b);
    }
    return ratios;
}

StateVector common_eigenstate(
    const std::vector<PauliString>& observables, const std::vector<int>& signs) {
    if (observables.empty()) {
        throw std::invalid_argument("need at least one observable");
    }
    if (observables.size() != signs.size()) {
        throw std::invalid_argument(
            "got " + std::to_string(observables.size()) + " observables but " +
            std::to_string(signs.size()) + " signs");
    }
    std::size_t n = observables.front().num_sites();
    if (n > kMaxDenseSites) {
        throw capacity_error(
            "eigenstate search over " + std::to_string(n) + " sites exceeds the cap of " +
            std::to_string(kMaxDenseSites));
    }
    for (std::size_t i = 0; i < observables.size(); i++) {
        if (observables[i].num_sites() != n) {
            throw std::invalid_argument("all observables must have the same site count");
        }
        if (!observables[i].phase().is_real()) {
            throw std::invalid_argument(
                "observable " + std::to_string(i + 1) +
                " has an imaginary phase and no real eigenvalues");
        }
        if (signs[i] != 1 && signs[i] != -1) {
            throw std::invalid_argument(
                "sign " + std::to_string(i + 1) + " must be +1 or -1, got " +
                std::to_string(signs[i]));
        }
        for (std::size_t j = i + 1; j < observables.size(); j++) {
            if (!global_commutes(observables[i], observables[j])) {
                throw std::invalid_argument(
                    "observables " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " do not commute globally");
            }
        }
    }

    // All amplitudes below are dyadic rationals, so a surviving seed has norm
    // well above this threshold and an annihilated one lands at exactly zero
    // up to roundoff.
    constexpr double kSurvivalThreshold = 1e-6;
    for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << n); seed++) {
        StateVector v = basis_state(static_cast<int>(n), seed);
        for (std::size_t i = 0; i < observables.size(); i++) {
            StateVector mapped = apply(observables[i], v);
            v.amplitudes = 0.5 * (v.amplitudes + static_cast<double>(signs[i]) * mapped.amplitudes);
            if (v.norm() <= kSurvivalThreshold) {
                break;
            }
        }
        if (v.norm() > kSurvivalThreshold) {
            v.normalize();
            return v;
        }
    }

    // Every seed was annihilated, so some subset of observables multiplies to
    // +/- identity with a sign the requested eigenvalues contradict. Find one
    // to name; subsets are scanned in ascending mask order so the report is
    // deterministic.
    if (observables.size() <= 20) {
        for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << observables.size());
             subset++) {
            PauliString product(n);
            int wanted = 1;
            std::string members;
            for (std::size_t i = 0; i < observables.size(); i++) {
                if (subset >> i & 1) {
                    product = multiply(product, observables[i]);
                    wanted *= signs[i];
                    members += (members.empty() ? "" : ", ") + std::to_string(i + 1);
                }
            }
            if (!product.is_identity_string() || !product.phase().is_real()) {
                continue;
            }
            int forced = product.phase().exponent() == 0 ? 1 : -1;
            if (forced != wanted) {
                throw std::invalid_argument(
                    "inconsistent signs: the product of observables {" + members + "} is " +
                    (forced == 1 ? "+" : "-") +
                    "identity but the requested eigenvalues multiply to " +
                    (wanted == 1 ? "+1" : "-1"));
            }
        }
    }
    throw std::invalid_argument("no joint eigenvector exists for the requested signs");
}

}  // namespace qcompat
