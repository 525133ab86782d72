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
#include <vector>

#include "doctest.h"
#include "qcompat/errors.hpp"

namespace qcompat {
namespace {

std::vector<PauliString> strings(std::initializer_list<const char*> texts) {
    std::vector<PauliString> out;
    for (const char* t : texts) {
        out.push_back(PauliString::parse(t));
    }
    return out;
}

TEST_CASE("triple products check pairwise compatibility") {
    PauliString got = triple_product(
        PauliString::parse("XY"), PauliString::parse("YX"), PauliString::parse("ZZ"));
    CHECK(got.str() == "+II");
    got = triple_product(
        PauliString::parse("XX"), PauliString::parse("YY"), PauliString::parse("ZZ"));
    CHECK(got.str() == "-II");
    CHECK_THROWS_AS(
        triple_product(
            PauliString::parse("XX"), PauliString::parse("XY"), PauliString::parse("ZZ")),
        std::invalid_argument);
}

TEST_CASE("the two-site triples disagree by a sign") {
    auto [a, b] = mermin_triples();
    ParadoxCertificate cert = verify_ks(
        std::vector<PauliString>(a.begin(), a.end()),
        std::vector<PauliString>(b.begin(), b.end()));
    CHECK(cert.commutation_ok);
    CHECK(cert.product_a.str() == "+II");
    CHECK(cert.product_b.str() == "-II");
    CHECK(cert.sign_a == Phase(0));
    CHECK(cert.sign_b == Phase(2));
    CHECK(cert.paradox);

    // The local phase mismatch concentrates at the second site.
    std::vector<Phase> parity = local_permutation_parity(cert.site_traces);
    REQUIRE(parity.size() == 2);
    CHECK(parity[0] == Phase(0));
    CHECK(parity[1] == Phase(2));
}

TEST_CASE("dropping the shared observable kills the value anchoring") {
    ParadoxCertificate cert = verify_ks(strings({"XY", "YX"}), strings({"XX", "YY"}));
    CHECK(cert.commutation_ok);
    // Products still disagree by a sign on the same letters.
    CHECK(cert.product_a.str() == "+ZZ");
    CHECK(cert.product_b.str() == "-ZZ");
    // Nothing fixes the two product values to a number, so no paradox.
    CHECK(!cert.paradox);
}

TEST_CASE("three-site partitions certify for every index permutation") {
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const int* perm : perms) {
        auto [side_a, side_b] = build_3qubit_partition(perm[0], perm[1], perm[2]);
        ParadoxCertificate cert = verify_ks(side_a, side_b);
        CAPTURE(perm[0]);
        CAPTURE(perm[1]);
        CAPTURE(perm[2]);
        CHECK(cert.commutation_ok);
        CHECK(cert.product_a.str() == "-III");
        CHECK(cert.product_b.str() == "+III");
        CHECK(cert.paradox);
        // An odd number of sites carries opposite local phases.
        int minus = 0;
        for (Phase ratio : local_permutation_parity(cert.site_traces)) {
            CHECK(ratio.is_real());
            minus += ratio == Phase(2) ? 1 : 0;
        }
        CHECK(minus % 2 == 1);
    }
}

TEST_CASE("family members and partitions are built in the documented order") {
    std::vector<PauliString> family = build_3qubit_family(1, 2, 3);
    REQUIRE(family.size() == 5);
    CHECK(family[0].str() == "+XXX");
    CHECK(family[1].str() == "+XYY");
    CHECK(family[2].str() == "+YXY");
    CHECK(family[3].str() == "+YYX");
    CHECK(family[4].str() == "+ZZI");
    auto [side_a, side_b] = build_3qubit_partition(1, 2, 3);
    REQUIRE(side_a.size() == 3);
    REQUIRE(side_b.size() == 3);
    CHECK(side_a[0].str() == "+ZZI");
    CHECK(side_a[1].str() == "+XXX");
    CHECK(side_a[2].str() == "+YYX");
    CHECK(side_b[0].str() == "+ZZI");
    CHECK(side_b[1].str() == "+YXY");
    CHECK(side_b[2].str() == "+XYY");
    CHECK_THROWS_AS(build_3qubit_family(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_3qubit_family(0, 1, 2), std::invalid_argument);
}

TEST_CASE("n-site families replace adjacent pairs from the back, then the wrap") {
    std::vector<PauliString> family = build_nqubit_family({1, 1, 1}, {2, 2, 2});
    REQUIRE(family.size() == 4);
    CHECK(family[0].str() == "+XXX");
    CHECK(family[1].str() == "+XYY");
    CHECK(family[2].str() == "+YYX");
    CHECK(family[3].str() == "+YXY");
    for (std::size_t i = 0; i < family.size(); i++) {
        for (std::size_t j = i + 1; j < family.size(); j++) {
            CHECK(global_commutes(family[i], family[j]));
            std::size_t diff = count_differing_sites(family[i], family[j]);
            CHECK((diff == 2 || diff == 4));
        }
    }
    std::vector<PauliString> five = build_nqubit_family(
        {3, 3, 3, 3, 3}, {1, 1, 1, 1, 1});
    REQUIRE(five.size() == 6);
    CHECK(five[0].str() == "+ZZZZZ");
    CHECK(five[1].str() == "+ZZZXX");
    CHECK(five[2].str() == "+ZZXXZ");
    CHECK(five[3].str() == "+ZXXZZ");
    CHECK(five[4].str() == "+XXZZZ");
    CHECK(five[5].str() == "+XZZZX");

    CHECK_THROWS_AS(build_nqubit_family({1, 1}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_nqubit_family({1, 1, 1}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_nqubit_family({1, 2, 1}, {2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_nqubit_family({1, 1, 4}, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("one family member against the rest: odd site counts certify") {
    for (int n : {3, 5, 7}) {
        std::vector<PauliString> family =
            build_nqubit_family(std::vector<int>(n, 1), std::vector<int>(n, 2));
        std::vector<PauliString> rest(family.begin() + 1, family.end());
        ParadoxCertificate cert = verify_ks({family[0]}, rest);
        CAPTURE(n);
        CHECK(cert.paradox);
        CHECK(cert.product_b.str() == "-" + family[0].letters());
        int minus = 0;
        for (Phase ratio : local_permutation_parity(cert.site_traces)) {
            minus += ratio == Phase(2) ? 1 : 0;
        }
        CHECK(minus % 2 == 1);
    }
    for (int n : {4, 6}) {
        std::vector<PauliString> family =
            build_nqubit_family(std::vector<int>(n, 1), std::vector<int>(n, 2));
        std::vector<PauliString> rest(family.begin() + 1, family.end());
        ParadoxCertificate cert = verify_ks({family[0]}, rest);
        CAPTURE(n);
        CHECK(!cert.paradox);
        // The replaced letters cancel pairwise, leaving the identity.
        CHECK(cert.product_b.is_identity_string());
    }
}

TEST_CASE("sides must be internally compatible") {
    CHECK_THROWS_AS(verify_ks(strings({"XX", "XY"}), strings({"ZZ"})), std::invalid_argument);
    CHECK_THROWS_AS(verify_ks(strings({"ZZ"}), strings({"XX", "XY"})), std::invalid_argument);
    CHECK_THROWS_AS(verify_ks({}, strings({"ZZ"})), std::invalid_argument);
    CHECK_THROWS_AS(verify_ks(strings({"Z"}), strings({"ZZ"})), std::invalid_argument);
}

TEST_CASE("a sign flip alone is no paradox") {
    // Same product on both sides: values agree, nothing opposes.
    ParadoxCertificate cert = verify_ks(strings({"XY", "YX"}), strings({"YX", "XY"}));
    CHECK(cert.product_a == cert.product_b);
    CHECK(!cert.paradox);
}

TEST_CASE("local permutation parity requires comparable local products") {
    ParadoxCertificate cert = verify_ks(strings({"XI"}), strings({"ZI"}));
    CHECK(!cert.paradox);
    CHECK_THROWS_AS(local_permutation_parity(cert.site_traces), std::invalid_argument);
}

TEST_CASE("site traces record ordered sequences and accumulated phases") {
    ParadoxCertificate cert = verify_ks(strings({"XY", "YX", "ZZ"}), strings({"XX", "YY", "ZZ"}));
    REQUIRE(cert.site_traces.size() == 2);
    const SiteTrace& first = cert.site_traces[0];
    CHECK(first.sequence_a == std::vector<Pauli>{Pauli::X, Pauli::Y, Pauli::Z});
    CHECK(first.sequence_b == std::vector<Pauli>{Pauli::X, Pauli::Y, Pauli::Z});
    CHECK(first.phase_a == Phase(1));
    CHECK(first.phase_b == Phase(1));
    CHECK(first.local_a == Pauli::I);
    CHECK(first.local_b == Pauli::I);
    const SiteTrace& second = cert.site_traces[1];
    CHECK(second.sequence_a == std::vector<Pauli>{Pauli::Y, Pauli::X, Pauli::Z});
    CHECK(second.phase_a == Phase(3));
    CHECK(second.phase_b == Phase(1));
}

TEST_CASE("joint eigenstates from projector chains") {
    // XX = YY = ZZ = -1 forces the antisymmetric pair state.
    StateVector singlet =
        common_eigenstate(strings({"XX", "YY", "ZZ"}), std::vector<int>{-1, -1, -1});
    REQUIRE(singlet.amplitudes.size() == 4);
    double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(singlet.amplitudes[1] - std::complex<double>(r)) < 1e-12);
    CHECK(std::abs(singlet.amplitudes[2] + std::complex<double>(r)) < 1e-12);
    CHECK(std::abs(singlet.amplitudes[0]) < 1e-12);
    CHECK(std::abs(singlet.amplitudes[3]) < 1e-12);
    for (const char* text : {"XX", "YY", "ZZ"}) {
        auto lambda = eigen_check(PauliString::parse(text), singlet);
        REQUIRE(lambda.has_value());
        CHECK(std::abs(*lambda - std::complex<double>(-1.0)) < kEigenTol);
    }
}

TEST_CASE("inconsistent signs name a violated product constraint") {
    CHECK_THROWS_WITH(
        common_eigenstate(strings({"XX", "YY", "ZZ"}), std::vector<int>{1, 1, 1}),
        "inconsistent signs: the product of observables {1, 2, 3} is -identity but the "
        "requested eigenvalues multiply to +1");
    CHECK_THROWS_WITH(
        common_eigenstate(strings({"ZZ", "ZZ"}), std::vector<int>{1, -1}),
        "inconsistent signs: the product of observables {1, 2} is +identity but the "
        "requested eigenvalues multiply to -1");
}

TEST_CASE("eigenstate search input checks") {
    CHECK_THROWS_AS(common_eigenstate({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        common_eigenstate(strings({"ZZ"}), std::vector<int>{1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(
        common_eigenstate(strings({"ZZ"}), std::vector<int>{2}), std::invalid_argument);
    CHECK_THROWS_AS(
        common_eigenstate(strings({"iZZ"}), std::vector<int>{1}), std::invalid_argument);
    CHECK_THROWS_AS(
        common_eigenstate(strings({"XX", "XY"}), std::vector<int>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(
        common_eigenstate({PauliString(13)}, std::vector<int>{1}), capacity_error);
}

}  // namespace
}  // namespace qcompat
