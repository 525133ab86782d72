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

#include <stdexcept>

#include "doctest.h"
#include "qcompat/errors.hpp"

namespace qcompat {
namespace {

CompatibilityReport classify(const char* p, const char* q) {
    return classify_pair(PauliString::parse(p), PauliString::parse(q));
}

TEST_CASE("two-site case labels") {
    CompatibilityReport same = classify("XX", "XX");
    CHECK(same.globally_compatible);
    CHECK(same.hidden_count == 0);
    CHECK(same.case_label == "2.i");
    CHECK(same.dichotomic);

    CompatibilityReport hidden = classify("XY", "YX");
    CHECK(hidden.globally_compatible);
    CHECK(hidden.hidden_count == 2);
    CHECK(hidden.noncommuting_sites == std::vector<std::size_t>{0, 1});
    CHECK(hidden.case_label == "2.ii");
    CHECK(hidden.fully_nontrivial_pair);
    CHECK(!hidden.dichotomic);

    CompatibilityReport odd = classify("XX", "XY");
    CHECK(!odd.globally_compatible);
    CHECK(odd.hidden_count == 1);
    CHECK(odd.case_label == "hidden=1,odd");
}

TEST_CASE("three-site case labels follow the anticommuting count") {
    CHECK(classify("XXX", "YYY").case_label == "3.i");
    CHECK(!classify("XXX", "YYY").globally_compatible);
    CHECK(classify("ZZI", "XXX").case_label == "3.ii");
    CHECK(classify("ZZI", "XXX").globally_compatible);
    CHECK(classify("XXX", "YXX").case_label == "3.iii");
    CHECK(!classify("XXX", "YXX").globally_compatible);
    CHECK(classify("XXX", "XXX").case_label == "3.iv");
    CHECK(classify("ZZI", "ZIZ").case_label == "3.iv");
    CHECK(classify("ZZI", "ZIZ").globally_compatible);
}

TEST_CASE("wider pairs get the generic descriptor") {
    CHECK(classify("XYZX", "YXZX").case_label == "hidden=2,even");
    CHECK(classify("XYZX", "YXXZ").case_label == "hidden=4,even");
    CHECK(classify("XXII", "YXII").case_label == "hidden=1,odd");
}

TEST_CASE("dichotomic means equal letters with a real phase ratio") {
    CHECK(classify("XY", "XY").dichotomic);
    CHECK(classify("XY", "-XY").dichotomic);
    CHECK(classify("iXY", "-iXY").dichotomic);
    CHECK(!classify("XY", "iXY").dichotomic);
    CHECK(!classify("XY", "YX").dichotomic);
}

TEST_CASE("full nontriviality") {
    CHECK(is_fully_nontrivial(PauliString::parse("XYZZYX")));
    CHECK(!is_fully_nontrivial(PauliString::parse("XYIZ")));
    CHECK(!is_fully_nontrivial(PauliString(70)));
    PauliString wide(70);
    for (std::size_t s = 0; s < 70; s++) {
        wide.set_site(s, Pauli::Z);
    }
    CHECK(is_fully_nontrivial(wide));
    wide.set_site(69, Pauli::I);
    CHECK(!is_fully_nontrivial(wide));
    CHECK(!classify("XI", "XX").fully_nontrivial_pair);
    CHECK(!classify("XX", "XI").fully_nontrivial_pair);
}

TEST_CASE("compatibility without hidden sites") {
    auto strings = [](std::initializer_list<const char*> texts) {
        std::vector<PauliString> out;
        for (const char* t : texts) {
            out.push_back(PauliString::parse(t));
        }
        return out;
    };
    CHECK(mutually_compatible_without_hidden(strings({"ZZI", "ZIZ", "IZZ"})));
    CHECK(mutually_compatible_without_hidden(strings({"ZZ"})));
    CHECK(mutually_compatible_without_hidden({}));
    // Globally compatible, but through cancellation.
    CHECK(!mutually_compatible_without_hidden(strings({"XY", "YX"})));
    CHECK(!mutually_compatible_without_hidden(strings({"XY", "YX", "ZZ"})));
    // Globally incompatible.
    CHECK(!mutually_compatible_without_hidden(strings({"XX", "XY"})));
}

TEST_CASE("parity sweep verifies at 2 through 4 sites") {
    SweepResult two = verify_parity_law(2);
    CHECK(two.verified());
    CHECK(two.pairs_checked == 81);
    SweepResult three = verify_parity_law(3);
    CHECK(three.verified());
    CHECK(three.pairs_checked == 729);
    SweepResult four = verify_parity_law(4, 3);
    CHECK(four.verified());
    CHECK(four.pairs_checked == 6561);
}

TEST_CASE("even-difference sweep verifies at 2 through 4 sites") {
    CHECK(verify_even_difference(2).verified());
    SweepResult three = verify_even_difference(3);
    CHECK(three.verified());
    CHECK(three.pairs_checked == 729);
    CHECK(verify_even_difference(4, 4).verified());
}

TEST_CASE("job counts do not change sweep results") {
    for (int jobs : {1, 2, 5, 16}) {
        SweepResult r = verify_parity_law(3, jobs);
        CHECK(r.verified());
        CHECK(r.pairs_checked == 729);
    }
}

TEST_CASE("pair and triple case sweeps") {
    SweepResult pairs = verify_pair_cases();
    CHECK(pairs.verified());
    CHECK(pairs.pairs_checked == 256);
    SweepResult triples = verify_triple_cases();
    CHECK(triples.verified());
    CHECK(triples.pairs_checked == 729);
}

TEST_CASE("unique-term sweep covers every letter pair") {
    SweepResult two = verify_unique_term_law(2);
    CHECK(two.verified());
    CHECK(two.pairs_checked == 256);
    SweepResult three = verify_unique_term_law(3);
    CHECK(three.verified());
    CHECK(three.pairs_checked == 4096);
}

TEST_CASE("sweep site counts are range-checked") {
    CHECK_THROWS_AS(verify_parity_law(1), std::invalid_argument);
    CHECK_THROWS_AS(verify_parity_law(6), capacity_error);
    CHECK_THROWS_AS(verify_even_difference(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_unique_term_law(4), capacity_error);
    CHECK_THROWS_AS(verify_unique_term_law(1), std::invalid_argument);
}

}  // namespace
}  // namespace qcompat
