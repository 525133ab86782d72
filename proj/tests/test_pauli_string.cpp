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

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qcompat/dense.hpp"

namespace qcompat {
namespace {

PauliString random_string(std::mt19937_64& rng, std::size_t num_sites) {
    PauliString p(num_sites, Phase(static_cast<int>(rng() & 3)));
    for (std::size_t s = 0; s < num_sites; s++) {
        p.set_site(s, static_cast<Pauli>(rng() & 3));
    }
    return p;
}

std::string parse_error(const std::string& text) {
    try {
        PauliString::parse(text);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

TEST_CASE("parse accepts letters, digits, and phase prefixes") {
    CHECK(PauliString::parse("XY").str() == "+XY");
    CHECK(PauliString::parse("+XY").str() == "+XY");
    CHECK(PauliString::parse("-XY").str() == "-XY");
    CHECK(PauliString::parse("iZZ").str() == "+iZZ");
    CHECK(PauliString::parse("+iZZ").str() == "+iZZ");
    CHECK(PauliString::parse("-iZZ").str() == "-iZZ");
    CHECK(PauliString::parse("2211").str() == "+YYXX");
    CHECK(PauliString::parse("-i103").str() == "-iXIZ");
    CHECK(PauliString::parse("I").str() == "+I");
    CHECK(PauliString::parse("0").str() == "+I");
}

TEST_CASE("parse round-trips the canonical form") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 200; trial++) {
        PauliString p = random_string(rng, 1 + rng() % 90);
        CHECK(PauliString::parse(p.str()) == p);
    }
}

TEST_CASE("parse errors name the 1-based position") {
    CHECK(parse_error("XQZ") == "invalid character 'Q' at position 2");
    CHECK(parse_error("-iXW") == "invalid character 'W' at position 4");
    CHECK(parse_error("X1") == "mixed letter and digit forms at position 2");
    CHECK(parse_error("12X") == "mixed letter and digit forms at position 3");
    CHECK(parse_error("") != "");
    CHECK(parse_error("+") != "");
    CHECK(parse_error("-i") != "");
    CHECK(parse_error("X Y") == "invalid character ' ' at position 2");
}

TEST_CASE("site accessors pack across word boundaries") {
    PauliString p(130);
    p.set_site(0, Pauli::X);
    p.set_site(63, Pauli::Y);
    p.set_site(64, Pauli::Z);
    p.set_site(129, Pauli::Y);
    CHECK(p.site(0) == Pauli::X);
    CHECK(p.site(1) == Pauli::I);
    CHECK(p.site(63) == Pauli::Y);
    CHECK(p.site(64) == Pauli::Z);
    CHECK(p.site(129) == Pauli::Y);
    p.set_site(64, Pauli::I);
    CHECK(p.site(64) == Pauli::I);
    CHECK(!p.is_identity_string());
    CHECK(PauliString(130).is_identity_string());
}

TEST_CASE("multiply matches dense matrices exhaustively at 2 sites") {
    for (int i = 0; i < 16; i++) {
        for (int j = 0; j < 16; j++) {
            PauliString p(2), q(2);
            p.set_site(0, static_cast<Pauli>(i & 3));
            p.set_site(1, static_cast<Pauli>(i >> 2));
            q.set_site(0, static_cast<Pauli>(j & 3));
            q.set_site(1, static_cast<Pauli>(j >> 2));
            DenseMatrix want = to_dense(p) * to_dense(q);
            DenseMatrix got = to_dense(multiply(p, q));
            CHECK((want - got).cwiseAbs().maxCoeff() < kAlgebraTol);
        }
    }
}

TEST_CASE("multiply matches dense matrices on random wide strings") {
    std::mt19937_64 rng(0xabcd);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 1 + rng() % 7;
        PauliString p = random_string(rng, n);
        PauliString q = random_string(rng, n);
        DenseMatrix want = to_dense(p) * to_dense(q);
        DenseMatrix got = to_dense(multiply(p, q));
        CHECK((want - got).cwiseAbs().maxCoeff() < kAlgebraTol);
    }
}

TEST_CASE("multiply agrees with sitewise accumulation past 64 sites") {
    std::mt19937_64 rng(0x77);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 60 + rng() % 80;
        PauliString p = random_string(rng, n);
        PauliString q = random_string(rng, n);
        PauliString want(n, p.phase() * q.phase());
        for (std::size_t s = 0; s < n; s++) {
            SingleProduct sp = single_product(p.site(s), q.site(s));
            want.set_phase(want.phase() * sp.phase);
            want.set_site(s, sp.result);
        }
        CHECK(multiply(p, q) == want);
    }
}

TEST_CASE("multiply rejects mismatched site counts") {
    CHECK_THROWS_AS(
        multiply(PauliString::parse("XX"), PauliString::parse("X")), std::invalid_argument);
}

TEST_CASE("global commutation is the parity of the anticommuting sites") {
    std::mt19937_64 rng(0x1234);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 100;
        PauliString p = random_string(rng, n);
        PauliString q = random_string(rng, n);
        std::vector<std::size_t> sites = local_noncommuting_sites(p, q);
        CHECK(sites.size() == count_noncommuting_sites(p, q));
        std::size_t naive = 0;
        for (std::size_t s = 0; s < n; s++) {
            naive += anticommutes_single(p.site(s), q.site(s)) ? 1 : 0;
        }
        CHECK(naive == sites.size());
        CHECK(global_commutes(p, q) == (sites.size() % 2 == 0));
        for (std::size_t i = 1; i < sites.size(); i++) {
            CHECK(sites[i - 1] < sites[i]);
        }
    }
}

TEST_CASE("global commutation matches the dense commutator") {
    std::mt19937_64 rng(0x9876);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t n = 1 + rng() % 6;
        PauliString p = random_string(rng, n);
        PauliString q = random_string(rng, n);
        DenseMatrix comm = commutator_dense(to_dense(p), to_dense(q));
        CHECK(global_commutes(p, q) == (comm.cwiseAbs().maxCoeff() < kAlgebraTol));
    }
}

TEST_CASE("site comparison helpers") {
    PauliString p = PauliString::parse("XYZI");
    PauliString q = PauliString::parse("-XZZX");
    CHECK(count_differing_sites(p, q) == 2);
    CHECK(!same_sites(p, q));
    CHECK(same_sites(p, PauliString::parse("-iXYZI")));
    // Site 4 differs only by an identity, so it does not anticommute.
    CHECK(local_noncommuting_sites(p, q) == std::vector<std::size_t>{1});
}

}  // namespace
}  // namespace qcompat
