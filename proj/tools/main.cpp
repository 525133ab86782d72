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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qcompat/compatibility.hpp"
#include "qcompat/decomposition.hpp"
#include "qcompat/errors.hpp"
#include "qcompat/paradox.hpp"
#include "qcompat/serialize.hpp"
#include "qcompat/states.hpp"
#include "qcompat/version.hpp"

namespace {

using namespace qcompat;

// Exit statuses: 0 success or verified, 1 verified-false (no paradox, or a
// sweep counterexample), 2 malformed input, 3 capacity exceeded.
constexpr int kExitVerifiedFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapacityError = 3;

struct Invocation {
    std::string command;
    // classify / decompose
    std::string p_text;
    std::string q_text;
    std::string which = "all";
    // paradox
    std::string family;
    int j = 0, k = 0, l = 0;
    int ghz_sites = 0;
    std::vector<std::string> observables;
    int split = 0;  // 0 = half
    // state
    std::string state_name;
    int sites = 3;
    std::vector<std::string> state_observables;
    // verify
    std::string sweep_name;
    bool sites_given = false;
    int jobs = 1;
    // output
    bool human = false;
    std::string output_path;
};

struct Outcome {
    Json doc;
    int exit_code = 0;
};

const char* kind_name(BracketKind kind) {
    return kind == BracketKind::commutator ? "commutator" : "anticommutator";
}

Outcome run_classify(const Invocation& in) {
    PauliString p = PauliString::parse(in.p_text);
    PauliString q = PauliString::parse(in.q_text);
    Json inputs;
    inputs["p"] = p.str();
    inputs["q"] = q.str();
    return {document("classify", std::move(inputs), report_json(classify_pair(p, q))), 0};
}

Outcome run_decompose(const Invocation& in) {
    PauliString p = PauliString::parse(in.p_text);
    PauliString q = PauliString::parse(in.q_text);
    Json inputs;
    inputs["p"] = p.str();
    inputs["q"] = q.str();
    inputs["which"] = in.which;

    Json expansions = Json::array();
    auto add_expansion = [&](BracketKind kind) {
        DecompositionRange range(p, q, kind);
        Json terms = Json::array();
        std::size_t nonzero = 0;
        for (DecompositionTerm term : range) {
            nonzero += term.is_zero ? 0 : 1;
            terms.push_back(term_json(term));
        }
        Json e;
        e["kind"] = kind_name(kind);
        e["nonzero_count"] = nonzero;
        e["terms"] = std::move(terms);
        expansions.push_back(std::move(e));
    };
    if (in.which != "anticommutator") {
        add_expansion(BracketKind::commutator);
    }
    if (in.which != "commutator") {
        add_expansion(BracketKind::anticommutator);
    }

    UniqueTerm unique = unique_nonzero_term(p, q);
    Json unique_json;
    unique_json["expansion"] = kind_name(unique.which);
    unique_json["commutator_sites"] = sites_json(unique.term.commutator_sites);
    unique_json["value"] = unique.term.value.str();

    Json result;
    result["site_count"] = p.num_sites();
    result["terms_per_expansion"] = std::uint64_t{1} << (p.num_sites() - 1);
    result["expansions"] = std::move(expansions);
    result["unique_nonzero"] = std::move(unique_json);
    return {document("decompose", std::move(inputs), std::move(result)), 0};
}

Outcome run_paradox(const Invocation& in) {
    std::vector<PauliString> side_a, side_b;
    Json inputs;
    inputs["family"] = in.family;
    if (in.family == "mermin") {
        auto [a, b] = mermin_triples();
        side_a.assign(a.begin(), a.end());
        side_b.assign(b.begin(), b.end());
    } else if (in.family == "three") {
        inputs["j"] = in.j;
        inputs["k"] = in.k;
        inputs["l"] = in.l;
        std::tie(side_a, side_b) = build_3qubit_partition(in.j, in.k, in.l);
    } else if (in.family == "ghz") {
        inputs["sites"] = in.ghz_sites;
        inputs["j"] = in.j;
        inputs["k"] = in.k;
        int n = in.ghz_sites;
        std::vector<PauliString> family = build_nqubit_family(
            std::vector<int>(static_cast<std::size_t>(n > 0 ? n : 0), in.j),
            std::vector<int>(static_cast<std::size_t>(n > 0 ? n : 0), in.k));
        side_a.assign(family.begin(), family.begin() + 1);
        side_b.assign(family.begin() + 1, family.end());
    } else {
        std::size_t count = in.observables.size();
        std::size_t split = in.split > 0 ? static_cast<std::size_t>(in.split) : count / 2;
        if (count < 2 || split < 1 || split >= count) {
            throw std::invalid_argument(
                "the split must leave at least one observable on each side");
        }
        for (std::size_t i = 0; i < count; i++) {
            (i < split ? side_a : side_b).push_back(PauliString::parse(in.observables[i]));
        }
        Json a = Json::array(), b = Json::array();
        for (const PauliString& p : side_a) {
            a.push_back(p.str());
        }
        for (const PauliString& p : side_b) {
            b.push_back(p.str());
        }
        inputs["side_a"] = std::move(a);
        inputs["side_b"] = std::move(b);
    }
    ParadoxCertificate certificate = verify_ks(side_a, side_b);
    int code = certificate.paradox ? 0 : kExitVerifiedFalse;
    return {document("paradox", std::move(inputs), certificate_json(certificate)), code};
}

Outcome run_state(const Invocation& in) {
    NamedState state = build_named(in.state_name, in.sites);
    Json inputs;
    inputs["name"] = state.name;
    inputs["sites"] = state.num_sites;

    std::vector<PauliString> observables;
    if (in.state_observables.empty()) {
        observables = state_family(in.state_name, in.sites);
    } else {
        Json echoed = Json::array();
        for (const std::string& text : in.state_observables) {
            PauliString p = PauliString::parse(text);
            if (p.num_sites() != static_cast<std::size_t>(state.num_sites)) {
                throw std::invalid_argument(
                    "observable " + p.str() + " has " + std::to_string(p.num_sites()) +
                    " sites but the state has " + std::to_string(state.num_sites));
            }
            echoed.push_back(p.str());
            observables.push_back(std::move(p));
        }
        inputs["observables"] = std::move(echoed);
    }

    Json entanglement = Json::array();
    for (std::size_t a = 0; a + 1 < static_cast<std::size_t>(state.num_sites); a++) {
        for (std::size_t b = a + 1; b < static_cast<std::size_t>(state.num_sites); b++) {
            Json pair;
            pair["sites"] = Json::array({a + 1, b + 1});
            pair["entangled"] = bipartite_entangled(state.vector, a, b);
            entanglement.push_back(std::move(pair));
        }
    }

    Json result;
    result["amplitudes"] = amplitudes_json(state.vector);
    result["eigenrelations"] = eigen_relations_json(verify_eigen_relations(state.vector, observables));
    result["entanglement"] = std::move(entanglement);
    return {document("state", std::move(inputs), std::move(result)), 0};
}

Outcome run_verify(const Invocation& in) {
    // Each sweep has its own default site count; the two fixed-size case
    // sweeps only accept their own.
    int n = in.sites;
    SweepResult sweep;
    if (in.sweep_name == "parity") {
        if (!in.sites_given) {
            n = 3;
        }
        sweep = verify_parity_law(n, in.jobs);
    } else if (in.sweep_name == "even-diff") {
        if (!in.sites_given) {
            n = 3;
        }
        sweep = verify_even_difference(n, in.jobs);
    } else if (in.sweep_name == "cases-2") {
        if (!in.sites_given) {
            n = 2;
        }
        if (n != 2) {
            throw std::invalid_argument("cases-2 sweeps exactly 2 sites");
        }
        sweep = verify_pair_cases();
    } else if (in.sweep_name == "cases-3") {
        if (!in.sites_given) {
            n = 3;
        }
        if (n != 3) {
            throw std::invalid_argument("cases-3 sweeps exactly 3 sites");
        }
        sweep = verify_triple_cases();
    } else {
        if (!in.sites_given) {
            n = 2;
        }
        sweep = verify_unique_term_law(n);
    }
    Json inputs;
    inputs["which"] = in.sweep_name;
    inputs["sites"] = n;
    int code = sweep.verified() ? 0 : kExitVerifiedFalse;
    return {document("verify", std::move(inputs), sweep_json(sweep)), code};
}

Outcome run(const Invocation& in) {
    if (in.command == "classify") {
        return run_classify(in);
    }
    if (in.command == "decompose") {
        return run_decompose(in);
    }
    if (in.command == "paradox") {
        return run_paradox(in);
    }
    if (in.command == "state") {
        return run_state(in);
    }
    return run_verify(in);
}

int write_output(const Invocation& in, const Json& doc) {
    std::string text = in.human ? render_human(doc) : render_json(doc);
    if (in.output_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream file(in.output_path, std::ios::binary);
    file << text;
    if (!file) {
        std::cerr << "error: cannot write " << in.output_path << "\n";
        return kExitInputError;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Invocation in;
    CLI::App app{
        "Pauli-string compatibility classification, bracket decompositions,\n"
        "sign-paradox certificates, named joint eigenstates, and exhaustive\n"
        "law sweeps. Emits one structured document per invocation."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.add_flag("--human", in.human, "Render an indented text table instead of JSON");
    app.add_option("--output", in.output_path, "Write the document to this file");

    auto add_sub = [&](CLI::App& parent, const char* name, const char* help) {
        CLI::App* sub = parent.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    CLI::App* classify =
        add_sub(app, "classify", "Report the compatibility structure of a Pauli-string pair");
    classify->add_option("p", in.p_text, "First Pauli string")->required();
    classify->add_option("q", in.q_text, "Second Pauli string")->required();
    classify->callback([&] { in.command = "classify"; });

    CLI::App* decompose =
        add_sub(app, "decompose", "Expand the commutator and anticommutator into bracket terms");
    decompose->add_option("p", in.p_text, "First Pauli string")->required();
    decompose->add_option("q", in.q_text, "Second Pauli string")->required();
    decompose->add_option("--which", in.which, "Expansion to list (default all)")
        ->check(CLI::IsMember({"all", "commutator", "anticommutator"}));
    decompose->callback([&] { in.command = "decompose"; });

    CLI::App* paradox =
        add_sub(app, "paradox", "Certify a sign paradox for two products of observables");
    paradox->require_subcommand(1);
    paradox->callback([&] { in.command = "paradox"; });
    CLI::App* mermin = add_sub(*paradox, "mermin", "The two-qubit pair of commuting triples");
    mermin->callback([&] { in.family = "mermin"; });
    CLI::App* three =
        add_sub(*paradox, "three", "The three-qubit five-observable family, split in two");
    three->add_option("j", in.j, "First Pauli index (1..3)")->required();
    three->add_option("k", in.k, "Second Pauli index (1..3)")->required();
    three->add_option("l", in.l, "Third Pauli index (1..3)")->required();
    three->callback([&] { in.family = "three"; });
    CLI::App* ghz = add_sub(*paradox, "ghz", "The n-site family: one member against the rest");
    ghz->add_option("sites", in.ghz_sites, "Site count (>= 3)")->required();
    ghz->add_option("j", in.j, "Base Pauli index (1..3)")->required();
    ghz->add_option("k", in.k, "Replacement Pauli index (1..3)")->required();
    ghz->callback([&] { in.family = "ghz"; });
    CLI::App* obs = add_sub(*paradox, "obs", "Explicit observable lists");
    obs->add_option("observables", in.observables, "Pauli strings, side A then side B")
        ->required()
        ->expected(-2);
    obs->add_option("--split", in.split, "Size of side A (default: half)");
    obs->callback([&] { in.family = "list"; });

    CLI::App* state =
        add_sub(app, "state", "Build a named state and check its eigenrelations");
    state->add_option("name", in.state_name, "psi1..psi4 or phi1..phi3")->required();
    state->add_option("--n", in.sites, "Site count (default 3)");
    state->add_option(
        "observables", in.state_observables,
        "Observables to check (default: the state's own family)");
    state->callback([&] { in.command = "state"; });

    CLI::App* verify = add_sub(app, "verify", "Run an exhaustive law sweep");
    verify->add_option(
              "which", in.sweep_name,
              "parity | even-diff | cases-2 | cases-3 | unique-term")
        ->required()
        ->check(CLI::IsMember({"parity", "even-diff", "cases-2", "cases-3", "unique-term"}));
    verify->add_option("--n", in.sites, "Site count (default: the sweep's smallest standard size)");
    verify->add_option("--jobs", in.jobs, "Worker threads (never changes output bytes)")
        ->check(CLI::PositiveNumber);
    verify->callback([&] {
        in.command = "verify";
        in.sites_given = verify->count("--n") > 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        Outcome outcome = run(in);
        int write_code = write_output(in, outcome.doc);
        return write_code != 0 ? write_code : outcome.exit_code;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacityError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
