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

#ifndef QCOMPAT_SERIALIZE_HPP
#define QCOMPAT_SERIALIZE_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qcompat/compatibility.hpp"
#include "qcompat/decomposition.hpp"
#include "qcompat/paradox.hpp"
#include "qcompat/states.hpp"

namespace qcompat {

// Output documents use insertion-ordered keys so the emitted bytes depend
// only on the inputs and the version string. Sites are 1-based in documents;
// signs and phases are spelled "+1", "-1", "+i", "-i".
using Json = nlohmann::ordered_json;

// "+1" | "+i" | "-1" | "-i" when the value matches one of them within 1e-9,
// otherwise a [re, im] pair. Negative zero is normalized away.
Json scalar_json(std::complex<double> value);

// 0-based sites to a 1-based JSON array.
Json sites_json(const std::vector<std::size_t>& sites);

Json report_json(const CompatibilityReport& report);

// {"commutator_sites": [...], "zero": ..., "value": "2i*ZI"}.
Json term_json(const DecompositionTerm& term);

Json certificate_json(const ParadoxCertificate& certificate);

// Nonzero amplitudes as [basis_index, re, im] triples, ascending by index.
// Entries with magnitude below 1e-12 are dropped.
Json amplitudes_json(const StateVector& state);

// [{"observable": "+ZZI", "eigenvalue": "-1" | null}, ...].
Json eigen_relations_json(const std::vector<EigenRelation>& relations);

// {"verified": ..., "pairs_checked": ..., "counterexample": {...} | null}.
Json sweep_json(const SweepResult& sweep);

// The single top-level document every command emits.
Json document(std::string_view command, Json inputs, Json result);

// Pretty-printed JSON plus a trailing newline.
std::string render_json(const Json& doc);

// Indented key/value text for reading by eye. Same information, same order.
std::string render_human(const Json& doc);

}  // namespace qcompat

#endif
