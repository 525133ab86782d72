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

#include "qcompat/serialize.hpp"

#include <cmath>
#include <cstdlib>

#include "qcompat/version.hpp"

namespace qcompat {

namespace {

double drop_negative_zero(double x) {
    return x == 0.0 ? 0.0 : x;
}

std::string letters_of(const std::vector<Pauli>& sequence) {
    std::string s;
    s.reserve(sequence.size());
    for (Pauli p : sequence) {
        s.push_back(pauli_letter(p));
    }
    return s;
}

Json trace_json(const SiteTrace& trace, std::size_t site) {
    Json j;
    j["site"] = site + 1;
    j["sequence_a"] = letters_of(trace.sequence_a);
    j["sequence_b"] = letters_of(trace.sequence_b);
    j["phase_a"] = trace.phase_a.scalar_label();
    j["phase_b"] = trace.phase_b.scalar_label();
    j["local_a"] = std::string(1, pauli_letter(trace.local_a));
    j["local_b"] = std::string(1, pauli_letter(trace.local_b));
    // The phase ratio is only an operator statement when the local results
    // agree.
    if (trace.local_a == trace.local_b) {
        j["ratio"] = (trace.phase_a / trace.phase_b).scalar_label();
    } else {
        j["ratio"] = nullptr;
    }
    return j;
}

Json strings_json(const std::vector<PauliString>& strings) {
    Json j = Json::array();
    for (const PauliString& p : strings) {
        j.push_back(p.str());
    }
    return j;
}

}  // namespace

Json scalar_json(std::complex<double> value) {
    constexpr double kLabelTol = 1e-9;
    constexpr std::complex<double> kUnits[] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    for (int e = 0; e < 4; e++) {
        if (std::abs(value - kUnits[e]) < kLabelTol) {
            return std::string(Phase(e).scalar_label());
        }
    }
    return Json::array({drop_negative_zero(value.real()), drop_negative_zero(value.imag())});
}

Json sites_json(const std::vector<std::size_t>& sites) {
    Json j = Json::array();
    for (std::size_t s : sites) {
        j.push_back(s + 1);
    }
    return j;
}

Json report_json(const CompatibilityReport& report) {
    Json j;
    j["globally_compatible"] = report.globally_compatible;
    j["hidden_count"] = report.hidden_count;
    j["noncommuting_sites"] = sites_json(report.noncommuting_sites);
    j["fully_nontrivial_pair"] = report.fully_nontrivial_pair;
    j["dichotomic"] = report.dichotomic;
    j["case_label"] = report.case_label;
    return j;
}

Json term_json(const DecompositionTerm& term) {
    Json j;
    j["commutator_sites"] = sites_json(term.commutator_sites);
    j["zero"] = term.is_zero;
    j["value"] = term.value.str();
    return j;
}

Json certificate_json(const ParadoxCertificate& certificate) {
    Json j;
    j["side_a"] = strings_json(certificate.side_a);
    j["side_b"] = strings_json(certificate.side_b);
    j["commutation_ok"] = certificate.commutation_ok;
    j["product_a"] = certificate.product_a.str();
    j["product_b"] = certificate.product_b.str();
    j["sign_a"] = certificate.sign_a.scalar_label();
    j["sign_b"] = certificate.sign_b.scalar_label();
    j["paradox"] = certificate.paradox;
    Json traces = Json::array();
    for (std::size_t s = 0; s < certificate.site_traces.size(); s++) {
        traces.push_back(trace_json(certificate.site_traces[s], s));
    }
    j["site_traces"] = std::move(traces);
    return j;
}

Json amplitudes_json(const StateVector& state) {
    constexpr double kAmplitudeFloor = 1e-12;
    Json j = Json::array();
    for (Eigen::Index b = 0; b < state.amplitudes.size(); b++) {
        std::complex<double> amp = state.amplitudes[b];
        if (std::abs(amp) <= kAmplitudeFloor) {
            continue;
        }
        j.push_back(Json::array(
            {b, drop_negative_zero(amp.real()), drop_negative_zero(amp.imag())}));
    }
    return j;
}

Json eigen_relations_json(const std::vector<EigenRelation>& relations) {
    Json j = Json::array();
    for (const EigenRelation& r : relations) {
        Json entry;
        entry["observable"] = r.observable.str();
        entry["eigenvalue"] = r.eigenvalue ? scalar_json(*r.eigenvalue) : Json(nullptr);
        j.push_back(std::move(entry));
    }
    return j;
}

Json sweep_json(const SweepResult& sweep) {
    Json j;
    j["verified"] = sweep.verified();
    j["pairs_checked"] = sweep.pairs_checked;
    if (sweep.counterexample) {
        Json pair;
        pair["p"] = sweep.counterexample->first.str();
        pair["q"] = sweep.counterexample->second.str();
        j["counterexample"] = std::move(pair);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json document(std::string_view command, Json inputs, Json result) {
    Json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

std::string render_json(const Json& doc) {
    return doc.dump(2) + "\n";
}

namespace {

bool is_scalar_array(const Json& j) {
    for (const Json& element : j) {
        if (element.is_object() || element.is_array()) {
            return false;
        }
    }
    return true;
}

std::string scalar_text(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string inline_array(const Json& j) {
    std::string out = "[";
    for (std::size_t k = 0; k < j.size(); k++) {
        if (k > 0) {
            out += ", ";
        }
        out += scalar_text(j[k]);
    }
    return out + "]";
}

void render_human_value(const Json& value, const std::string& indent, std::string& out);

void render_human_object(const Json& object, const std::string& indent, std::string& out) {
    for (const auto& [key, value] : object.items()) {
        out += indent + key + ":";
        render_human_value(value, indent, out);
    }
}

void render_human_value(const Json& value, const std::string& indent, std::string& out) {
    if (value.is_object()) {
        out += "\n";
        render_human_object(value, indent + "  ", out);
    } else if (value.is_array() && !is_scalar_array(value)) {
        out += "\n";
        for (const Json& element : value) {
            if (element.is_array()) {
                out += indent + "  - " + inline_array(element) + "\n";
            } else {
                // First key on the dash line, the rest aligned under it.
                std::string block;
                render_human_object(element, indent + "    ", block);
                block.replace(0, indent.size() + 4, indent + "  - ");
                out += block;
            }
        }
    } else if (value.is_array()) {
        out += " " + inline_array(value) + "\n";
    } else {
        out += " " + scalar_text(value) + "\n";
    }
}

}  // namespace

std::string render_human(const Json& doc) {
    std::string out;
    render_human_object(doc, "", out);
    return out;
}

}  // namespace qcompat
