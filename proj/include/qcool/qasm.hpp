// Copyright 2026 The qcool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <sstream>
#include <string>
#include <variant>

#include "qcool/synth.hpp"

namespace qcool {

/// OpenQASM 3 listing of a circuit.
///
/// Open controls are conjugated with X since the output uses only positive
/// controls; 0/1/2-control gates use x/cx/ccx and larger ones ctrl(k) @ x.
/// Each reset becomes a `// @thermal_reset q[i]` pragma followed by `reset
/// q[i];`. The pragma is metadata for tools that understand thermal resets;
/// a plain reset on hardware with identical qubits does not rethermalize.
inline std::string exportText(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << circuit.nQubits() << "] q;\n";
    for (const auto& instr : circuit.instructions()) {
        if (const auto* reset = std::get_if<ResetInstr>(&instr)) {
            for (int q : reset->qubits) {
                out << "// @thermal_reset q[" << q << "]\n";
                out << "reset q[" << q << "];\n";
            }
            continue;
        }
        const auto& gate = std::get<McNot>(instr);
        for (const auto& c : gate.controls) {
            if (!c.polarity) out << "x q[" << c.qubit << "];\n";
        }
        switch (gate.controls.size()) {
            case 0: out << "x "; break;
            case 1: out << "cx "; break;
            case 2: out << "ccx "; break;
            default: out << "ctrl(" << gate.controls.size() << ") @ x "; break;
        }
        for (const auto& c : gate.controls) out << "q[" << c.qubit << "], ";
        out << "q[" << gate.target << "];\n";
        for (const auto& c : gate.controls) {
            if (!c.polarity) out << "x q[" << c.qubit << "];\n";
        }
    }
    return out.str();
}

}  // namespace qcool
