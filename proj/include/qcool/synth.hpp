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

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/permcore.hpp"

namespace qcool {

struct Control {
    int qubit = 0;
    bool polarity = true;  // true: fires on |1>, false: fires on |0> (open control)

    friend auto operator<=>(const Control&, const Control&) = default;
};

/// X on `target`, conditioned on every control matching its polarity.
struct McNot {
    int target = 0;
    std::vector<Control> controls;

    std::vector<int> qubits() const {
        std::vector<int> out;
        out.reserve(controls.size() + 1);
        for (const auto& c : controls) out.push_back(c.qubit);
        out.push_back(target);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool fires(BasisIndex state, int n_qubits) const {
        return std::all_of(controls.begin(), controls.end(),
                           [&](const Control& c) { return qubitValue(state, c.qubit, n_qubits) == c.polarity; });
    }

    BasisIndex act(BasisIndex state, int n_qubits) const {
        return fires(state, n_qubits) ? state ^ qubitMask(target, n_qubits) : state;
    }

    friend bool operator==(const McNot&, const McNot&) = default;
};

/// Rethermalize the named qubits with the bath. Not a unitary gate.
struct ResetInstr {
    std::vector<int> qubits;

    friend bool operator==(const ResetInstr&, const ResetInstr&) = default;
};

using Instruction = std::variant<McNot, ResetInstr>;

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(int n_qubits) : n_qubits_(n_qubits) { checkRegisterSize(n_qubits); }

    int nQubits() const noexcept { return n_qubits_; }
    const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
    std::size_t size() const noexcept { return instructions_.size(); }
    bool empty() const noexcept { return instructions_.empty(); }

    void append(McNot gate) {
        checkQubit(gate.target);
        std::vector<int> seen{gate.target};
        for (const auto& c : gate.controls) {
            checkQubit(c.qubit);
            if (std::find(seen.begin(), seen.end(), c.qubit) != seen.end()) {
                throw InvalidArgument("multi-controlled-NOT uses qubit " + std::to_string(c.qubit) + " twice");
            }
            seen.push_back(c.qubit);
        }
        instructions_.emplace_back(std::move(gate));
    }

    void append(ResetInstr reset) {
        if (reset.qubits.empty()) throw InvalidArgument("reset must name at least one qubit");
        for (int q : reset.qubits) checkQubit(q);
        instructions_.emplace_back(std::move(reset));
    }

    void append(const Circuit& other) {
        if (other.n_qubits_ != n_qubits_) throw InvalidArgument("cannot concatenate circuits on different registers");
        instructions_.insert(instructions_.end(), other.instructions_.begin(), other.instructions_.end());
    }

    friend bool operator==(const Circuit&, const Circuit&) = default;

   private:
    void checkQubit(int q) const {
        if (q < 0 || q >= n_qubits_) {
            throw InvalidArgument("qubit " + std::to_string(q) + " is outside a " + std::to_string(n_qubits_) +
                                  "-qubit register");
        }
    }

    int n_qubits_ = 0;
    std::vector<Instruction> instructions_;
};

/// Basis states from x to y, flipping the differing bits from the most
/// significant (qubit 0) down.
inline std::vector<BasisIndex> grayPath(BasisIndex x, BasisIndex y, int n_qubits) {
    checkRegisterSize(n_qubits);
    if (x == y) throw InvalidArgument("Gray path endpoints must differ");
    if (x >= dimensionOf(n_qubits) || y >= dimensionOf(n_qubits)) throw InvalidArgument("state out of range");
    std::vector<BasisIndex> path{x};
    BasisIndex current = x;
    for (int q = 0; q < n_qubits; ++q) {
        const auto mask = qubitMask(q, n_qubits);
        if ((x ^ y) & mask) {
            current ^= mask;
            path.push_back(current);
        }
    }
    return path;
}

namespace detail {

/// Gate swapping two adjacent (distance-1) basis states: controls on every
/// other qubit, matching `from`.
inline McNot adjacentSwap(BasisIndex from, BasisIndex to, int n_qubits) {
    McNot gate;
    for (int q = 0; q < n_qubits; ++q) {
        if ((from ^ to) & qubitMask(q, n_qubits)) {
            gate.target = q;
        } else {
            gate.controls.push_back(Control{q, qubitValue(from, q, n_qubits)});
        }
    }
    return gate;
}

}  // namespace detail

/// Exactly 2d-1 gates for Hamming distance d: walk x along its Gray path to
/// the penultimate state, swap into y, then undo the walk.
inline Circuit transpositionCircuit(BasisIndex x, BasisIndex y, int n_qubits) {
    const auto path = grayPath(x, y, n_qubits);
    const std::size_t d = path.size() - 1;
    std::vector<McNot> ladder;
    ladder.reserve(d - 1);
    for (std::size_t k = 0; k + 1 < d; ++k) ladder.push_back(detail::adjacentSwap(path[k], path[k + 1], n_qubits));

    Circuit circuit(n_qubits);
    for (const auto& g : ladder) circuit.append(g);
    circuit.append(detail::adjacentSwap(path[d - 1], path[d], n_qubits));
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) circuit.append(*it);
    return circuit;
}

/// i_1 -> ... -> i_m as the transpositions (i_1 i_2), (i_1 i_3), ..., (i_1 i_m)
/// in circuit order.
inline Circuit cycleCircuit(const Cycle& cycle, int n_qubits) {
    if (cycle.states.size() < 2) throw InvalidArgument("degenerate cycle");
    Circuit circuit(n_qubits);
    for (std::size_t k = 1; k < cycle.states.size(); ++k) {
        circuit.append(transpositionCircuit(cycle.states.front(), cycle.states[k], n_qubits));
    }
    return circuit;
}

template <class Value>
Circuit synthesizeCircuit(const BasicCoolingUnitary<Value>& u) {
    if (!u.isPhaseFree()) {
        throw SynthesisError("phase-bearing unitary not synthesizable as multi-controlled-NOT circuit");
    }
    Circuit circuit(u.nQubits());
    for (const auto& cycle : u.cycles()) circuit.append(cycleCircuit(cycle, u.nQubits()));
    return circuit;
}

struct GateCounts {
    std::map<std::size_t, std::size_t> byControls;  // number of controls -> gates
    std::size_t total = 0;                          // multi-controlled-NOT gates only
    std::size_t resets = 0;                         // reset instructions

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

inline GateCounts gateCount(const Circuit& circuit) {
    GateCounts counts;
    for (const auto& instr : circuit.instructions()) {
        if (const auto* g = std::get_if<McNot>(&instr)) {
            ++counts.byControls[g->controls.size()];
            ++counts.total;
        } else {
            ++counts.resets;
        }
    }
    return counts;
}

/// Removes adjacent identical gate pairs, repeatedly. Resets act as barriers.
inline Circuit simplify(const Circuit& circuit) {
    std::vector<Instruction> kept;
    for (const auto& instr : circuit.instructions()) {
        if (!kept.empty() && std::holds_alternative<McNot>(instr) && kept.back() == instr) {
            kept.pop_back();
            continue;
        }
        kept.push_back(instr);
    }
    Circuit out(circuit.nQubits());
    for (auto& instr : kept) std::visit([&](auto& i) { out.append(std::move(i)); }, instr);
    return out;
}

/// Places a circuit written on a small cluster onto `wires` of a larger
/// register: local qubit i becomes wires[i].
inline Circuit embed(const Circuit& local, const std::vector<int>& wires, int n_register) {
    if (wires.size() != static_cast<std::size_t>(local.nQubits())) {
        throw InvalidArgument("need one wire per local qubit");
    }
    Circuit out(n_register);
    for (const auto& instr : local.instructions()) {
        if (const auto* g = std::get_if<McNot>(&instr)) {
            McNot mapped{wires[static_cast<std::size_t>(g->target)], {}};
            for (const auto& c : g->controls) mapped.controls.push_back(Control{wires[static_cast<std::size_t>(c.qubit)], c.polarity});
            out.append(std::move(mapped));
        } else {
            ResetInstr mapped;
            for (int q : std::get<ResetInstr>(instr).qubits) mapped.qubits.push_back(wires[static_cast<std::size_t>(q)]);
            out.append(std::move(mapped));
        }
    }
    return out;
}

/// image[src] of a reset-free circuit, by tracking every basis state.
inline std::vector<BasisIndex> inducedPermutation(const Circuit& circuit) {
    const int n = circuit.nQubits();
    std::vector<BasisIndex> image(dimensionOf(n));
    for (BasisIndex s = 0; s < image.size(); ++s) {
        BasisIndex state = s;
        for (const auto& instr : circuit.instructions()) {
            const auto* g = std::get_if<McNot>(&instr);
            if (g == nullptr) throw InvalidArgument("circuits with resets do not induce a permutation");
            state = g->act(state, n);
        }
        image[s] = state;
    }
    return image;
}

}  // namespace qcool
