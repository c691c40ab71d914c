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
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/prob_vector.hpp"
#include "qcool/synth.hpp"
#include "qcool/thermo.hpp"

// Diagonal-state simulation. Multi-controlled-NOT gates permute populations,
// the depolarizing channel and thermal resets map diagonal states to diagonal
// states, so tracking the 2^n populations is exact for every circuit this
// library produces.

namespace qcool {

enum class NoiseScope {
    kPerGate,   // after each gate, depolarize the qubits it touches
    kPerLayer,  // after each layer of disjoint gates, depolarize every qubit individually
};

struct NoiseModel {
    double p = 0.0;
    NoiseScope scope = NoiseScope::kPerGate;

    static NoiseModel noiseless() { return NoiseModel{}; }
};

namespace detail {

inline BasisIndex maskOf(const std::vector<int>& qubits, int n_qubits) {
    BasisIndex mask = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits) throw InvalidArgument("qubit " + std::to_string(q) + " is out of range");
        mask |= qubitMask(q, n_qubits);
    }
    return mask;
}

/// sums[i & ~mask] accumulates the marginal over the complement of `mask`.
inline std::vector<double> complementMarginal(const ProbVector& v, BasisIndex mask) {
    std::vector<double> sums(v.size(), 0.0);
    for (BasisIndex i = 0; i < v.size(); ++i) sums[i & ~mask] += v[i];
    return sums;
}

}  // namespace detail

inline ProbVector applyMcNot(const ProbVector& v, const McNot& gate) {
    const int n = v.nQubits();
    (void)detail::maskOf(gate.qubits(), n);
    ProbVector out = v;
    const BasisIndex flip = qubitMask(gate.target, n);
    for (BasisIndex i = 0; i < v.size(); ++i) {
        if ((i & flip) == 0 && gate.fires(i, n)) std::swap(out[i], out[i | flip]);
    }
    return out;
}

/// (1-p) v + p (marginal over the other qubits) x uniform(named qubits).
inline ProbVector depolarize(const ProbVector& v, const std::vector<int>& qubits, double p) {
    if (qubits.empty()) throw InvalidArgument("depolarizing channel needs at least one qubit");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("depolarizing probability must lie in [0, 1]");
    if (p == 0.0) return v;
    const BasisIndex mask = detail::maskOf(qubits, v.nQubits());
    const auto sums = detail::complementMarginal(v, mask);
    const double share = 1.0 / static_cast<double>(BasisIndex{1} << std::popcount(mask));
    ProbVector out = v;
    for (BasisIndex i = 0; i < v.size(); ++i) out[i] = (1.0 - p) * v[i] + p * sums[i & ~mask] * share;
    return out;
}

/// Replaces the named qubits by fresh, uncorrelated thermal qubits at bathP.
inline ProbVector resetQubits(const ProbVector& v, const std::vector<int>& qubits, ExcitationProbability bath) {
    if (qubits.empty()) throw InvalidArgument("reset needs at least one qubit");
    const int n = v.nQubits();
    const BasisIndex mask = detail::maskOf(qubits, n);
    const auto sums = detail::complementMarginal(v, mask);
    const double p = bath.value();
    ProbVector out = v;
    for (BasisIndex i = 0; i < v.size(); ++i) {
        double weight = sums[i & ~mask];
        for (int q : qubits) weight *= qubitValue(i, q, n) ? p : 1.0 - p;
        out[i] = weight;
    }
    return out;
}

inline double marginal(const ProbVector& v, int qubit) {
    const int n = v.nQubits();
    if (qubit < 0 || qubit >= n) throw InvalidArgument("qubit " + std::to_string(qubit) + " is out of range");
    const BasisIndex mask = qubitMask(qubit, n);
    double total = 0.0;
    for (BasisIndex i = 0; i < v.size(); ++i) {
        if (i & mask) total += v[i];
    }
    return total;
}

namespace detail {

inline ProbVector depolarizeEachQubit(ProbVector v, double p) {
    for (int q = 0; q < v.nQubits(); ++q) v = depolarize(v, {q}, p);
    return v;
}

}  // namespace detail

/// Runs a circuit on a diagonal state. Gates are followed by depolarizing
/// noise according to `noise`; resets rethermalize at `bath` and are noise-free.
inline ProbVector simulate(const Circuit& circuit, const ProbVector& v0, const NoiseModel& noise,
                           ExcitationProbability bath) {
    if (v0.nQubits() != circuit.nQubits()) throw InvalidArgument("state and circuit registers differ in size");
    if (!(noise.p >= 0.0 && noise.p <= 1.0)) throw InvalidArgument("noise probability must lie in [0, 1]");
    ProbVector v = v0;
    BasisIndex layer_mask = 0;
    const bool per_layer = noise.scope == NoiseScope::kPerLayer;
    auto close_layer = [&] {
        if (layer_mask != 0 && noise.p > 0.0) v = detail::depolarizeEachQubit(std::move(v), noise.p);
        layer_mask = 0;
    };
    for (const auto& instr : circuit.instructions()) {
        if (const auto* reset = std::get_if<ResetInstr>(&instr)) {
            if (per_layer) close_layer();
            v = resetQubits(v, reset->qubits, bath);
            continue;
        }
        const auto& gate = std::get<McNot>(instr);
        const auto touched = gate.qubits();
        if (per_layer) {
            const BasisIndex gate_mask = detail::maskOf(touched, v.nQubits());
            if (layer_mask & gate_mask) close_layer();
            layer_mask |= gate_mask;
            v = applyMcNot(v, gate);
        } else {
            v = applyMcNot(v, gate);
            if (noise.p > 0.0) v = depolarize(v, touched, noise.p);
        }
    }
    if (per_layer) close_layer();
    return v;
}

/// True when some reset in the circuit touches `qubit`.
inline bool resetsQubit(const Circuit& circuit, int qubit) {
    for (const auto& instr : circuit.instructions()) {
        if (const auto* reset = std::get_if<ResetInstr>(&instr)) {
            if (std::find(reset->qubits.begin(), reset->qubits.end(), qubit) != reset->qubits.end()) return true;
        }
    }
    return false;
}

}  // namespace qcool
