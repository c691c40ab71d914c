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
#include <numeric>
#include <string>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/permcore.hpp"
#include "qcool/prob_vector.hpp"
#include "qcool/thermo.hpp"

namespace qcool {

enum class ProtocolKind { kPPA, kMirror, kMinimalWork, kCustom };

inline std::string toString(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::kPPA: return "ppa";
        case ProtocolKind::kMirror: return "mirror";
        case ProtocolKind::kMinimalWork: return "minimal_work";
        case ProtocolKind::kCustom: return "custom";
    }
    return "unknown";
}

inline ProtocolKind parseProtocolKind(const std::string& name) {
    if (name == "ppa" || name == "partner_pairing") return ProtocolKind::kPPA;
    if (name == "mirror") return ProtocolKind::kMirror;
    if (name == "minimal_work" || name == "minimal-work" || name == "min_work") return ProtocolKind::kMinimalWork;
    if (name == "custom") return ProtocolKind::kCustom;
    throw InvalidArgument("unknown protocol '" + name + "' (expected ppa, mirror, minimal_work or custom)");
}

/// A built-in protocol, or an explicit cycle list for Custom.
struct Protocol {
    ProtocolKind kind = ProtocolKind::kMinimalWork;
    std::vector<Cycle> customCycles;
    int customQubits = 0;

    static Protocol builtin(ProtocolKind k) { return Protocol{k, {}, 0}; }
    static Protocol custom(std::vector<Cycle> cycles, int n_qubits) {
        return Protocol{ProtocolKind::kCustom, std::move(cycles), n_qubits};
    }
};

/// Basis states ranked by descending probability, ties by ascending index.
inline std::vector<BasisIndex> thermalOrder(const ProbVector& v) {
    std::vector<BasisIndex> order(v.size());
    std::iota(order.begin(), order.end(), BasisIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](BasisIndex a, BasisIndex b) { return v[a] > v[b]; });
    return order;
}

/// Ranking of any homogeneous thermal state with 0 < p < 1/2: ascending
/// Hamming weight, ties by ascending index. Independent of p.
inline std::vector<BasisIndex> homogeneousOrder(int n_qubits) {
    checkRegisterSize(n_qubits);
    std::vector<BasisIndex> order(dimensionOf(n_qubits));
    std::iota(order.begin(), order.end(), BasisIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [](BasisIndex a, BasisIndex b) { return hammingWeight(a) < hammingWeight(b); });
    return order;
}

namespace detail {

/// Index in which `target` has been moved to the most significant position
/// and the remaining qubits keep their relative order, mapped back to the
/// original qubit layout.
inline BasisIndex fromTargetFirst(BasisIndex relabeled, int target, int n_qubits) {
    BasisIndex out = 0;
    if (qubitValue(relabeled, 0, n_qubits)) out |= qubitMask(target, n_qubits);
    int src = 1;
    for (int q = 0; q < n_qubits; ++q) {
        if (q == target) continue;
        if (qubitValue(relabeled, src, n_qubits)) out |= qubitMask(q, n_qubits);
        ++src;
    }
    return out;
}

inline CoolingUnitary transpositions(const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs, int n_qubits) {
    std::vector<Cycle> cycles;
    cycles.reserve(pairs.size());
    for (const auto& [a, b] : pairs) cycles.push_back(Cycle{{a, b}});
    return CoolingUnitary::fromCycles(std::move(cycles), n_qubits);
}

}  // namespace detail

/// Sends the state of rank k in `order` to the k-th state of the target-first
/// index order, so the 2^(n-1) most populated states end up with the target
/// in |0>.
inline CoolingUnitary sortingUnitary(const std::vector<BasisIndex>& order, int n_qubits, int target = 0) {
    checkRegisterSize(n_qubits);
    if (target < 0 || target >= n_qubits) throw InvalidArgument("target qubit out of range");
    if (order.size() != dimensionOf(n_qubits)) throw InvalidArgument("ranking length must be 2^n");
    std::vector<BasisIndex> image(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) image[order[k]] = detail::fromTargetFirst(k, target, n_qubits);
    return CoolingUnitary::fromPermutation(image, n_qubits);
}

/// Partner-pairing algorithm: the full stable sort of a homogeneous thermal
/// diagonal. Target is qubit 0.
inline CoolingUnitary ppa(int n_qubits) { return sortingUnitary(homogeneousOrder(n_qubits), n_qubits); }

/// Swaps each target-excited state j with its bitwise complement whenever j
/// has the smaller Hamming weight. Equal-weight pairs are left alone.
inline CoolingUnitary mirrorProtocol(int n_qubits) {
    checkRegisterSize(n_qubits);
    const BasisIndex dim = dimensionOf(n_qubits);
    std::vector<std::pair<BasisIndex, BasisIndex>> pairs;
    for (BasisIndex j = dim / 2; j < dim; ++j) {
        const BasisIndex partner = (dim - 1) ^ j;
        if (hammingWeight(j) < hammingWeight(partner)) pairs.emplace_back(partner, j);
    }
    return detail::transpositions(pairs, n_qubits);
}

/// Maximal cooling at the least work: the 2^(n-1) most populated states fill
/// the target-|0> half and the rest fill the target-|1> half, each half
/// assigned in descending population to ascending energy (ties by index).
/// By the rearrangement inequality no other maximally cooling permutation of
/// a homogeneous thermal state ends at lower energy.
inline CoolingUnitary minimalWorkProtocol(int n_qubits) {
    const auto order = homogeneousOrder(n_qubits);
    const BasisIndex half = dimensionOf(n_qubits) / 2;
    std::vector<BasisIndex> ground_half;
    std::vector<BasisIndex> excited_half;
    for (BasisIndex s : order) (s < half ? ground_half : excited_half).push_back(s);
    std::vector<BasisIndex> image(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) image[order[k]] = k < half ? ground_half[k] : excited_half[k - half];
    return CoolingUnitary::fromPermutation(image, n_qubits);
}

/// Maximal cooling of `target` for a product state with unequal excitation
/// probabilities: full stable sort of the joint distribution.
inline CoolingUnitary heterogeneousMaxCooling(const ThermalSpec& spec, int target = 0) {
    for (const auto& p : spec.perQubit) {
        if (!(p.value() < 0.5)) throw InvalidArgument("heterogeneous cooling expects every p below 1/2");
    }
    const auto v = thermalProductVector(spec);
    return sortingUnitary(thermalOrder(v), spec.nQubits(), target);
}

/// Unitary of a protocol on an n-qubit cluster.
inline CoolingUnitary protocolUnitary(const Protocol& protocol, int n_qubits) {
    switch (protocol.kind) {
        case ProtocolKind::kPPA: return ppa(n_qubits);
        case ProtocolKind::kMirror: return mirrorProtocol(n_qubits);
        case ProtocolKind::kMinimalWork: return minimalWorkProtocol(n_qubits);
        case ProtocolKind::kCustom:
            if (protocol.customQubits != n_qubits) {
                throw InvalidArgument("custom protocol is defined on " + std::to_string(protocol.customQubits) +
                                      " qubits but the cluster has " + std::to_string(n_qubits));
            }
            return CoolingUnitary::fromCycles(protocol.customCycles, n_qubits);
    }
    throw InvalidArgument("unknown protocol kind");
}

}  // namespace qcool
