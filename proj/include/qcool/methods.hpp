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
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/permcore.hpp"
#include "qcool/prob_vector.hpp"
#include "qcool/protocols.hpp"
#include "qcool/sim.hpp"
#include "qcool/synth.hpp"
#include "qcool/thermo.hpp"

// The four cooling methods. The cooled target is always qubit 0 of the
// register; cluster unitaries cool their own qubit 0, and circuits place
// clusters on wires so that the final target lands on register qubit 0.

namespace qcool {

struct DynamicConfig {
    int n = 3;
    Protocol protocol;
};

/// N = clusterSize^rounds qubits; round k cools clusterSize^(rounds-k) clusters.
struct SubOptimalConfig {
    int clusterSize = 3;
    int rounds = 2;
    Protocol protocol;
};

struct HbacConfig {
    int clusterSize = 3;
    int rounds = 2;
    std::vector<int> resetQubits{1, 2};  // register qubits, never the target (0)
    Protocol protocol;
    bool rederive = false;  // re-sort against the evolved state in rounds >= 2
};

/// Round i pairs the target with clusterSizes[i] - 1 fresh qubits.
struct SemiOpenConfig {
    std::vector<int> clusterSizes{3, 3};
    Protocol protocol;
};

using MethodConfig = std::variant<DynamicConfig, SubOptimalConfig, HbacConfig, SemiOpenConfig>;

inline constexpr int kTargetQubit = 0;

namespace detail {

inline int checkedPower(int base, int exponent) {
    long long total = 1;
    for (int i = 0; i < exponent; ++i) {
        total *= base;
        if (total > kMaxRegisterQubits) throw InvalidArgument("cluster size and rounds give too many qubits");
    }
    return static_cast<int>(total);
}

inline void checkProtocolFits(const Protocol& protocol, int cluster) {
    if (protocol.kind == ProtocolKind::kCustom && protocol.customQubits != cluster) {
        throw InvalidArgument("custom cycles are defined on " + std::to_string(protocol.customQubits) +
                              " qubits but the cluster size is " + std::to_string(cluster));
    }
}

inline void checkProbability(double p) {
    if (!(p >= 0.0 && p < 0.5)) throw InvalidArgument("initial excitation probability must lie in [0, 1/2)");
}

/// 1 - (sum of the largest half) of a distribution, summed from the smallest
/// entries up so that tiny results keep their relative precision.
inline double smallestHalfSum(ProbVector v) {
    auto entries = v.entries();
    std::sort(entries.begin(), entries.end());
    double total = 0.0;
    for (std::size_t i = 0; i < entries.size() / 2; ++i) total += entries[i];
    return total;
}

}  // namespace detail

inline void validate(const MethodConfig& config) {
    std::visit(
        [](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                if (c.n < 2) throw InvalidArgument("dynamic cooling needs n >= 2");
                checkRegisterSize(c.n);
                detail::checkProtocolFits(c.protocol, c.n);
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                if (c.clusterSize < 2) throw InvalidArgument("sub-optimal cooling needs cluster size >= 2");
                if (c.rounds < 1) throw InvalidArgument("sub-optimal cooling needs at least one round");
                (void)detail::checkedPower(c.clusterSize, c.rounds);
                detail::checkProtocolFits(c.protocol, c.clusterSize);
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                if (c.clusterSize < 2) throw InvalidArgument("HBAC needs cluster size >= 2");
                checkRegisterSize(c.clusterSize);
                if (c.rounds < 1) throw InvalidArgument("HBAC needs at least one round");
                if (c.resetQubits.empty()) throw InvalidArgument("HBAC needs at least one reset qubit");
                std::set<int> seen;
                for (int q : c.resetQubits) {
                    if (q == kTargetQubit) throw InvalidArgument("HBAC reset qubits must exclude the target");
                    if (q < 0 || q >= c.clusterSize) throw InvalidArgument("HBAC reset qubit out of range");
                    if (!seen.insert(q).second) throw InvalidArgument("HBAC reset qubits must be distinct");
                }
                detail::checkProtocolFits(c.protocol, c.clusterSize);
            } else {
                if (c.clusterSizes.empty()) throw InvalidArgument("semi-open cooling needs at least one round");
                long long total = 1;
                for (int n : c.clusterSizes) {
                    if (n < 2) throw InvalidArgument("semi-open cluster sizes must be >= 2");
                    total += n - 1;
                }
                if (total > kMaxRegisterQubits) throw InvalidArgument("semi-open configuration uses too many qubits");
                detail::checkProtocolFits(c.protocol, c.clusterSizes.front());
            }
        },
        config);
}

inline int totalQubits(const MethodConfig& config) {
    return std::visit(
        [](const auto& c) -> int {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                return c.n;
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                return detail::checkedPower(c.clusterSize, c.rounds);
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                return c.clusterSize;
            } else {
                int total = 1;
                for (int n : c.clusterSizes) total += n - 1;
                return total;
            }
        },
        config);
}

inline const Protocol& protocolOf(const MethodConfig& config) {
    return std::visit([](const auto& c) -> const Protocol& { return c.protocol; }, config);
}

/// Short stable label without commas, e.g. "dynamic(n=9;mirror)".
inline std::string label(const MethodConfig& config) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            const std::string protocol = toString(c.protocol.kind);
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                return "dynamic(n=" + std::to_string(c.n) + ";" + protocol + ")";
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                return "suboptimal(n=" + std::to_string(c.clusterSize) + ";r=" + std::to_string(c.rounds) + ";" +
                       protocol + ")";
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                std::string reset;
                for (int q : c.resetQubits) reset += (reset.empty() ? "" : "+") + std::to_string(q + 1);
                return "hbac(n=" + std::to_string(c.clusterSize) + ";r=" + std::to_string(c.rounds) +
                       ";reset=" + reset + ";" + protocol + (c.rederive ? ";rederive" : "") + ")";
            } else {
                std::string sizes;
                for (int n : c.clusterSizes) sizes += (sizes.empty() ? "" : "+") + std::to_string(n);
                return "semiopen(n=" + sizes + ";" + protocol + ")";
            }
        },
        config);
}

// ---------------------------------------------------------------------------
// Final excitation probability of the target.

/// Maximal closed-system cooling of one of n identical qubits: the sum of the
/// 2^(n-1) smallest thermal populations.
inline double dynamicFinalP(double p, int n) {
    detail::checkProbability(p);
    return detail::smallestHalfSum(thermalProductVector(ThermalSpec::homogeneous(n, p)));
}

inline double subOptimalFinalP(double p, int n, int rounds) {
    if (n < 2 || rounds < 1) throw InvalidArgument("sub-optimal cooling needs n >= 2 and rounds >= 1");
    for (int k = 0; k < rounds; ++k) p = dynamicFinalP(p, n);
    return p;
}

/// Target after one maximal cooling round with the target at pTarget and
/// (n-1) fresh qubits at p.
inline double heterogeneousRoundFinalP(double p_target, double p, int n) {
    ThermalSpec spec = ThermalSpec::homogeneous(n, p);
    spec.perQubit.front() = ExcitationProbability(p_target);
    return detail::smallestHalfSum(thermalProductVector(spec));
}

inline double semiOpenFinalP(double p, const std::vector<int>& cluster_sizes) {
    if (cluster_sizes.empty()) throw InvalidArgument("semi-open cooling needs at least one round");
    for (int n : cluster_sizes) {
        if (n < 2) throw InvalidArgument("semi-open cluster sizes must be >= 2");
    }
    double target = dynamicFinalP(p, cluster_sizes.front());
    for (std::size_t i = 1; i < cluster_sizes.size(); ++i) target = heterogeneousRoundFinalP(target, p, cluster_sizes[i]);
    return target;
}

namespace detail {

/// Joint-state evolution of HBAC. `visit(unitary, before)` sees every cooling
/// step before it is applied.
template <class Visitor>
ProbVector runHbac(double p, const HbacConfig& config, Visitor&& visit) {
    const ExcitationProbability bath(p);
    const CoolingUnitary first = protocolUnitary(config.protocol, config.clusterSize);
    ProbVector v = thermalProductVector(ThermalSpec::homogeneous(config.clusterSize, p));
    for (int round = 1; round <= config.rounds; ++round) {
        if (round > 1) v = resetQubits(v, config.resetQubits, bath);
        if (round > 1 && config.rederive) {
            const CoolingUnitary sorted = sortingUnitary(thermalOrder(v), config.clusterSize);
            visit(sorted, v);
            v = sorted.apply(v);
        } else {
            visit(first, v);
            v = first.apply(v);
        }
    }
    return v;
}

}  // namespace detail

/// Target after `rounds` of cooling with the round-1 permutation, resetting
/// `resetQubits` to the bath between rounds.
inline double hbacFinalP(double p, int n, int rounds, const std::vector<int>& reset_qubits,
                         const Protocol& protocol = Protocol::builtin(ProtocolKind::kMinimalWork),
                         bool rederive = false) {
    detail::checkProbability(p);
    const HbacConfig config{n, rounds, reset_qubits, protocol, rederive};
    validate(config);
    return marginal(detail::runHbac(p, config, [](const CoolingUnitary&, const ProbVector&) {}), kTargetQubit);
}

namespace detail {

inline double targetAfter(const CoolingUnitary& u, const ThermalSpec& spec) {
    return marginal(u.apply(thermalProductVector(spec)), kTargetQubit);
}

}  // namespace detail

/// Final target excitation probability of a configuration. Built-in
/// protocols use the sorted-population formulas; custom cycle lists are
/// evaluated by applying their unitary.
inline double finalProbability(const MethodConfig& config, double p) {
    validate(config);
    detail::checkProbability(p);
    const bool custom = protocolOf(config).kind == ProtocolKind::kCustom;
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                if (!custom) return dynamicFinalP(p, c.n);
                return detail::targetAfter(protocolUnitary(c.protocol, c.n), ThermalSpec::homogeneous(c.n, p));
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                if (!custom) return subOptimalFinalP(p, c.clusterSize, c.rounds);
                const auto u = protocolUnitary(c.protocol, c.clusterSize);
                double q = p;
                for (int k = 0; k < c.rounds; ++k) q = detail::targetAfter(u, ThermalSpec::homogeneous(c.clusterSize, q));
                return q;
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                return hbacFinalP(p, c.clusterSize, c.rounds, c.resetQubits, c.protocol, c.rederive);
            } else {
                if (!custom) return semiOpenFinalP(p, c.clusterSizes);
                const int first = c.clusterSizes.front();
                double q = detail::targetAfter(protocolUnitary(c.protocol, first), ThermalSpec::homogeneous(first, p));
                for (std::size_t i = 1; i < c.clusterSizes.size(); ++i) {
                    q = heterogeneousRoundFinalP(q, p, c.clusterSizes[i]);
                }
                return q;
            }
        },
        config);
}

// ---------------------------------------------------------------------------
// Work.

/// W = sum_j E_j (v'_j - v_j) with E_j = gap * HammingWeight(j), in the gap's
/// units (joules, or hbar*omega for a natural gap).
template <class Value>
double workCost(const BasicCoolingUnitary<Value>& u, const ProbVector& v, const EnergyGap& gap) {
    const ProbVector after = u.apply(v);
    double total = 0.0;
    for (BasisIndex j = 0; j < v.size(); ++j) {
        const double delta = after[j] - v[j];
        if (delta != 0.0) total += static_cast<double>(hammingWeight(j)) * delta;
    }
    return gap.value() * total;
}

/// Sum of the work of every cooling unitary, each evaluated on the state its
/// qubits are in just before it acts.
inline double totalWorkCost(const MethodConfig& config, double p, const EnergyGap& gap) {
    validate(config);
    detail::checkProbability(p);
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                return workCost(protocolUnitary(c.protocol, c.n), thermalProductVector(ThermalSpec::homogeneous(c.n, p)),
                                gap);
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                // Round-k clusters consist of independent round-(k-1) targets.
                const auto u = protocolUnitary(c.protocol, c.clusterSize);
                double q = p;
                double total = 0.0;
                for (int k = 1; k <= c.rounds; ++k) {
                    const auto clusters = detail::checkedPower(c.clusterSize, c.rounds - k);
                    const auto before = thermalProductVector(ThermalSpec::homogeneous(c.clusterSize, q));
                    total += clusters * workCost(u, before, gap);
                    q = marginal(u.apply(before), kTargetQubit);
                }
                return total;
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                double total = 0.0;
                detail::runHbac(p, c, [&](const CoolingUnitary& u, const ProbVector& before) {
                    total += workCost(u, before, gap);
                });
                return total;
            } else {
                const int first = c.clusterSizes.front();
                const auto u1 = protocolUnitary(c.protocol, first);
                const auto v1 = thermalProductVector(ThermalSpec::homogeneous(first, p));
                double total = workCost(u1, v1, gap);
                double target = marginal(u1.apply(v1), kTargetQubit);
                for (std::size_t i = 1; i < c.clusterSizes.size(); ++i) {
                    ThermalSpec spec = ThermalSpec::homogeneous(c.clusterSizes[i], p);
                    spec.perQubit.front() = ExcitationProbability(target);
                    const auto u = heterogeneousMaxCooling(spec);
                    const auto before = thermalProductVector(spec);
                    total += workCost(u, before, gap);
                    target = marginal(u.apply(before), kTargetQubit);
                }
                return total;
            }
        },
        config);
}

// ---------------------------------------------------------------------------
// Circuits.

/// Full cooling circuit on totalQubits(config) wires. Semi-open rounds after
/// the first (and re-derived HBAC rounds) depend on the populations, so those
/// configurations need the initial excitation probability.
inline Circuit buildCircuit(const MethodConfig& config, std::optional<double> p = std::nullopt) {
    validate(config);
    const int total = totalQubits(config);
    return std::visit(
        [&](const auto& c) -> Circuit {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                return synthesizeCircuit(protocolUnitary(c.protocol, c.n));
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                const Circuit local = synthesizeCircuit(protocolUnitary(c.protocol, c.clusterSize));
                Circuit circuit(total);
                int stride = 1;
                for (int k = 1; k <= c.rounds; ++k) {
                    const int span = stride * c.clusterSize;
                    for (int base = 0; base < total; base += span) {
                        std::vector<int> wires;
                        for (int j = 0; j < c.clusterSize; ++j) wires.push_back(base + j * stride);
                        circuit.append(embed(local, wires, total));
                    }
                    stride = span;
                }
                return circuit;
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                if (c.rederive) {
                    if (!p) throw InvalidArgument("re-derived HBAC circuits need the initial excitation probability");
                    Circuit circuit(total);
                    int round = 0;
                    detail::runHbac(*p, c, [&](const CoolingUnitary& u, const ProbVector&) {
                        if (round++ > 0) circuit.append(ResetInstr{c.resetQubits});
                        circuit.append(synthesizeCircuit(u));
                    });
                    return circuit;
                }
                const Circuit block = synthesizeCircuit(protocolUnitary(c.protocol, c.clusterSize));
                Circuit circuit(total);
                for (int round = 1; round <= c.rounds; ++round) {
                    if (round > 1) circuit.append(ResetInstr{c.resetQubits});
                    circuit.append(block);
                }
                return circuit;
            } else {
                Circuit circuit(total);
                const int first = c.clusterSizes.front();
                std::vector<int> wires(static_cast<std::size_t>(first));
                for (int j = 0; j < first; ++j) wires[static_cast<std::size_t>(j)] = j;
                circuit.append(embed(synthesizeCircuit(protocolUnitary(c.protocol, first)), wires, total));
                if (c.clusterSizes.size() == 1) return circuit;
                if (!p) throw InvalidArgument("semi-open circuits need the initial excitation probability");
                detail::checkProbability(*p);
                double target = finalProbability(SemiOpenConfig{{first}, c.protocol}, *p);
                int next_fresh = first;
                for (std::size_t i = 1; i < c.clusterSizes.size(); ++i) {
                    const int n = c.clusterSizes[i];
                    ThermalSpec spec = ThermalSpec::homogeneous(n, *p);
                    spec.perQubit.front() = ExcitationProbability(target);
                    const auto u = heterogeneousMaxCooling(spec);
                    std::vector<int> round_wires{kTargetQubit};
                    for (int j = 1; j < n; ++j) round_wires.push_back(next_fresh++);
                    circuit.append(embed(synthesizeCircuit(u), round_wires, total));
                    target = detail::targetAfter(u, spec);
                }
                return circuit;
            }
        },
        config);
}

// ---------------------------------------------------------------------------
// Reports.

struct CoolingReport {
    double initialP1 = 0.0;
    double finalP1 = 0.0;
    Temperature initialTemperature = Temperature::kelvin(0.0);
    Temperature finalTemperature = Temperature::kelvin(0.0);
    double work = 0.0;
    GateCounts gateCounts;
    int totalQubits = 0;
    Circuit circuit;
    std::vector<std::string> warnings;
};

inline CoolingReport reportAtProbability(const MethodConfig& config, double p, const EnergyGap& gap) {
    CoolingReport report;
    report.initialP1 = p;
    report.initialTemperature = reportedTemperature(ExcitationProbability(p), gap);
    report.finalP1 = finalProbability(config, p);
    report.finalTemperature = reportedTemperature(ExcitationProbability(report.finalP1), gap);
    report.work = totalWorkCost(config, p, gap);
    report.circuit = buildCircuit(config, p);
    report.gateCounts = gateCount(report.circuit);
    report.totalQubits = totalQubits(config);
    if (resetsQubit(report.circuit, kTargetQubit)) report.warnings.emplace_back("circuit resets the target qubit");
    return report;
}

inline CoolingReport report(const MethodConfig& config, Temperature initial, const EnergyGap& gap) {
    if (!(initial.inKelvin() > 0.0) || initial.isInfinite()) {
        throw InvalidArgument("initial temperature must be positive and finite");
    }
    return reportAtProbability(config, probabilityFromTemperature(initial, gap).value(), gap);
}

/// Target excitation after running the method's circuit on a noisy
/// diagonal-state simulator, starting from the thermal state at p.
inline double simulatedFinalP(const MethodConfig& config, double p, const NoiseModel& noise) {
    const Circuit circuit = buildCircuit(config, p);
    const auto v0 = thermalProductVector(ThermalSpec::homogeneous(circuit.nQubits(), p));
    return marginal(simulate(circuit, v0, noise, ExcitationProbability(p)), kTargetQubit);
}

}  // namespace qcool
