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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcool/errors.hpp"
#include "qcool/methods.hpp"
#include "qcool/permcore.hpp"
#include "qcool/protocols.hpp"

// JSON front ends for cycle lists and method configurations. The grammar is
// documented in schemas/*.schema.json; violations raise InvalidArgument with
// the offending path in the message.

namespace qcool {

using Json = nlohmann::json;

struct CycleList {
    int nQubits = 0;
    std::vector<Cycle> cycles;
};

namespace detail {

inline void requireObject(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InvalidArgument(where + ": expected a JSON object");
}

inline void rejectUnknownKeys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) throw InvalidArgument(where + ": unknown key '" + key + "'");
    }
}

inline int requirePositiveInt(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw InvalidArgument(where + ": missing required key '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000) {
        throw InvalidArgument(where + "." + key + ": expected a positive integer");
    }
    return v.get<int>();
}

inline std::vector<int> requireIntList(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_array()) throw InvalidArgument(where + ": '" + key + "' must be an array");
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000) {
            throw InvalidArgument(where + "." + key + ": expected nonnegative integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

inline Json readJsonFile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

}  // namespace detail

/// {"n": 3, "cycles": [["000", "001", "100"], [5, "110"]]}
inline CycleList parseCycleList(const Json& j) {
    const std::string where = "cycle list";
    detail::requireObject(j, where);
    detail::rejectUnknownKeys(j, {"n", "cycles"}, where);
    CycleList out;
    out.nQubits = detail::requirePositiveInt(j, "n", where);
    checkRegisterSize(out.nQubits);
    if (!j.contains("cycles") || !j.at("cycles").is_array()) throw InvalidArgument(where + ": 'cycles' must be an array");
    std::vector<std::vector<StateLabel>> labels;
    for (const auto& cycle : j.at("cycles")) {
        if (!cycle.is_array()) throw InvalidArgument(where + ": each cycle must be an array of states");
        std::vector<StateLabel> states;
        for (const auto& s : cycle) {
            if (s.is_string()) {
                states.emplace_back(s.get<std::string>());
            } else if (s.is_number_unsigned() || (s.is_number_integer() && s.get<long long>() >= 0)) {
                states.emplace_back(s.get<BasisIndex>());
            } else {
                throw InvalidArgument(where + ": states must be bit strings or nonnegative integers");
            }
        }
        labels.push_back(std::move(states));
    }
    // Parse and validate through the unitary so errors match fromCycles.
    const auto u = CoolingUnitary::fromCycles(labels, out.nQubits);
    out.cycles = u.cycles();
    return out;
}

inline CycleList loadCycleList(const std::filesystem::path& path) { return parseCycleList(detail::readJsonFile(path)); }

namespace detail {

inline Protocol parseProtocol(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
    const std::string name = j.contains("protocol") ? j.at("protocol").get<std::string>() : "minimal_work";
    const ProtocolKind kind = parseProtocolKind(name);
    const bool has_cycles = j.contains("cycles") || j.contains("cycles_file");
    if (kind != ProtocolKind::kCustom) {
        if (has_cycles) throw InvalidArgument(where + ": cycles are only allowed with protocol \"custom\"");
        return Protocol::builtin(kind);
    }
    if (j.contains("cycles") == j.contains("cycles_file")) {
        throw InvalidArgument(where + ": protocol \"custom\" needs exactly one of 'cycles' or 'cycles_file'");
    }
    const CycleList list = j.contains("cycles") ? parseCycleList(j.at("cycles"))
                                                : loadCycleList(base_dir / j.at("cycles_file").get<std::string>());
    return Protocol::custom(list.cycles, list.nQubits);
}

}  // namespace detail

/// Method configuration. Reset qubits are 1-based (qubit 1 is the target).
///
///   {"method": "dynamic", "n": 3, "protocol": "minimal_work"}
///   {"method": "suboptimal", "cluster_size": 3, "rounds": 2}
///   {"method": "hbac", "cluster_size": 3, "rounds": 2, "reset_qubits": [2, 3]}
///   {"method": "semiopen", "cluster_sizes": [3, 3]}
inline MethodConfig parseMethodConfig(const Json& j, const std::filesystem::path& base_dir = {}) {
    std::string where = "config";
    detail::requireObject(j, where);
    if (!j.contains("method") || !j.at("method").is_string()) throw InvalidArgument(where + ": missing 'method'");
    const std::string method = j.at("method").get<std::string>();
    where += "(" + method + ")";
    if (j.contains("protocol") && !j.at("protocol").is_string()) {
        throw InvalidArgument(where + ".protocol: expected a string");
    }
    const std::set<std::string> common{"method", "protocol", "cycles", "cycles_file"};
    auto keys = [&](std::initializer_list<const char*> extra) {
        std::set<std::string> out = common;
        for (const char* k : extra) out.insert(k);
        return out;
    };

    MethodConfig config;
    try {
        if (method == "dynamic") {
            detail::rejectUnknownKeys(j, keys({"n"}), where);
            config = DynamicConfig{detail::requirePositiveInt(j, "n", where), detail::parseProtocol(j, base_dir, where)};
        } else if (method == "suboptimal") {
            detail::rejectUnknownKeys(j, keys({"cluster_size", "rounds"}), where);
            config = SubOptimalConfig{detail::requirePositiveInt(j, "cluster_size", where),
                                      detail::requirePositiveInt(j, "rounds", where),
                                      detail::parseProtocol(j, base_dir, where)};
        } else if (method == "hbac") {
            detail::rejectUnknownKeys(j, keys({"cluster_size", "rounds", "reset_qubits", "rederive"}), where);
            HbacConfig c;
            c.clusterSize = detail::requirePositiveInt(j, "cluster_size", where);
            c.rounds = detail::requirePositiveInt(j, "rounds", where);
            c.resetQubits.clear();
            for (int q : detail::requireIntList(j, "reset_qubits", where)) {
                if (q < 1) throw InvalidArgument(where + ".reset_qubits: qubits are numbered from 1");
                c.resetQubits.push_back(q - 1);
            }
            c.protocol = detail::parseProtocol(j, base_dir, where);
            if (j.contains("rederive")) {
                if (!j.at("rederive").is_boolean()) throw InvalidArgument(where + ".rederive: expected a boolean");
                c.rederive = j.at("rederive").get<bool>();
            }
            config = c;
        } else if (method == "semiopen" || method == "semi_open") {
            detail::rejectUnknownKeys(j, keys({"cluster_sizes"}), where);
            config = SemiOpenConfig{detail::requireIntList(j, "cluster_sizes", where),
                                    detail::parseProtocol(j, base_dir, where)};
        } else {
            throw InvalidArgument(where + ": unknown method (expected dynamic, suboptimal, hbac or semiopen)");
        }
    } catch (const Json::exception& e) {
        throw InvalidArgument(where + ": " + e.what());
    }
    validate(config);
    return config;
}

inline MethodConfig loadMethodConfig(const std::filesystem::path& path) {
    return parseMethodConfig(detail::readJsonFile(path), path.parent_path());
}

inline Json toJson(const MethodConfig& config) {
    Json j;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, DynamicConfig>) {
                j = {{"method", "dynamic"}, {"n", c.n}};
            } else if constexpr (std::is_same_v<T, SubOptimalConfig>) {
                j = {{"method", "suboptimal"}, {"cluster_size", c.clusterSize}, {"rounds", c.rounds}};
            } else if constexpr (std::is_same_v<T, HbacConfig>) {
                std::vector<int> reset;
                for (int q : c.resetQubits) reset.push_back(q + 1);
                j = {{"method", "hbac"}, {"cluster_size", c.clusterSize}, {"rounds", c.rounds}, {"reset_qubits", reset}};
                if (c.rederive) j["rederive"] = true;
            } else {
                j = {{"method", "semiopen"}, {"cluster_sizes", c.clusterSizes}};
            }
            j["protocol"] = toString(c.protocol.kind);
            if (c.protocol.kind == ProtocolKind::kCustom) {
                Json cycles = Json::array();
                for (const auto& cycle : c.protocol.customCycles) cycles.push_back(cycle.states);
                j["cycles"] = {{"n", c.protocol.customQubits}, {"cycles", cycles}};
            }
        },
        config);
    return j;
}

}  // namespace qcool
