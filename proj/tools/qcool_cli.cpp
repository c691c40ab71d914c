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

// qcool command-line front end.
//
//   qcool generate    --config cfg.json [--out file.qasm]
//   qcool analyze     --config cfg.json --temp-mk 50 --freq-ghz 5 [--json|--csv]
//   qcool sweep       --grid grid.json | --config a.json ... --temps-mk 10,20 --freq-ghz 5
//   qcool noise-sweep --grid grid.json | ... --noise 0,0.001,0.01
//   qcool bench       --max-n 18
//
// Exit codes: 0 success, 2 usage or configuration error, 3 resource limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcool/qcool.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void writeOutput(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qcool::InvalidArgument("cannot write '" + path + "'");
    out << text;
}

qcool::NoiseScope parseScope(const std::string& s) {
    if (s == "per_gate") return qcool::NoiseScope::kPerGate;
    if (s == "per_layer") return qcool::NoiseScope::kPerLayer;
    throw qcool::InvalidArgument("--noise-scope must be per_gate or per_layer");
}

qcool::WorkUnit parseWorkUnit(const std::string& s) {
    if (s == "hbar_omega") return qcool::WorkUnit::kGap;
    if (s == "J") return qcool::WorkUnit::kJoule;
    throw qcool::InvalidArgument("--work-unit must be hbar_omega or J");
}

struct GenerateArgs {
    std::string config;
    std::string protocol;
    std::string out;
    bool simplify = false;
    std::optional<double> tempMk;
    std::optional<double> freqGHz;
    std::optional<double> p;
};

int runGenerate(const GenerateArgs& args) {
    auto config = qcool::loadMethodConfig(args.config);
    if (!args.protocol.empty()) {
        const auto kind = qcool::parseProtocolKind(args.protocol);
        if (kind == qcool::ProtocolKind::kCustom) {
            throw qcool::InvalidArgument("--protocol custom needs cycles in the config file");
        }
        std::visit([&](auto& c) { c.protocol = qcool::Protocol::builtin(kind); }, config);
    }
    std::optional<double> p = args.p;
    if (args.tempMk) {
        if (!args.freqGHz) throw qcool::InvalidArgument("--temp-mk requires --freq-ghz");
        p = qcool::probabilityFromTemperature(qcool::Temperature::millikelvin(*args.tempMk),
                                              qcool::EnergyGap::fromFrequencyGHz(*args.freqGHz))
                .value();
    }
    auto circuit = qcool::buildCircuit(config, p);
    if (args.simplify) circuit = qcool::simplify(circuit);
    writeOutput(qcool::exportText(circuit), args.out);

    const auto counts = qcool::gateCount(circuit);
    std::cerr << qcool::label(config) << ": " << circuit.nQubits() << " qubits, " << counts.total
              << " multi-controlled-NOT gates";
    for (const auto& [controls, count] : counts.byControls) std::cerr << ", " << count << " with " << controls << " controls";
    if (counts.resets) std::cerr << ", " << counts.resets << " reset layers";
    std::cerr << "\n";
    return 0;
}

struct AnalyzeArgs {
    std::string config;
    std::optional<double> tempMk;
    std::optional<double> freqGHz;
    double noise = 0.0;
    std::string noiseScope = "per_gate";
    std::string workUnit = "hbar_omega";
    bool json = false;
    bool csv = false;
};

int runAnalyze(const AnalyzeArgs& args) {
    if (!args.tempMk) throw qcool::InvalidArgument("analyze needs --temp-mk");
    if (!args.freqGHz) throw qcool::InvalidArgument("--temp-mk requires --freq-ghz (no default qubit frequency)");
    qcool::SweepGrid grid;
    grid.methods = {qcool::loadMethodConfig(args.config)};
    grid.temperaturesMk = {*args.tempMk};
    grid.noiseProbs = {args.noise};
    grid.frequencyGHz = *args.freqGHz;
    grid.noiseScope = parseScope(args.noiseScope);
    grid.workUnit = parseWorkUnit(args.workUnit);
    const auto rows = qcool::runGrid(grid);
    if (args.csv) {
        std::cout << qcool::toCsv(rows);
    } else {
        std::cout << qcool::toJson(rows.front()).dump(2) << "\n";
    }
    return 0;
}

struct SweepArgs {
    std::string grid;
    std::vector<std::string> configs;
    std::vector<double> tempsMk;
    std::vector<double> noise;
    std::optional<double> freqGHz;
    std::string noiseScope = "per_gate";
    std::string workUnit = "hbar_omega";
    unsigned jobs = 1;
    std::string out;
};

qcool::SweepGrid gridFromArgs(const SweepArgs& args, bool with_noise) {
    qcool::SweepGrid grid;
    if (!args.grid.empty()) {
        if (!args.configs.empty() || !args.tempsMk.empty()) {
            throw qcool::InvalidArgument("--grid cannot be combined with --config or --temps-mk");
        }
        grid = qcool::parseSweepGrid(qcool::detail::readJsonFile(args.grid),
                                     std::filesystem::path(args.grid).parent_path());
    } else {
        if (!args.freqGHz) throw qcool::InvalidArgument("sweeps need --freq-ghz (no default qubit frequency)");
        for (const auto& path : args.configs) grid.methods.push_back(qcool::loadMethodConfig(path));
        grid.temperaturesMk = args.tempsMk;
        grid.frequencyGHz = *args.freqGHz;
        grid.noiseScope = parseScope(args.noiseScope);
        grid.workUnit = parseWorkUnit(args.workUnit);
    }
    if (!args.noise.empty()) grid.noiseProbs = args.noise;
    if (with_noise && grid.noiseProbs.empty()) throw qcool::InvalidArgument("noise-sweep needs noise values");
    return grid;
}

struct BenchArgs {
    int minN = 8;
    int maxN = 18;
    int step = 2;
    std::uint64_t seed = 2024;
    int denseTimeMaxN = 8;
    std::string out;
};

void addSweepOptions(CLI::App* cmd, SweepArgs& args) {
    cmd->add_option("--grid", args.grid, "Sweep grid JSON file");
    cmd->add_option("--config", args.configs, "Method config JSON file (repeatable)");
    cmd->add_option("--temps-mk", args.tempsMk, "Initial temperatures in mK")->delimiter(',');
    cmd->add_option("--freq-ghz", args.freqGHz, "Qubit frequency in GHz");
    cmd->add_option("--noise-scope", args.noiseScope, "per_gate or per_layer");
    cmd->add_option("--work-unit", args.workUnit, "hbar_omega or J");
    cmd->add_option("--jobs,-j", args.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    cmd->add_option("--out,-o", args.out, "Output CSV path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computational cooling circuits: synthesis, analysis and noise sweeps"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write the cooling circuit as OpenQASM 3");
    generate->add_option("--config", gen.config, "Method config JSON file")->required();
    generate->add_option("--protocol", gen.protocol, "Override the protocol: ppa, mirror, minimal_work");
    generate->add_option("--out,-o", gen.out, "Output path (default stdout)");
    generate->add_flag("--simplify", gen.simplify, "Cancel adjacent identical gates");
    generate->add_option("--temp-mk", gen.tempMk, "Initial temperature in mK (semi-open circuits)");
    generate->add_option("--freq-ghz", gen.freqGHz, "Qubit frequency in GHz");
    generate->add_option("--p", gen.p, "Initial excitation probability (alternative to --temp-mk)");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Report final temperature, work and gate count");
    analyze->add_option("--config", an.config, "Method config JSON file")->required();
    analyze->add_option("--temp-mk", an.tempMk, "Initial temperature in mK");
    analyze->add_option("--freq-ghz", an.freqGHz, "Qubit frequency in GHz");
    analyze->add_option("--noise", an.noise, "Depolarizing probability per gate")->check(CLI::Range(0.0, 1.0));
    analyze->add_option("--noise-scope", an.noiseScope, "per_gate or per_layer");
    analyze->add_option("--work-unit", an.workUnit, "hbar_omega or J");
    auto* json_flag = analyze->add_flag("--json", an.json, "JSON output (default)");
    analyze->add_flag("--csv", an.csv, "CSV output")->excludes(json_flag);

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Noiseless final temperature over a temperature grid (CSV)");
    addSweepOptions(sweep, sw);

    SweepArgs ns;
    auto* noise_sweep = app.add_subcommand("noise-sweep", "Simulated final temperature over noise values (CSV)");
    addSweepOptions(noise_sweep, ns);
    noise_sweep->add_option("--noise", ns.noise, "Depolarizing probabilities")->delimiter(',');

    BenchArgs bn;
    auto* bench = app.add_subcommand("bench", "Sparse storage footprint and compose time (CSV)");
    bench->add_option("--min-n", bn.minN, "Smallest register");
    bench->add_option("--max-n", bn.maxN, "Largest register (at most 24)");
    bench->add_option("--step", bn.step, "Register size step");
    bench->add_option("--seed", bn.seed, "Seed for the random test permutations");
    bench->add_option("--dense-time-max-n", bn.denseTimeMaxN, "Largest n for explicit dense products");
    bench->add_option("--out,-o", bn.out, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*generate) return runGenerate(gen);
        if (*analyze) return runAnalyze(an);
        if (*sweep) {
            writeOutput(qcool::toCsv(qcool::runSweep(gridFromArgs(sw, false), sw.jobs)), sw.out);
            return 0;
        }
        if (*noise_sweep) {
            writeOutput(qcool::toCsv(qcool::runNoiseSweep(gridFromArgs(ns, true), ns.jobs)), ns.out);
            return 0;
        }
        if (*bench) {
            writeOutput(qcool::toCsv(qcool::runBench(bn.minN, bn.maxN, bn.step, bn.seed, bn.denseTimeMaxN)), bn.out);
            return 0;
        }
    } catch (const qcool::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const qcool::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcool::SynthesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
