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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "qcool/io.hpp"
#include "qcool/methods.hpp"
#include "qcool/permcore.hpp"
#include "qcool/sim.hpp"
#include "qcool/thermo.hpp"

namespace qcool {

enum class WorkUnit { kGap, kJoule };

inline std::string toString(WorkUnit unit) { return unit == WorkUnit::kJoule ? "J" : "hbar_omega"; }

struct SweepGrid {
    std::vector<double> temperaturesMk;
    std::vector<double> noiseProbs{0.0};
    std::vector<MethodConfig> methods;
    double frequencyGHz = 0.0;
    NoiseScope noiseScope = NoiseScope::kPerGate;
    WorkUnit workUnit = WorkUnit::kGap;
    bool simulateCircuits = false;  // also simulate at zero noise
};

/// One line of analyze/sweep output. Infinite temperatures are +inf here,
/// "inf" in CSV and null in JSON.
struct ResultRow {
    std::string method;
    int totalQubits = 0;
    double initialMk = 0.0;
    double noiseP = 0.0;
    double finalMk = 0.0;
    double finalP1 = 0.0;
    double work = 0.0;
    WorkUnit workUnit = WorkUnit::kGap;
    std::size_t gates = 0;
};

inline const char* kCsvHeader = "method,N,T_init_mK,noise_p,T_final_mK,final_p1,work,work_unit,gates";

inline std::string formatNumber(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string toCsvLine(const ResultRow& row) {
    return row.method + "," + std::to_string(row.totalQubits) + "," + formatNumber(row.initialMk) + "," +
           formatNumber(row.noiseP) + "," + formatNumber(row.finalMk) + "," + formatNumber(row.finalP1) + "," +
           formatNumber(row.work) + "," + toString(row.workUnit) + "," + std::to_string(row.gates);
}

inline std::string toCsv(const std::vector<ResultRow>& rows) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& row : rows) out += toCsvLine(row) + "\n";
    return out;
}

inline Json toJson(const ResultRow& row) {
    auto number = [](double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
    return Json{{"method", row.method},          {"N", row.totalQubits},
                {"T_init_mK", number(row.initialMk)}, {"noise_p", row.noiseP},
                {"T_final_mK", number(row.finalMk)},  {"final_p1", row.finalP1},
                {"work", row.work},              {"work_unit", toString(row.workUnit)},
                {"gates", row.gates}};
}

/// Evaluates one grid point. Nonzero noise, or a grid with
/// simulateCircuits set, runs the synthesized circuit on the simulator;
/// otherwise the exact population formulas are used.
inline ResultRow evaluatePoint(const MethodConfig& config, double temperature_mk, double noise_p,
                               const SweepGrid& grid) {
    const EnergyGap gap = EnergyGap::fromFrequencyGHz(grid.frequencyGHz);
    const double p = probabilityFromTemperature(Temperature::millikelvin(temperature_mk), gap).value();
    ResultRow row;
    row.method = label(config);
    row.totalQubits = totalQubits(config);
    row.initialMk = temperature_mk;
    row.noiseP = noise_p;
    const bool simulated = grid.simulateCircuits || noise_p != 0.0;
    row.finalP1 = simulated ? simulatedFinalP(config, p, NoiseModel{noise_p, grid.noiseScope})
                            : finalProbability(config, p);
    row.finalMk = reportedTemperature(ExcitationProbability(row.finalP1), gap).inMillikelvin();
    const double work_joules = totalWorkCost(config, p, gap);
    row.workUnit = grid.workUnit;
    row.work = grid.workUnit == WorkUnit::kJoule ? work_joules : work_joules / gap.value();
    row.gates = gateCount(buildCircuit(config, p)).total;
    return row;
}

/// Runs `count` independent tasks on `jobs` threads; results keep task order.
template <class Result>
std::vector<Result> runParallel(std::size_t count, unsigned jobs, const std::function<Result(std::size_t)>& task) {
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

inline void validateGrid(const SweepGrid& grid) {
    if (grid.methods.empty() || grid.temperaturesMk.empty() || grid.noiseProbs.empty()) {
        throw InvalidArgument("sweep grid needs at least one method, temperature and noise value");
    }
    if (!(grid.frequencyGHz > 0.0)) throw InvalidArgument("sweep grid needs a positive qubit frequency");
    for (double t : grid.temperaturesMk) {
        if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("sweep temperatures must be positive and finite");
    }
    for (double p : grid.noiseProbs) {
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("noise probabilities must lie in [0, 1]");
    }
    for (const auto& m : grid.methods) validate(m);
}

/// Rows ordered by method, then temperature, then noise.
inline std::vector<ResultRow> runGrid(const SweepGrid& grid, unsigned jobs = 1) {
    validateGrid(grid);
    const std::size_t nt = grid.temperaturesMk.size();
    const std::size_t nn = grid.noiseProbs.size();
    const std::size_t count = grid.methods.size() * nt * nn;
    return runParallel<ResultRow>(count, jobs, [&](std::size_t i) {
        const auto& method = grid.methods[i / (nt * nn)];
        return evaluatePoint(method, grid.temperaturesMk[(i / nn) % nt], grid.noiseProbs[i % nn], grid);
    });
}

/// Noiseless temperature sweep.
inline std::vector<ResultRow> runSweep(SweepGrid grid, unsigned jobs = 1) {
    grid.noiseProbs = {0.0};
    return runGrid(grid, jobs);
}

/// Circuit-level sweep over noise values; every row is simulated.
inline std::vector<ResultRow> runNoiseSweep(SweepGrid grid, unsigned jobs = 1) {
    grid.simulateCircuits = true;
    return runGrid(grid, jobs);
}

/// {"freq_ghz": 5, "temperatures_mk": [...], "noise": [...], "methods": [...]}
inline SweepGrid parseSweepGrid(const Json& j, const std::filesystem::path& base_dir = {}) {
    detail::requireObject(j, "grid");
    detail::rejectUnknownKeys(j, {"freq_ghz", "temperatures_mk", "noise", "noise_scope", "methods", "work_unit"}, "grid");
    SweepGrid grid;
    try {
        if (!j.contains("freq_ghz")) throw InvalidArgument("grid: missing 'freq_ghz'");
        grid.frequencyGHz = j.at("freq_ghz").get<double>();
        grid.temperaturesMk = j.at("temperatures_mk").get<std::vector<double>>();
        if (j.contains("noise")) grid.noiseProbs = j.at("noise").get<std::vector<double>>();
        if (j.contains("noise_scope")) {
            const auto scope = j.at("noise_scope").get<std::string>();
            if (scope == "per_gate") {
                grid.noiseScope = NoiseScope::kPerGate;
            } else if (scope == "per_layer") {
                grid.noiseScope = NoiseScope::kPerLayer;
            } else {
                throw InvalidArgument("grid.noise_scope: expected per_gate or per_layer");
            }
        }
        if (j.contains("work_unit")) {
            const auto unit = j.at("work_unit").get<std::string>();
            if (unit != "hbar_omega" && unit != "J") throw InvalidArgument("grid.work_unit: expected hbar_omega or J");
            grid.workUnit = unit == "J" ? WorkUnit::kJoule : WorkUnit::kGap;
        }
        if (!j.contains("methods") || !j.at("methods").is_array()) throw InvalidArgument("grid: 'methods' must be an array");
        for (const auto& m : j.at("methods")) grid.methods.push_back(parseMethodConfig(m, base_dir));
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("grid: ") + e.what());
    }
    validateGrid(grid);
    return grid;
}

// ---------------------------------------------------------------------------
// Sparse storage benchmark.

struct BenchRow {
    int n = 0;
    std::size_t sparseBytes = 0;         // single-precision real values, int32 indices
    std::size_t sparseBytesComplex = 0;  // double-precision complex values
    std::uint64_t denseBytes = 0;        // 4 * 4^n, computed, never allocated
    double composeSeconds = 0.0;
    std::optional<double> denseComposeSeconds;
};

inline const char* kBenchCsvHeader = "n,sparse_bytes,sparse_bytes_complex,dense_bytes,compose_seconds,dense_compose_seconds";

inline std::uint64_t denseBytes(int n) { return std::uint64_t{4} << (2 * n); }

template <class Value>
BasicCoolingUnitary<Value> randomUnitary(int n, std::mt19937_64& rng) {
    std::vector<BasisIndex> image(dimensionOf(n));
    std::iota(image.begin(), image.end(), BasisIndex{0});
    std::shuffle(image.begin(), image.end(), rng);
    return BasicCoolingUnitary<Value>::fromPermutation(image, n);
}

inline double secondsSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline constexpr int kMaxBenchQubits = 24;

inline std::vector<BenchRow> runBench(int min_n, int max_n, int step, std::uint64_t seed, int dense_time_max_n = 8) {
    if (max_n > kMaxBenchQubits) {
        throw ResourceLimitError("benchmark size above " + std::to_string(kMaxBenchQubits) + " qubits");
    }
    if (min_n < 1 || max_n < min_n || step < 1) throw InvalidArgument("benchmark range is empty");
    std::mt19937_64 rng(seed);
    std::vector<BenchRow> rows;
    for (int n = min_n; n <= max_n; n += step) {
        BenchRow row;
        row.n = n;
        const auto a = randomUnitary<float>(n, rng);
        const auto b = randomUnitary<float>(n, rng);
        row.sparseBytes = a.memoryFootprint();
        row.sparseBytesComplex = CoolingUnitary::identity(n).memoryFootprint();
        row.denseBytes = denseBytes(n);
        double best = std::numeric_limits<double>::infinity();
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const auto c = compose(a, b);
            best = std::min(best, secondsSince(start));
            if (c.dimension() != a.dimension()) throw std::logic_error("compose changed dimension");
        }
        row.composeSeconds = best;
        if (n <= dense_time_max_n) {
            const auto da = a.toDense(dense_time_max_n);
            const auto db = b.toDense(dense_time_max_n);
            const auto start = std::chrono::steady_clock::now();
            const auto dc = da * db;
            row.denseComposeSeconds = secondsSince(start);
            (void)dc;
        }
        rows.push_back(row);
    }
    return rows;
}

inline std::string toCsv(const std::vector<BenchRow>& rows) {
    std::string out = std::string(kBenchCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.sparseBytes) + "," + std::to_string(r.sparseBytesComplex) +
               "," + std::to_string(r.denseBytes) + "," + formatNumber(r.composeSeconds) + "," +
               (r.denseComposeSeconds ? formatNumber(*r.denseComposeSeconds) : std::string()) + "\n";
    }
    return out;
}

}  // namespace qcool
