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

// Walks through the four cooling methods on nine qubits at 50 mK / 5 GHz and
// prints the final temperature, work and circuit size of each.

#include <cstdio>

#include "qcool/qcool.hpp"

int main() {
    using namespace qcool;
    const auto gap = EnergyGap::fromFrequencyGHz(5.0);
    const auto initial = Temperature::millikelvin(50.0);
    const auto minimal_work = Protocol::builtin(ProtocolKind::kMinimalWork);

    const MethodConfig methods[] = {
        DynamicConfig{9, minimal_work},
        SubOptimalConfig{3, 2, minimal_work},
        SemiOpenConfig{{3, 3, 3, 3}, minimal_work},
        HbacConfig{3, 10, {1, 2}, minimal_work, false},
    };

    std::printf("%-40s %4s %14s %14s %8s\n", "method", "N", "T_final [mK]", "work [J]", "gates");
    for (const auto& m : methods) {
        const auto r = report(m, initial, gap);
        std::printf("%-40s %4d %14.6f %14.6e %8zu\n", label(m).c_str(), r.totalQubits,
                    r.finalTemperature.inMillikelvin(), r.work, r.gateCounts.total);
    }
    return 0;
}
