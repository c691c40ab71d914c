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

#include "qcool/methods.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace qcool;

namespace {

const EnergyGap kUnit = EnergyGap::natural();

// Frozen high-precision values.
constexpr double kP50 = 0.008168701470416747;
constexpr double kHbacFixedPoint = 0.012195121951219512;

Protocol mw() { return Protocol::builtin(ProtocolKind::kMinimalWork); }
Protocol mirror() { return Protocol::builtin(ProtocolKind::kMirror); }

/// Closed form for one n=3 round: p^2 (3 - 2p).
double threeQubitMap(double p) { return p * p * (3 - 2 * p); }

/// HBAC oracle on three qubits: swap 011 <-> 100, then reset the two
/// auxiliaries by re-tensoring with the bath.
double hbacOracle(double p, int rounds) {
    auto v = oracle::thermal(3, p);
    const auto swap = oracle::cycleImage({{3, 4}}, 3);
    for (int r = 1; r <= rounds; ++r) {
        if (r > 1) v = oracle::thermal({oracle::firstQubitExcited(v), p, p});
        v = oracle::permute(v, swap);
    }
    return oracle::firstQubitExcited(v);
}

double logRatio(double p) { return std::log((1 - p) / p); }

TEST(Dynamic, Examples) {
    EXPECT_NEAR(dynamicFinalP(0.1, 2), 0.1, 1e-15);
    EXPECT_NEAR(dynamicFinalP(0.1, 3), 0.028, 1e-15);
    EXPECT_NEAR(dynamicFinalP(0.1, 3), oracle::sortedTarget(oracle::thermal(3, 0.1)), 1e-15);
    EXPECT_NEAR(dynamicFinalP(0.23, 1), 0.23, 1e-15);
    EXPECT_THROW(dynamicFinalP(0.5, 3), InvalidArgument);
}

TEST(Dynamic, MatchesEnumeration) {
    for (int n = 2; n <= 10; ++n)
        for (double p : {0.01, 0.1, 0.25, 0.4})
            EXPECT_NEAR(dynamicFinalP(p, n), oracle::sortedTarget(oracle::thermal(n, p)), 1e-14);
}

TEST(SubOptimal, Examples) {
    EXPECT_EQ(subOptimalFinalP(0.1, 3, 1), dynamicFinalP(0.1, 3));
    EXPECT_NEAR(subOptimalFinalP(0.1, 3, 2), threeQubitMap(threeQubitMap(0.1)), 1e-15);
    EXPECT_NEAR(subOptimalFinalP(0.1, 3, 2), 0.002308096, 1e-15);
}

TEST(SubOptimal, DecreasesWithRounds) {
    for (int n = 3; n <= 5; ++n) {
        for (double p : {0.05, 0.2, 0.45}) {
            double last = p;
            for (int r = 1; r <= 3; ++r) {
                const double q = subOptimalFinalP(p, n, r);
                EXPECT_LT(q, last);
                last = q;
            }
        }
    }
}

TEST(SemiOpen, Examples) {
    EXPECT_NEAR(semiOpenFinalP(0.1, {3}), 0.028, 1e-15);
    EXPECT_NEAR(semiOpenFinalP(0.1, {3, 3}), 0.01504, 1e-15);
    EXPECT_NEAR(semiOpenFinalP(0.1, {3, 3}), oracle::sortedTarget(oracle::thermal({0.028, 0.1, 0.1})), 1e-15);
    EXPECT_NEAR(semiOpenFinalP(0.1, {3, 3, 3}), 0.0127072, 1e-15);
    EXPECT_NEAR(semiOpenFinalP(0.1, {3, 3, 3, 3}), 0.012287296, 1e-15);
    EXPECT_GT(semiOpenFinalP(0.1, {3, 3, 3, 3}), kHbacFixedPoint);
    EXPECT_THROW(semiOpenFinalP(0.1, {}), InvalidArgument);
    EXPECT_THROW(semiOpenFinalP(0.1, {3, 1}), InvalidArgument);
}

TEST(SemiOpen, MixedSizesMatchEnumeration) {
    double q = oracle::sortedTarget(oracle::thermal(4, 0.15));
    q = oracle::sortedTarget(oracle::thermal({q, 0.15, 0.15}));
    q = oracle::sortedTarget(oracle::thermal({q, 0.15, 0.15, 0.15, 0.15}));
    EXPECT_NEAR(semiOpenFinalP(0.15, {4, 3, 5}), q, 1e-14);
}

TEST(Hbac, Examples) {
    EXPECT_NEAR(hbacFinalP(0.1, 3, 1, {1, 2}), 0.028, 1e-15);
    EXPECT_NEAR(hbacFinalP(0.1, 3, 2, {1, 2}), 0.01504, 1e-15);
    EXPECT_NEAR(hbacFinalP(0.1, 3, 2, {1, 2}), hbacOracle(0.1, 2), 1e-15);
    EXPECT_NEAR(hbacFinalP(0.1, 3, 200, {1, 2}), kHbacFixedPoint, 1e-12);
    EXPECT_NEAR(hbacFinalP(0.1, 3, 200, {1, 2}), hbacOracle(0.1, 200), 1e-12);
}

TEST(Hbac, MonotoneAndBelowTheClosedSystemBound) {
    for (double p : {0.05, 0.1, 0.2}) {
        double last = 1.0;
        for (int r = 1; r <= 60; ++r) {
            const double q = hbacFinalP(p, 3, r, {1, 2});
            EXPECT_LE(q, last + 1e-15);
            last = q;
        }
        const double limit = p * p / ((1 - p) * (1 - p) + p * p);
        EXPECT_NEAR(hbacFinalP(p, 3, 400, {1, 2}), limit, 1e-12);
        EXPECT_LT(limit, dynamicFinalP(p, 3));
    }
}

TEST(Hbac, RederiveIsNoWorseInRoundTwo) {
    for (double p : {0.05, 0.1, 0.2}) {
        EXPECT_LE(hbacFinalP(p, 4, 2, {2, 3}, mw(), true), hbacFinalP(p, 4, 2, {2, 3}, mw(), false) + 1e-15);
    }
}

TEST(Hbac, Validation) {
    EXPECT_THROW(hbacFinalP(0.1, 3, 2, {0}), InvalidArgument);
    EXPECT_THROW(hbacFinalP(0.1, 3, 2, {}), InvalidArgument);
    EXPECT_THROW(hbacFinalP(0.1, 3, 2, {3}), InvalidArgument);
    EXPECT_THROW(hbacFinalP(0.1, 3, 2, {1, 1}), InvalidArgument);
    EXPECT_THROW(hbacFinalP(0.1, 3, 0, {1}), InvalidArgument);
}

TEST(Work, Examples) {
    const auto v = thermalProductVector(ThermalSpec::homogeneous(3, 0.1));
    EXPECT_EQ(workCost(CoolingUnitary::identity(3), v, kUnit), 0.0);
    const double oracle_w = 2 * (0.081 - 0.009) + 1 * (0.009 - 0.081);
    EXPECT_NEAR(workCost(swapUnitary(3, 4, 3), v, kUnit), oracle_w, 1e-15);
    EXPECT_NEAR(workCost(swapUnitary(3, 4, 3), v, kUnit), 0.072, 1e-15);
    EXPECT_NEAR(workCost(ppa(5), ProbVector::uniform(5), kUnit), 0.0, 1e-15);
    const auto gap = EnergyGap::fromFrequencyGHz(5);
    EXPECT_NEAR(workCost(swapUnitary(3, 4, 3), v, gap), 0.072 * gap.value(), 1e-15 * gap.value());
}

TEST(Work, Totals) {
    EXPECT_NEAR(totalWorkCost(DynamicConfig{3, mw()}, 0.1, kUnit), 0.072, 1e-15);
    const double b = 0.028;
    // 011 (weight 2) receives b(1-b)^2 and 100 (weight 1) receives (1-b)b^2.
    const double round2 = 2 * ((1 - b) * (1 - b) * b - (1 - b) * b * b) + 1 * ((1 - b) * b * b - (1 - b) * (1 - b) * b);
    EXPECT_NEAR(round2, 0.025691904, 1e-15);
    EXPECT_NEAR(totalWorkCost(SubOptimalConfig{3, 2, mw()}, 0.1, kUnit), 3 * 0.072 + round2, 1e-15);
    EXPECT_NEAR(totalWorkCost(SubOptimalConfig{3, 2, mw()}, 0.1, kUnit), 0.241691904, 1e-15);
    const auto identity = Protocol::custom({}, 3);
    EXPECT_EQ(totalWorkCost(DynamicConfig{3, identity}, 0.1, kUnit), 0.0);
    // HBAC: round 1 swap plus round 2 swap on the reset state {0.028, 0.1, 0.1}.
    const auto before2 = oracle::thermal({0.028, 0.1, 0.1});
    const double hbac2 = 0.072 + oracle::work(before2, oracle::permute(before2, oracle::cycleImage({{3, 4}}, 3)), 3);
    EXPECT_NEAR(totalWorkCost(HbacConfig{3, 2, {1, 2}, mw(), false}, 0.1, kUnit), hbac2, 1e-15);
}

TEST(Work, NonNegativeForBuiltins) {
    for (int n = 2; n <= 8; ++n)
        for (double p : {0.01, 0.2, 0.45})
            for (auto kind : {ProtocolKind::kPPA, ProtocolKind::kMirror, ProtocolKind::kMinimalWork})
                EXPECT_GE(totalWorkCost(DynamicConfig{n, Protocol::builtin(kind)}, p, kUnit), 0.0);
}

TEST(Circuits, DynamicThree) {
    const auto c = buildCircuit(DynamicConfig{3, mw()});
    EXPECT_EQ(c.nQubits(), 3);
    EXPECT_EQ(gateCount(c).total, 5U);
    EXPECT_EQ(gateCount(c).byControls.at(2), 5U);
}

TEST(Circuits, SubOptimalNine) {
    const auto c = buildCircuit(SubOptimalConfig{3, 2, mw()});
    EXPECT_EQ(c.nQubits(), 9);
    EXPECT_EQ(c.size(), 20U);  // four blocks of five
    for (const auto& instr : c.instructions()) EXPECT_EQ(std::get<McNot>(instr).controls.size(), 2U);
    // Blocks: {0,1,2}, {3,4,5}, {6,7,8}, then {0,3,6}.
    const std::vector<std::vector<int>> blocks{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}};
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(std::get<McNot>(c.instructions()[5 * b + k]).qubits(), blocks[b]);
}

TEST(Circuits, HbacTwoRounds) {
    const auto c = buildCircuit(HbacConfig{3, 2, {1, 2}, mw(), false});
    const auto counts = gateCount(c);
    EXPECT_EQ(counts.total, 10U);
    EXPECT_EQ(counts.resets, 1U);
    ASSERT_TRUE(std::holds_alternative<ResetInstr>(c.instructions()[5]));
    EXPECT_EQ(std::get<ResetInstr>(c.instructions()[5]).qubits, (std::vector<int>{1, 2}));
}

TEST(Circuits, SemiOpenNeedsProbability) {
    const SemiOpenConfig config{{3, 3}, mw()};
    EXPECT_EQ(totalQubits(config), 5);
    EXPECT_THROW(buildCircuit(config), InvalidArgument);
    const auto c = buildCircuit(config, 0.1);
    EXPECT_EQ(c.nQubits(), 5);
    EXPECT_EQ(buildCircuit(SemiOpenConfig{{3}, mw()}).nQubits(), 3);
}

TEST(Circuits, AgreeWithAnalyticValues) {
    const std::vector<MethodConfig> configs{
        DynamicConfig{2, mw()},
        DynamicConfig{3, Protocol::builtin(ProtocolKind::kPPA)},
        DynamicConfig{5, mirror()},
        DynamicConfig{7, mw()},
        DynamicConfig{9, mirror()},
        DynamicConfig{9, mw()},
        SubOptimalConfig{3, 2, mw()},
        SubOptimalConfig{3, 2, mirror()},
        SubOptimalConfig{2, 3, mw()},
        HbacConfig{3, 2, {1, 2}, mw(), false},
        HbacConfig{3, 5, {2}, mirror(), false},
        HbacConfig{4, 3, {2, 3}, mw(), true},
        SemiOpenConfig{{3, 3}, mw()},
        SemiOpenConfig{{3, 3, 3, 3}, mw()},
        SemiOpenConfig{{4, 2, 3}, Protocol::builtin(ProtocolKind::kPPA)},
        DynamicConfig{3, Protocol::custom({Cycle{{BasisIndex{0}, BasisIndex{1}, BasisIndex{4}}}}, 3)},
    };
    for (const auto& config : configs) {
        for (double p : {0.05, 0.1, 0.3}) {
            EXPECT_NEAR(simulatedFinalP(config, p, NoiseModel{}), finalProbability(config, p), 1e-10) << label(config);
        }
    }
}

TEST(Methods, CoolingNeverHeats) {
    const std::vector<MethodConfig> configs{DynamicConfig{4, mw()}, SubOptimalConfig{3, 2, mirror()},
                                            HbacConfig{3, 4, {1, 2}, mw(), false}, SemiOpenConfig{{3, 3, 3}, mw()}};
    for (const auto& config : configs)
        for (double p = 0.01; p < 0.5; p += 0.04) EXPECT_LE(finalProbability(config, p), p + 1e-15) << label(config);
}

TEST(Methods, DynamicIsColdestAtEqualBudget) {
    const double dyn = dynamicFinalP(kP50, 9);
    EXPECT_NEAR(dyn, 4.4593681777981305e-9, 1e-9 * 4.4593681777981305e-9);
    EXPECT_NEAR(subOptimalFinalP(kP50, 3, 2), 1.1889815814163201e-7, 1e-9 * 1.1889815814163201e-7);
    EXPECT_NEAR(semiOpenFinalP(kP50, {3, 3, 3, 3}), 6.7827303218227846e-5, 1e-9 * 6.7827303218227846e-5);
    EXPECT_LE(dyn, subOptimalFinalP(kP50, 3, 2));
    EXPECT_LE(dyn, semiOpenFinalP(kP50, {3, 3, 3, 3}));
}

TEST(Methods, LowTemperatureScaling) {
    const double p = 1.0 / (1.0 + std::exp(20.0));
    for (int n : {3, 5, 7}) {
        const double pf = oracle::sortedTarget(oracle::thermal(n, p));
        EXPECT_NEAR(dynamicFinalP(p, n), pf, 1e-12 * pf);
        const double ratio = logRatio(p) / logRatio(dynamicFinalP(p, n));
        EXPECT_NEAR(ratio, 2.0 / (n + 1), 0.05 * 2.0 / (n + 1)) << n;
    }
}

TEST(Methods, CustomEvaluatedThroughItsUnitary) {
    const auto cycle = Protocol::custom({Cycle{{BasisIndex{0}, BasisIndex{1}, BasisIndex{4}}}}, 3);
    const auto v = oracle::thermal(3, 0.1);
    const double expected = oracle::firstQubitExcited(oracle::permute(v, oracle::cycleImage({{0, 1, 4}}, 3)));
    EXPECT_NEAR(finalProbability(DynamicConfig{3, cycle}, 0.1), expected, 1e-15);
    EXPECT_THROW(finalProbability(DynamicConfig{4, cycle}, 0.1), InvalidArgument);
}

TEST(Methods, ValidationAndLabels) {
    EXPECT_THROW(validate(DynamicConfig{1, mw()}), InvalidArgument);
    EXPECT_THROW(validate(SubOptimalConfig{1, 2, mw()}), InvalidArgument);
    EXPECT_THROW(validate(SubOptimalConfig{3, 0, mw()}), InvalidArgument);
    EXPECT_THROW(validate(SubOptimalConfig{3, 5, mw()}), InvalidArgument);
    EXPECT_THROW(validate(SemiOpenConfig{{}, mw()}), InvalidArgument);
    EXPECT_EQ(totalQubits(SubOptimalConfig{3, 2, mw()}), 9);
    EXPECT_EQ(totalQubits(SemiOpenConfig{{3, 3, 3, 3}, mw()}), 9);
    EXPECT_EQ(label(DynamicConfig{9, mirror()}), "dynamic(n=9;mirror)");
    EXPECT_EQ(label(HbacConfig{3, 2, {1, 2}, mw(), false}), "hbac(n=3;r=2;reset=2+3;minimal_work)");
    for (const auto& config : std::vector<MethodConfig>{SubOptimalConfig{}, HbacConfig{}, SemiOpenConfig{}})
        EXPECT_EQ(label(config).find(','), std::string::npos);
}

TEST(Report, DynamicThree) {
    const auto r = reportAtProbability(DynamicConfig{3, mw()}, 0.1, kUnit);
    EXPECT_NEAR(r.finalP1, 0.028, 1e-15);
    EXPECT_NEAR(r.work, 0.072, 1e-15);
    EXPECT_EQ(r.gateCounts.total, 5U);
    EXPECT_EQ(r.totalQubits, 3);
    EXPECT_NEAR(r.finalTemperature.inKelvin(), 1.0 / logRatio(0.028), 1e-12);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(Report, TwoQubitsDoNothing) {
    const auto gap = EnergyGap::fromFrequencyGHz(5);
    const auto r = report(DynamicConfig{2, mw()}, Temperature::millikelvin(50), gap);
    EXPECT_EQ(r.finalP1, r.initialP1);
    EXPECT_EQ(r.work, 0.0);
    EXPECT_EQ(r.gateCounts.total, 0U);
    EXPECT_NEAR(r.finalTemperature.inMillikelvin(), 50.0, 1e-9);
    EXPECT_THROW(report(DynamicConfig{2, mw()}, Temperature::kelvin(0), gap), InvalidArgument);
    EXPECT_THROW(report(DynamicConfig{2, mw()}, Temperature::infinite(), gap), InvalidArgument);
}

TEST(Report, SemiOpenQubits) {
    EXPECT_EQ(reportAtProbability(SemiOpenConfig{{3, 3}, mw()}, 0.1, kUnit).totalQubits, 5);
}

}  // namespace
