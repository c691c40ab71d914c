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
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/prob_vector.hpp"

namespace qcool {

namespace constants {
// CODATA 2018 exact values.
inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kMillikelvinPerKelvin = 1e3;
inline constexpr double kHzPerGHz = 1e9;
}  // namespace constants

/// Energy splitting shared by every qubit of a register.
///
/// Two unit systems are supported. Physical gaps carry joules and convert to
/// kelvin through Boltzmann's constant. Natural gaps set hbar*omega = 1 and
/// k_B = 1, so temperatures are then in units of hbar*omega / k_B and work is
/// reported in units of the gap.
class EnergyGap {
   public:
    static EnergyGap fromJoules(double joules) { return EnergyGap(joules, false); }

    static EnergyGap fromFrequencyGHz(double ghz) {
        if (!(ghz > 0.0) || !std::isfinite(ghz)) {
            throw InvalidArgument("qubit frequency must be positive and finite");
        }
        return EnergyGap(constants::kPlanck * ghz * constants::kHzPerGHz, false);
    }

    static EnergyGap natural() { return EnergyGap(1.0, true); }

    double value() const noexcept { return value_; }
    bool isNatural() const noexcept { return natural_; }

    /// E / k_B, in kelvin for physical gaps.
    double overBoltzmann() const noexcept { return natural_ ? value_ : value_ / constants::kBoltzmann; }

   private:
    EnergyGap(double value, bool natural) : value_(value), natural_(natural) {
        if (!(value_ > 0.0) || !std::isfinite(value_)) throw InvalidArgument("energy gap must be positive and finite");
    }

    double value_;
    bool natural_;
};

class Temperature {
   public:
    static Temperature kelvin(double k) { return Temperature(k); }
    static Temperature millikelvin(double mk) { return Temperature(mk / constants::kMillikelvinPerKelvin); }
    static Temperature infinite() { return Temperature(std::numeric_limits<double>::infinity()); }

    double inKelvin() const noexcept { return kelvin_; }
    double inMillikelvin() const noexcept { return kelvin_ * constants::kMillikelvinPerKelvin; }
    bool isInfinite() const noexcept { return std::isinf(kelvin_); }

    friend auto operator<=>(const Temperature&, const Temperature&) = default;

   private:
    explicit Temperature(double k) : kelvin_(k) {
        if (!(k >= 0.0)) throw InvalidArgument("temperature must be nonnegative");
    }

    double kelvin_;
};

/// Population of |1> for a single qubit.
class ExcitationProbability {
   public:
    constexpr ExcitationProbability() = default;

    explicit ExcitationProbability(double p) : p_(p) {
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("excitation probability must lie in [0, 1]");
    }

    constexpr double value() const noexcept { return p_; }

    friend auto operator<=>(const ExcitationProbability&, const ExcitationProbability&) = default;

   private:
    double p_ = 0.0;
};

/// Per-qubit excitation probabilities of an uncorrelated (product) state.
struct ThermalSpec {
    std::vector<ExcitationProbability> perQubit;

    static ThermalSpec homogeneous(int n_qubits, double p) {
        checkRegisterSize(n_qubits);
        return ThermalSpec{std::vector<ExcitationProbability>(static_cast<std::size_t>(n_qubits),
                                                              ExcitationProbability(p))};
    }

    int nQubits() const noexcept { return static_cast<int>(perQubit.size()); }
};

inline constexpr int kDefaultProductVectorCap = 24;

inline ExcitationProbability probabilityFromTemperature(Temperature t, const EnergyGap& gap) {
    if (t.inKelvin() == 0.0) return ExcitationProbability(0.0);
    if (t.isInfinite()) return ExcitationProbability(0.5);
    const double beta_e = gap.overBoltzmann() / t.inKelvin();
    return ExcitationProbability(1.0 / (1.0 + std::exp(beta_e)));
}

/// Inverse of probabilityFromTemperature. Throws TemperatureDomainError for
/// p = 1/2 (infinite temperature) and p > 1/2 (population inversion).
inline Temperature temperatureFromProbability(ExcitationProbability prob, const EnergyGap& gap) {
    const double p = prob.value();
    if (p == 0.0) return Temperature::kelvin(0.0);
    if (p == 0.5) {
        throw TemperatureDomainError(TemperatureDomainError::Kind::kInfiniteTemperature,
                                     "excitation probability 1/2 corresponds to infinite temperature");
    }
    if (p > 0.5) {
        throw TemperatureDomainError(TemperatureDomainError::Kind::kPopulationInversion,
                                     "population inversion: no nonnegative temperature for p > 1/2");
    }
    // ln((1-p)/p) without cancellation for tiny p.
    const double log_ratio = std::log1p(-p) - std::log(p);
    return Temperature::kelvin(gap.overBoltzmann() / log_ratio);
}

/// Populations are conserved to about this accuracy, so a simulated target
/// this close to 1/2 is indistinguishable from the fully mixed state.
inline constexpr double kMixedStateTolerance = 1e-12;

/// Reporting variant: p >= 1/2 (within kMixedStateTolerance) reads as
/// infinite temperature instead of throwing, so sweeps through heavy noise
/// keep going.
inline Temperature reportedTemperature(ExcitationProbability prob, const EnergyGap& gap) {
    if (prob.value() >= 0.5 - kMixedStateTolerance) return Temperature::infinite();
    return temperatureFromProbability(prob, gap);
}

/// Product distribution over the register. Qubit 0 is the most significant bit.
///
/// Qubits sharing an excitation probability are grouped and each entry is
/// built from per-group excitation counts, so states that are equally likely
/// in exact arithmetic get bit-identical populations and sort ties resolve by
/// index as documented.
inline ProbVector thermalProductVector(const ThermalSpec& spec, int cap = kDefaultProductVectorCap) {
    const int n = spec.nQubits();
    if (n == 0) throw InvalidArgument("thermal spec must name at least one qubit");
    if (n > cap) {
        throw ResourceLimitError("register of " + std::to_string(n) + " qubits exceeds the cap of " +
                                 std::to_string(cap));
    }
    std::vector<double> distinct;
    std::vector<BasisIndex> group_masks;
    for (int q = 0; q < n; ++q) {
        const double p = spec.perQubit[static_cast<std::size_t>(q)].value();
        const auto it = std::find(distinct.begin(), distinct.end(), p);
        const auto g = static_cast<std::size_t>(it - distinct.begin());
        if (it == distinct.end()) {
            distinct.push_back(p);
            group_masks.push_back(0);
        }
        group_masks[g] |= qubitMask(q, n);
    }
    // table[g][k]: p^k (1-p)^(m-k) for k excited qubits out of the m in group g.
    std::vector<std::vector<double>> table(distinct.size());
    for (std::size_t g = 0; g < distinct.size(); ++g) {
        const int m = std::popcount(group_masks[g]);
        const double p = distinct[g];
        for (int k = 0; k <= m; ++k) {
            double x = 1.0;
            for (int i = 0; i < k; ++i) x *= p;
            for (int i = k; i < m; ++i) x *= 1.0 - p;
            table[g].push_back(x);
        }
    }
    std::vector<double> v(dimensionOf(n));
    for (BasisIndex s = 0; s < v.size(); ++s) {
        double x = 1.0;
        for (std::size_t g = 0; g < table.size(); ++g) x *= table[g][static_cast<std::size_t>(std::popcount(s & group_masks[g]))];
        v[s] = x;
    }
    return ProbVector(std::move(v));
}

}  // namespace qcool
