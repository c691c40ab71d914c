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

#include <stdexcept>
#include <string>

namespace qcool {

/// Malformed input: bad labels, overlapping cycles, mismatched dimensions.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A request that would exceed a configured size cap (qubits, dense matrix).
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised by temperatureFromProbability outside the finite nonnegative range.
class TemperatureDomainError : public std::domain_error {
   public:
    enum class Kind { kInfiniteTemperature, kPopulationInversion };

    TemperatureDomainError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

   private:
    Kind kind_;
};

/// A unitary carrying nontrivial phases was handed to circuit synthesis.
class SynthesisError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcool
