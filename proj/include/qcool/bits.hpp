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

#include <bit>
#include <cstdint>
#include <string>

#include "qcool/errors.hpp"

// Basis-index conventions shared by every module.
//
// Qubits are numbered 0..n-1 in code. Qubit 0 is the most significant bit of
// a basis index and the leftmost character of its bit string, so "101" on
// three qubits is index 5 with qubits 0 and 2 excited. The target of every
// cooling unitary is qubit 0.

namespace qcool {

using BasisIndex = std::uint64_t;

inline constexpr int kMaxRegisterQubits = 62;

constexpr BasisIndex dimensionOf(int n_qubits) { return BasisIndex{1} << n_qubits; }

constexpr int bitPosition(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

constexpr BasisIndex qubitMask(int qubit, int n_qubits) { return BasisIndex{1} << bitPosition(qubit, n_qubits); }

constexpr bool qubitValue(BasisIndex index, int qubit, int n_qubits) {
    return ((index >> bitPosition(qubit, n_qubits)) & 1U) != 0;
}

constexpr int hammingWeight(BasisIndex index) { return std::popcount(index); }

constexpr int hammingDistance(BasisIndex a, BasisIndex b) { return std::popcount(a ^ b); }

inline std::string toBitString(BasisIndex index, int n_qubits) {
    std::string out(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (qubitValue(index, q, n_qubits)) out[static_cast<std::size_t>(q)] = '1';
    }
    return out;
}

inline void checkRegisterSize(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxRegisterQubits) {
        throw InvalidArgument("register size must be in [1, " + std::to_string(kMaxRegisterQubits) +
                              "], got " + std::to_string(n_qubits));
    }
}

}  // namespace qcool
