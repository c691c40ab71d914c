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

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"

namespace qcool {

/// Diagonal of a register's density matrix: 2^n populations in basis-index
/// order. Normalization is not enforced on construction so that callers can
/// hold intermediate vectors; use isNormalized() to check.
class ProbVector {
   public:
    ProbVector() = default;

    explicit ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {
        if (entries_.empty() || !std::has_single_bit(entries_.size())) {
            throw InvalidArgument("probability vector length must be a power of two, got " +
                                  std::to_string(entries_.size()));
        }
        n_qubits_ = std::countr_zero(entries_.size());
    }

    static ProbVector basisState(int n_qubits, BasisIndex index) {
        checkRegisterSize(n_qubits);
        if (index >= dimensionOf(n_qubits)) throw InvalidArgument("basis index out of range");
        std::vector<double> v(dimensionOf(n_qubits), 0.0);
        v[index] = 1.0;
        return ProbVector(std::move(v));
    }

    static ProbVector uniform(int n_qubits) {
        checkRegisterSize(n_qubits);
        const auto dim = dimensionOf(n_qubits);
        return ProbVector(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
    }

    int nQubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return entries_.size(); }

    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }

    std::span<const double> entries() const noexcept { return entries_; }
    std::span<double> entries() noexcept { return entries_; }

    double sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0.0); }

    bool isNormalized(double tol = 1e-12) const {
        for (double x : entries_) {
            if (!(x >= 0.0)) return false;
        }
        return std::abs(sum() - 1.0) <= tol;
    }

    friend bool operator==(const ProbVector&, const ProbVector&) = default;

   private:
    std::vector<double> entries_;
    int n_qubits_ = 0;
};

}  // namespace qcool
