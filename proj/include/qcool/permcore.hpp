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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/prob_vector.hpp"

namespace qcool {

/// A basis state given either as a bit string ("101", qubit 0 leftmost) or
/// as its integer index (5).
using StateLabel = std::variant<std::string, BasisIndex>;

inline BasisIndex parseStateLabel(const StateLabel& label, int n_qubits) {
    checkRegisterSize(n_qubits);
    if (const auto* index = std::get_if<BasisIndex>(&label)) {
        if (*index >= dimensionOf(n_qubits)) {
            throw InvalidArgument("state " + std::to_string(*index) + " is out of range for " +
                                  std::to_string(n_qubits) + " qubits");
        }
        return *index;
    }
    const auto& bits = std::get<std::string>(label);
    if (bits.size() != static_cast<std::size_t>(n_qubits)) {
        throw InvalidArgument("state '" + bits + "' must have exactly " + std::to_string(n_qubits) + " characters");
    }
    BasisIndex index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidArgument("state '" + bits + "' contains a non-binary character");
        index = (index << 1) | static_cast<BasisIndex>(c == '1');
    }
    return index;
}

/// i_1 -> i_2 -> ... -> i_m -> i_1. The closing state is implicit.
struct Cycle {
    std::vector<BasisIndex> states;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline constexpr int kDefaultDenseCap = 12;
inline constexpr int kMaxUnitaryQubits = 30;

namespace detail {

template <class Value>
constexpr bool kIsComplexValue = !std::is_floating_point_v<Value>;

template <class Value>
double modulus(const Value& v) {
    return std::abs(v);
}

template <class Value>
double phaseTolerance() {
    return std::is_same_v<Value, float> ? 1e-6 : 1e-12;
}

}  // namespace detail

/// Row-major explicit matrix, used for small registers and for checking the
/// sparse algebra against plain matrix products.
template <class Value>
struct DenseMatrix {
    std::size_t dimension = 0;
    std::vector<Value> data;

    Value& at(std::size_t row, std::size_t col) { return data[row * dimension + col]; }
    const Value& at(std::size_t row, std::size_t col) const { return data[row * dimension + col]; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.dimension != b.dimension) throw InvalidArgument("dense matrix dimension mismatch");
        const auto dim = a.dimension;
        DenseMatrix out{dim, std::vector<Value>(dim * dim, Value{})};
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                const Value aik = a.at(i, k);
                if (aik == Value{}) continue;
                for (std::size_t j = 0; j < dim; ++j) out.at(i, j) += aik * b.at(k, j);
            }
        }
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

/// Generalized permutation matrix on n qubits.
///
/// Stored in compressed-sparse-row form with exactly one nonzero per row:
/// row r (the destination state) holds the source state in its column index
/// and the unit-modulus phase in its value, so U|src> = phase |r>. The cycle
/// list that defined the matrix is kept alongside for circuit synthesis.
///
/// Value is std::complex<double> for general use, or float for a compact
/// layout whose byte count is comparable to single-precision CSR storage.
template <class Value>
class BasicCoolingUnitary {
   public:
    using value_type = Value;
    using index_type = std::int32_t;

    static BasicCoolingUnitary identity(int n_qubits) { return BasicCoolingUnitary(n_qubits, {}); }

    /// Builds the unitary from already-parsed cycles. Throws InvalidArgument
    /// for out-of-range, repeated, or overlapping states.
    static BasicCoolingUnitary fromCycles(std::vector<Cycle> cycles, int n_qubits) {
        return BasicCoolingUnitary(n_qubits, std::move(cycles));
    }

    static BasicCoolingUnitary fromCycles(const std::vector<std::vector<StateLabel>>& labels, int n_qubits) {
        checkUnitarySize(n_qubits);
        std::vector<Cycle> cycles;
        cycles.reserve(labels.size());
        for (const auto& cycle_labels : labels) {
            Cycle cycle;
            cycle.states.reserve(cycle_labels.size());
            for (const auto& label : cycle_labels) cycle.states.push_back(parseStateLabel(label, n_qubits));
            cycles.push_back(std::move(cycle));
        }
        return BasicCoolingUnitary(n_qubits, std::move(cycles));
    }

    /// image[src] is the destination of basis state src.
    static BasicCoolingUnitary fromPermutation(const std::vector<BasisIndex>& image, int n_qubits) {
        checkUnitarySize(n_qubits);
        if (image.size() != dimensionOf(n_qubits)) throw InvalidArgument("permutation length must be 2^n");
        std::vector<index_type> cols(image.size(), -1);
        for (std::size_t src = 0; src < image.size(); ++src) {
            if (image[src] >= image.size() || cols[image[src]] != -1) {
                throw InvalidArgument("image list is not a permutation");
            }
            cols[image[src]] = static_cast<index_type>(src);
        }
        std::vector<Value> values(cols.size(), Value{1});
        auto cycles = cyclesOfColumns(cols);
        return BasicCoolingUnitary(n_qubits, std::move(cycles), std::move(cols), std::move(values));
    }

    /// Same permutation with per-row phases (phases[r] multiplies the entry in
    /// row r). Every phase must have modulus 1.
    BasicCoolingUnitary withPhases(std::vector<Value> phases) const {
        if (phases.size() != values_.size()) throw InvalidArgument("one phase per row is required");
        for (const auto& phase : phases) {
            if (std::abs(detail::modulus(phase) - 1.0) > detail::phaseTolerance<Value>()) {
                throw InvalidArgument("phases must have unit modulus");
            }
        }
        BasicCoolingUnitary out = *this;
        out.values_ = std::move(phases);
        return out;
    }

    int nQubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return cols_.size(); }
    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

    BasisIndex preimage(BasisIndex dest) const { return static_cast<BasisIndex>(cols_[dest]); }
    Value phase(BasisIndex dest) const { return values_[dest]; }

    /// image()[src] is where basis state src is sent.
    std::vector<BasisIndex> image() const {
        std::vector<BasisIndex> out(cols_.size());
        for (std::size_t r = 0; r < cols_.size(); ++r) out[static_cast<std::size_t>(cols_[r])] = r;
        return out;
    }

    bool isPhaseFree() const {
        for (const auto& v : values_) {
            if (v != Value{1}) return false;
        }
        return true;
    }

    std::span<const Value> values() const noexcept { return values_; }
    std::span<const index_type> columnIndices() const noexcept { return cols_; }
    std::span<const index_type> rowOffsets() const noexcept { return row_offsets_; }

    /// Bytes held by the sparse layout: values, column indices, row offsets.
    std::size_t memoryFootprint() const noexcept {
        return values_.size() * sizeof(Value) + cols_.size() * sizeof(index_type) +
               row_offsets_.size() * sizeof(index_type);
    }

    BasicCoolingUnitary inverse() const {
        std::vector<index_type> cols(cols_.size());
        std::vector<Value> values(values_.size());
        for (std::size_t r = 0; r < cols_.size(); ++r) {
            const auto c = static_cast<std::size_t>(cols_[r]);
            cols[c] = static_cast<index_type>(r);
            if constexpr (detail::kIsComplexValue<Value>) {
                values[c] = std::conj(values_[r]);
            } else {
                values[c] = values_[r];
            }
        }
        auto cycles = cyclesOfColumns(cols);
        return BasicCoolingUnitary(n_qubits_, std::move(cycles), std::move(cols), std::move(values));
    }

    /// Matrix product lhs * rhs in O(2^n).
    friend BasicCoolingUnitary compose(const BasicCoolingUnitary& lhs, const BasicCoolingUnitary& rhs) {
        if (lhs.n_qubits_ != rhs.n_qubits_) throw InvalidArgument("cannot compose unitaries of different sizes");
        const auto dim = lhs.cols_.size();
        std::vector<index_type> cols(dim);
        std::vector<Value> values(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const auto k = static_cast<std::size_t>(lhs.cols_[r]);
            cols[r] = rhs.cols_[k];
            values[r] = lhs.values_[r] * rhs.values_[k];
        }
        auto cycles = cyclesOfColumns(cols);
        return BasicCoolingUnitary(lhs.n_qubits_, std::move(cycles), std::move(cols), std::move(values));
    }

    DenseMatrix<Value> toDense(int cap = kDefaultDenseCap) const {
        if (n_qubits_ > cap) {
            throw ResourceLimitError("dense conversion of a " + std::to_string(n_qubits_) +
                                     "-qubit unitary exceeds the cap of " + std::to_string(cap) + " qubits");
        }
        const auto dim = cols_.size();
        DenseMatrix<Value> out{dim, std::vector<Value>(dim * dim, Value{})};
        for (std::size_t r = 0; r < dim; ++r) out.at(r, static_cast<std::size_t>(cols_[r])) = values_[r];
        return out;
    }

    /// Populations of U rho U^dagger for diagonal rho. Phases cancel.
    ProbVector apply(const ProbVector& v) const {
        if (v.size() != cols_.size()) throw InvalidArgument("probability vector dimension does not match unitary");
        std::vector<double> out(v.size());
        for (std::size_t r = 0; r < cols_.size(); ++r) out[r] = v[static_cast<std::size_t>(cols_[r])];
        return ProbVector(std::move(out));
    }

    /// Same induced permutation, ignoring phases and cycle presentation.
    bool samePermutation(const BasicCoolingUnitary& other) const { return cols_ == other.cols_; }

    friend bool operator==(const BasicCoolingUnitary& a, const BasicCoolingUnitary& b) {
        return a.n_qubits_ == b.n_qubits_ && a.cols_ == b.cols_ && a.values_ == b.values_;
    }

   private:
    static void checkUnitarySize(int n_qubits) {
        if (n_qubits < 1 || n_qubits > kMaxUnitaryQubits) {
            throw InvalidArgument("unitary register size must be in [1, " + std::to_string(kMaxUnitaryQubits) + "]");
        }
    }

    static std::vector<Cycle> cyclesOfColumns(const std::vector<index_type>& cols) {
        // cols[dest] = src, so the forward step from src needs the inverse map.
        std::vector<index_type> forward(cols.size());
        for (std::size_t r = 0; r < cols.size(); ++r) forward[static_cast<std::size_t>(cols[r])] = static_cast<index_type>(r);
        std::vector<Cycle> cycles;
        std::vector<bool> seen(cols.size(), false);
        for (std::size_t start = 0; start < cols.size(); ++start) {
            if (seen[start] || forward[start] == static_cast<index_type>(start)) continue;
            Cycle cycle;
            for (auto s = start; !seen[s]; s = static_cast<std::size_t>(forward[s])) {
                seen[s] = true;
                cycle.states.push_back(s);
            }
            cycles.push_back(std::move(cycle));
        }
        return cycles;
    }

    BasicCoolingUnitary(int n_qubits, std::vector<Cycle> cycles, std::vector<index_type> cols, std::vector<Value> values)
        : n_qubits_(n_qubits), cycles_(std::move(cycles)), values_(std::move(values)), cols_(std::move(cols)) {
        fillRowOffsets();
    }

    BasicCoolingUnitary(int n_qubits, std::vector<Cycle> cycles) : n_qubits_(n_qubits), cycles_(std::move(cycles)) {
        checkUnitarySize(n_qubits);
        const auto dim = dimensionOf(n_qubits);
        cols_.resize(dim);
        for (std::size_t r = 0; r < dim; ++r) cols_[r] = static_cast<index_type>(r);
        values_.assign(dim, Value{1});

        std::vector<bool> used(dim, false);
        for (const auto& cycle : cycles_) {
            if (cycle.states.size() < 2) throw InvalidArgument("degenerate cycle: a cycle needs at least two states");
            std::vector<BasisIndex> local;
            for (auto s : cycle.states) {
                if (s >= dim) throw InvalidArgument("state " + std::to_string(s) + " is out of range");
                for (auto t : local) {
                    if (t == s) {
                        throw InvalidArgument("degenerate cycle: state " + toBitString(s, n_qubits) +
                                              " repeats within a cycle");
                    }
                }
                if (used[s]) {
                    throw InvalidArgument("overlapping cycles: state " + toBitString(s, n_qubits) +
                                          " appears in more than one cycle");
                }
                local.push_back(s);
            }
            for (auto s : local) used[s] = true;
            const auto m = cycle.states.size();
            for (std::size_t k = 0; k < m; ++k) {
                cols_[cycle.states[(k + 1) % m]] = static_cast<index_type>(cycle.states[k]);
            }
        }
        fillRowOffsets();
    }

    void fillRowOffsets() {
        row_offsets_.resize(cols_.size() + 1);
        for (std::size_t r = 0; r <= cols_.size(); ++r) row_offsets_[r] = static_cast<index_type>(r);
    }

    int n_qubits_ = 0;
    std::vector<Cycle> cycles_;
    std::vector<Value> values_;
    std::vector<index_type> cols_;
    std::vector<index_type> row_offsets_;
};

using CoolingUnitary = BasicCoolingUnitary<std::complex<double>>;

/// Single-precision real values with int32 indices: 12 * 2^n + 4 bytes.
using CompactCoolingUnitary = BasicCoolingUnitary<float>;

template <class Value>
ProbVector applyToProbVector(const BasicCoolingUnitary<Value>& u, const ProbVector& v) {
    return u.apply(v);
}

/// Transposition of two basis states.
inline CoolingUnitary swapUnitary(BasisIndex a, BasisIndex b, int n_qubits) {
    return CoolingUnitary::fromCycles(std::vector<Cycle>{Cycle{{a, b}}}, n_qubits);
}

}  // namespace qcool
