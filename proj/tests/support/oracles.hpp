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

// Reference computations for the test suites. Nothing here calls into the
// library's population, permutation or synthesis code; everything is
// recomputed from bit strings, explicit enumeration or dense products.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

/// Bit string of index j with the leftmost character as the most significant bit.
inline std::string bits(std::uint64_t j, int n) {
    std::string s;
    for (int i = n - 1; i >= 0; --i) s.push_back(((j >> i) & 1U) ? '1' : '0');
    return s;
}

inline std::uint64_t index(const std::string& s) {
    std::uint64_t j = 0;
    for (char c : s) j = 2 * j + (c == '1' ? 1 : 0);
    return j;
}

inline int weight(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); }

/// Product distribution, entry by entry from the bit string.
inline std::vector<double> thermal(const std::vector<double>& ps) {
    const int n = static_cast<int>(ps.size());
    std::vector<double> v;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        const auto s = bits(j, n);
        double x = 1.0;
        for (int i = 0; i < n; ++i) x *= s[static_cast<std::size_t>(i)] == '1' ? ps[static_cast<std::size_t>(i)] : 1.0 - ps[static_cast<std::size_t>(i)];
        v.push_back(x);
    }
    return v;
}

inline std::vector<double> thermal(int n, double p) { return thermal(std::vector<double>(static_cast<std::size_t>(n), p)); }

/// Best achievable target excitation: the sum of the smallest half.
inline double sortedTarget(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (std::size_t i = 0; i < v.size() / 2; ++i) s += v[i];
    return s;
}

/// Marginal of the leftmost qubit being 1.
inline double firstQubitExcited(const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t j = v.size() / 2; j < v.size(); ++j) s += v[j];
    return s;
}

/// Apply "src -> image[src]" to a population list.
inline std::vector<double> permute(const std::vector<double>& v, const std::vector<std::uint64_t>& image) {
    std::vector<double> out(v.size());
    for (std::size_t s = 0; s < v.size(); ++s) out[image[s]] = v[s];
    return out;
}

/// W = sum_j weight(j) (after_j - before_j), in units of the gap.
inline double work(const std::vector<double>& before, const std::vector<double>& after, int n) {
    double w = 0.0;
    for (std::size_t j = 0; j < before.size(); ++j) w += weight(bits(j, n)) * (after[j] - before[j]);
    return w;
}

/// Gate given as (target, [(control, polarity)]) acting on a bit string.
struct Gate {
    int target;
    std::vector<std::pair<int, int>> controls;
};

inline std::string applyGate(std::string s, const Gate& g) {
    for (auto [q, pol] : g.controls) {
        if ((s[static_cast<std::size_t>(q)] == '1') != (pol == 1)) return s;
    }
    auto& c = s[static_cast<std::size_t>(g.target)];
    c = c == '1' ? '0' : '1';
    return s;
}

/// Permutation image of a gate list, tracked string by string.
inline std::vector<std::uint64_t> trackBasis(const std::vector<Gate>& gates, int n) {
    std::vector<std::uint64_t> image;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        auto s = bits(j, n);
        for (const auto& g : gates) s = applyGate(s, g);
        image.push_back(index(s));
    }
    return image;
}

/// Image of a cycle list: i1 -> i2 -> ... -> im -> i1.
inline std::vector<std::uint64_t> cycleImage(const std::vector<std::vector<std::uint64_t>>& cycles, int n) {
    std::vector<std::uint64_t> image(std::uint64_t{1} << n);
    std::iota(image.begin(), image.end(), std::uint64_t{0});
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) image[c[k]] = c[(k + 1) % c.size()];
    }
    return image;
}

using Dense = std::vector<std::vector<std::complex<double>>>;

inline Dense denseFromImage(const std::vector<std::uint64_t>& image) {
    Dense m(image.size(), std::vector<std::complex<double>>(image.size()));
    for (std::size_t s = 0; s < image.size(); ++s) m[image[s]][s] = 1.0;
    return m;
}

inline Dense multiply(const Dense& a, const Dense& b) {
    const auto n = a.size();
    Dense c(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// Random disjoint cycles on n qubits; lengths in [2, max_len].
inline std::vector<std::vector<std::uint64_t>> randomCycles(int n, int count, int max_len, std::mt19937_64& rng) {
    std::vector<std::uint64_t> states(std::uint64_t{1} << n);
    std::iota(states.begin(), states.end(), std::uint64_t{0});
    std::shuffle(states.begin(), states.end(), rng);
    std::vector<std::vector<std::uint64_t>> cycles;
    std::size_t next = 0;
    for (int c = 0; c < count; ++c) {
        const auto len = static_cast<std::size_t>(std::uniform_int_distribution<int>(2, max_len)(rng));
        if (next + len > states.size()) break;
        cycles.emplace_back(states.begin() + static_cast<std::ptrdiff_t>(next),
                            states.begin() + static_cast<std::ptrdiff_t>(next + len));
        next += len;
    }
    return cycles;
}

inline bool conserved(const std::vector<double>& v, double tol = 1e-12) {
    double s = 0.0;
    for (double x : v) {
        if (!(x >= 0.0)) return false;
        s += x;
    }
    return std::abs(s - 1.0) <= tol;
}

}  // namespace oracle
