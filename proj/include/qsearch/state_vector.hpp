// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsearch/gate.hpp"

namespace qsearch {

/// Widest register the dense simulator accepts (2^24 complex doubles = 256 MiB).
inline constexpr int kMaxQubits = 24;

/// Dense statevector over 2^num_qubits basis states.
///
/// Qubit b is bit b of the basis index (little-endian), so applying X to qubit k maps basis
/// index j to j ^ (1 << k).
class StateVector {
   public:
    explicit StateVector(int num_qubits) : num_qubits_(checked_width(num_qubits)) {
        amplitudes_.assign(size_t{1} << num_qubits_, Amplitude{0.0, 0.0});
        amplitudes_[0] = 1.0;
    }

    /// Adopts an explicit amplitude array; its length must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes) {
        size_t n = amplitudes.size();
        if (n < 2 || (n & (n - 1)) != 0) {
            throw std::invalid_argument("amplitude count must be a power of two >= 2");
        }
        int q = 0;
        while ((size_t{1} << q) < n) {
            q++;
        }
        StateVector s(q);
        s.amplitudes_ = std::move(amplitudes);
        return s;
    }

    int num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return amplitudes_.size();
    }

    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    std::span<Amplitude> amplitudes() {
        return amplitudes_;
    }

    const Amplitude &operator[](size_t index) const {
        return amplitudes_[index];
    }
    Amplitude &operator[](size_t index) {
        return amplitudes_[index];
    }

    double norm_squared() const {
        double total = 0;
        for (const auto &a : amplitudes_) {
            total += std::norm(a);
        }
        return total;
    }

    /// Rescales to unit norm. Throws on the zero vector.
    void normalize() {
        double n = std::sqrt(norm_squared());
        if (n == 0) {
            throw std::invalid_argument("cannot normalize the zero vector");
        }
        for (auto &a : amplitudes_) {
            a /= n;
        }
    }

    /// Applies `m` to `target` on the subspace where every qubit in `control_mask` is 1.
    void apply_controlled(const Matrix2 &m, int target, uint64_t control_mask) {
        const uint64_t tbit = uint64_t{1} << target;
        const size_t n = amplitudes_.size();
        const bool diagonal = m[1] == 0.0 && m[2] == 0.0;
        for (size_t i = 0; i < n; i++) {
            if ((i & tbit) || (i & control_mask) != control_mask) {
                continue;
            }
            Amplitude &a0 = amplitudes_[i];
            Amplitude &a1 = amplitudes_[i | tbit];
            if (diagonal) {
                a0 *= m[0];
                a1 *= m[3];
            } else {
                Amplitude v0 = a0, v1 = a1;
                a0 = m[0] * v0 + m[1] * v1;
                a1 = m[2] * v0 + m[3] * v1;
            }
        }
    }

    bool operator==(const StateVector &other) const = default;

   private:
    static int checked_width(int num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::out_of_range("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
        }
        return num_qubits;
    }

    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

inline StateVector zero_state(int num_qubits) {
    return StateVector(num_qubits);
}

/// Uniform superposition with all-real positive amplitudes.
inline StateVector uniform_state(int num_qubits) {
    StateVector s(num_qubits);
    double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
    for (auto &x : s.amplitudes()) {
        x = a;
    }
    return s;
}

inline void apply_gate(StateVector &state, const Gate &gate) {
    gate.validate();
    if (gate.max_qubit() >= state.num_qubits()) {
        throw std::out_of_range("gate references qubit " + std::to_string(gate.max_qubit()) +
                                " of a " + std::to_string(state.num_qubits()) + "-qubit state");
    }
    uint64_t mask = 0;
    for (int c : gate.controls) {
        mask |= uint64_t{1} << c;
    }
    state.apply_controlled(gate.matrix(), gate.target, mask);
}

inline std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p;
    p.reserve(state.size());
    for (const auto &a : state.amplitudes()) {
        p.push_back(std::norm(a));
    }
    return p;
}

/// min over unit phases u of ||a - u b||.
inline double global_phase_free_distance(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state widths differ");
    }
    Amplitude overlap = 0;
    for (size_t i = 0; i < a.size(); i++) {
        overlap += std::conj(b[i]) * a[i];
    }
    // The minimizing phase aligns b with a: u = <b|a> / |<b|a>|.
    Amplitude u = std::abs(overlap) == 0 ? Amplitude(1) : overlap / std::abs(overlap);
    double d2 = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d2 += std::norm(a[i] - u * b[i]);
    }
    return std::sqrt(d2);
}

/// Largest elementwise |a_j - b_j| between two probability arrays.
inline double max_abs_difference(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distribution lengths differ");
    }
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace qsearch
