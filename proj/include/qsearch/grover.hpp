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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/circuit.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Which Grover iterate to build.
///
/// Standard prepares with H and reflects with the X-sandwiched mirror M0. The modified
/// variants prepare with a quarter-turn rotation R(pi/2) on every qubit and reflect with M1
/// (sign flip of the all-ones state), since R(pi/2)R(pi/2) is X up to phase and the X layers
/// of M0 are absorbed.
enum class Variant { Standard, ModifiedRX, ModifiedRY };

inline std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Standard:
            return "standard";
        case Variant::ModifiedRX:
            return "rx";
        case Variant::ModifiedRY:
            return "ry";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(std::string_view text) {
    if (text == "standard") {
        return Variant::Standard;
    }
    if (text == "rx") {
        return Variant::ModifiedRX;
    }
    if (text == "ry") {
        return Variant::ModifiedRY;
    }
    return std::nullopt;
}

/// Single-qubit rotation R(angle) about the variant's axis. Not meaningful for Standard.
inline Gate quarter_rotation(Variant v, double angle, int q) {
    switch (v) {
        case Variant::ModifiedRX:
            return Gate::rx(angle, q);
        case Variant::ModifiedRY:
            return Gate::ry(angle, q);
        case Variant::Standard:
            break;
    }
    throw std::invalid_argument("standard variant has no quarter rotation");
}

struct OracleSpec {
    int num_qubits = 1;
    std::vector<uint64_t> marked;

    void validate() const {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::out_of_range("oracle width " + std::to_string(num_qubits) + " out of range");
        }
        if (marked.empty()) {
            throw std::invalid_argument("oracle needs at least one marked index");
        }
        uint64_t limit = uint64_t{1} << num_qubits;
        for (size_t i = 0; i < marked.size(); i++) {
            if (marked[i] >= limit) {
                throw std::out_of_range("marked index " + std::to_string(marked[i]) + " is outside [0, " +
                                        std::to_string(limit) + ")");
            }
            for (size_t j = 0; j < i; j++) {
                if (marked[j] == marked[i]) {
                    throw std::invalid_argument("marked index " + std::to_string(marked[i]) + " listed twice");
                }
            }
        }
    }
};

/// Appends a sign flip of the single basis pattern `pattern` over `wires` (bit b of the
/// pattern is the wanted value of wires[b]): X on every wire whose bit is 0, a U1(pi) with
/// controls on all wires but the last and target on the last, then the same X gates again.
inline void append_phase_flip(Circuit &c, std::span<const int> wires, uint64_t pattern) {
    if (wires.empty()) {
        throw std::invalid_argument("phase flip needs at least one wire");
    }
    std::vector<int> zeros;
    for (size_t b = 0; b < wires.size(); b++) {
        if (((pattern >> b) & 1) == 0) {
            zeros.push_back(wires[b]);
        }
    }
    for (int w : zeros) {
        c.append(Gate::x(w));
    }
    std::vector<int> controls(wires.begin(), wires.end() - 1);
    c.append(Gate::cu1(std::numbers::pi, std::move(controls), wires.back()));
    for (int w : zeros) {
        c.append(Gate::x(w));
    }
}

inline std::vector<int> wire_range(int first, int count) {
    std::vector<int> w(count);
    for (int i = 0; i < count; i++) {
        w[i] = first + i;
    }
    return w;
}

/// Oracle O: multiplies the amplitude of each marked index by -1. One phase-flip block per
/// marked index, in the order given.
inline Circuit build_oracle(const OracleSpec &spec) {
    spec.validate();
    Circuit c(spec.num_qubits);
    auto wires = wire_range(0, spec.num_qubits);
    for (uint64_t m : spec.marked) {
        append_phase_flip(c, wires, m);
    }
    return c;
}

/// M0: negates the amplitude of |0...0>.
inline Circuit build_mirror_m0(int num_qubits) {
    Circuit c(num_qubits);
    append_phase_flip(c, wire_range(0, num_qubits), 0);
    return c;
}

/// M1: negates the amplitude of |1...1>. No X gates.
inline Circuit build_mirror_m1(int num_qubits) {
    Circuit c(num_qubits);
    append_phase_flip(c, wire_range(0, num_qubits), (uint64_t{1} << num_qubits) - 1);
    return c;
}

/// One gate per qubit: H for Standard, R(sign * pi/2) for the modified variants.
inline Circuit build_layer(int num_qubits, Variant v, int sign = +1) {
    Circuit c(num_qubits);
    for (int q = 0; q < num_qubits; q++) {
        if (v == Variant::Standard) {
            c.append(Gate::h(q));
        } else {
            c.append(quarter_rotation(v, sign * std::numbers::pi / 2, q));
        }
    }
    return c;
}

/// State preparation A for set search: H on every qubit, or R(pi/2) on every qubit.
inline Circuit build_preparation(int num_qubits, Variant v) {
    return build_layer(num_qubits, v, +1);
}

/// The amplification iterate around an encoder P (empty for plain set search), in time order:
///
///   Standard:  O, P^dag, H, M0, H, P                   (= A M0 A^dag O with A = P H)
///   Modified:  O, P^dag, R(pi/2), M1, R(-pi/2), P      (= B^dag M1 B O with B = R(pi/2) P^dag)
///
/// The overall minus sign of the textbook iterate and the -i factor of B are dropped; both are
/// global phases.
inline Circuit build_amplification_iterate(const Circuit &oracle, const Circuit &encoder, Variant v) {
    const int n = oracle.num_qubits();
    Circuit c = oracle;
    c.append(inverse(encoder));
    if (v == Variant::Standard) {
        c.append(build_layer(n, v));
        c.append(build_mirror_m0(n));
        c.append(build_layer(n, v));
    } else {
        c.append(build_layer(n, v, +1));
        c.append(build_mirror_m1(n));
        c.append(build_layer(n, v, -1));
    }
    c.append(encoder);
    return c;
}

inline Circuit build_iterate(const OracleSpec &spec, Variant v) {
    return build_amplification_iterate(build_oracle(spec), Circuit(spec.num_qubits), v);
}

/// floor((pi/4) * sqrt(num_states / num_marked)).
inline int iteration_count(uint64_t num_states, uint64_t num_marked) {
    if (num_marked == 0) {
        throw std::invalid_argument("iteration count needs at least one marked state");
    }
    if (num_marked > num_states) {
        throw std::invalid_argument("more marked states than states");
    }
    double ratio = static_cast<double>(num_states) / static_cast<double>(num_marked);
    return static_cast<int>(std::floor(std::numbers::pi / 4 * std::sqrt(ratio)));
}

/// Index of the largest entry; ties go to the smallest index.
inline uint64_t top_outcome(std::span<const double> distribution) {
    uint64_t best = 0;
    for (uint64_t i = 1; i < distribution.size(); i++) {
        if (distribution[i] > distribution[best]) {
            best = i;
        }
    }
    return best;
}

struct SearchResult {
    std::vector<double> distribution;
    GateHistogram histogram;
    int iterations = 0;
    uint64_t top_outcome = 0;
    /// Full circuit: preparation followed by `iterations` iterates.
    Circuit circuit{1};
    /// State after the preparation (frames[0]) and after each iterate.
    std::vector<StateVector> frames;
};

/// Runs preparation + iterations x iterate from |0>, recording every intermediate state.
inline SearchResult run_amplification(const Circuit &preparation, const Circuit &iterate, int iterations,
                                      ControlKeying keying = ControlKeying::ByControlCount) {
    if (iterations < 0) {
        throw std::invalid_argument("iteration count must be non-negative");
    }
    SearchResult r;
    r.iterations = iterations;
    r.circuit = preparation;
    StateVector state = simulate(preparation);
    r.frames.push_back(state);
    for (int k = 0; k < iterations; k++) {
        r.circuit.append(iterate);
        simulate_in_place(iterate, state);
        r.frames.push_back(state);
    }
    r.distribution = probabilities(state);
    r.histogram = histogram(r.circuit, keying);
    r.top_outcome = qsearch::top_outcome(r.distribution);
    return r;
}

/// Set search over a single register. Runs iteration_count(2^n, |marked|) iterates unless
/// `iterations` overrides it.
inline SearchResult set_search(int num_qubits, std::vector<uint64_t> marked, Variant v,
                               std::optional<int> iterations = std::nullopt) {
    OracleSpec spec{num_qubits, std::move(marked)};
    spec.validate();
    int k = iterations.value_or(iteration_count(uint64_t{1} << num_qubits, spec.marked.size()));
    return run_amplification(build_preparation(num_qubits, v), build_iterate(spec, v), k);
}

/// Closed-form marked-state probability after k iterates: sin^2((2k+1) asin(sqrt(M/N))).
inline double amplified_probability(uint64_t num_states, uint64_t num_marked, int k) {
    double theta = std::asin(std::sqrt(static_cast<double>(num_marked) / static_cast<double>(num_states)));
    double s = std::sin((2 * k + 1) * theta);
    return s * s;
}

}  // namespace qsearch
