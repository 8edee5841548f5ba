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
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsearch {

using Amplitude = std::complex<double>;

/// Row-major 2x2 unitary acting on a single target qubit.
using Matrix2 = std::array<Amplitude, 4>;

enum class GateKind { H, X, RX, RY, U1, Z };

inline std::string_view kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::U1:
            return "U1";
        case GateKind::Z:
            return "Z";
    }
    return "?";
}

inline bool has_angle(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::U1;
}

/// Phase gates are diagonal, so their controls and target are interchangeable.
inline bool is_phase_kind(GateKind kind) {
    return kind == GateKind::U1 || kind == GateKind::Z;
}

/// A single gate instance: a kind, an optional angle, a set of control qubits and a target qubit.
///
/// Only the phase kinds (U1, Z) may carry controls. Every multi-qubit operation the search
/// circuits need is a controlled phase, and keeping the set closed keeps the gate-count keys
/// well defined.
struct Gate {
    GateKind kind = GateKind::H;
    double angle = 0.0;
    std::vector<int> controls;
    int target = 0;

    static Gate h(int q) {
        return make(GateKind::H, 0.0, {}, q);
    }
    static Gate x(int q) {
        return make(GateKind::X, 0.0, {}, q);
    }
    static Gate z(int q) {
        return make(GateKind::Z, 0.0, {}, q);
    }
    static Gate rx(double theta, int q) {
        return make(GateKind::RX, theta, {}, q);
    }
    static Gate ry(double theta, int q) {
        return make(GateKind::RY, theta, {}, q);
    }
    static Gate u1(double lambda, int q) {
        return make(GateKind::U1, lambda, {}, q);
    }
    static Gate cu1(double lambda, std::vector<int> controls, int target) {
        return make(GateKind::U1, lambda, std::move(controls), target);
    }
    static Gate cz(std::vector<int> controls, int target) {
        return make(GateKind::Z, 0.0, std::move(controls), target);
    }

    static Gate make(GateKind kind, double angle, std::vector<int> controls, int target) {
        Gate g;
        g.kind = kind;
        g.angle = has_angle(kind) ? angle : 0.0;
        g.controls = std::move(controls);
        g.target = target;
        g.validate();
        return g;
    }

    void validate() const {
        if (target < 0) {
            throw std::out_of_range("gate target qubit is negative");
        }
        if (!controls.empty() && !is_phase_kind(kind)) {
            throw std::invalid_argument(std::string("controlled ") + std::string(kind_name(kind)) +
                                        " is not part of the gate set");
        }
        for (size_t i = 0; i < controls.size(); i++) {
            if (controls[i] < 0) {
                throw std::out_of_range("gate control qubit is negative");
            }
            if (controls[i] == target) {
                throw std::invalid_argument("gate control collides with its target");
            }
            for (size_t j = 0; j < i; j++) {
                if (controls[j] == controls[i]) {
                    throw std::invalid_argument("gate lists the same control twice");
                }
            }
        }
    }

    int max_qubit() const {
        int m = target;
        for (int c : controls) {
            m = std::max(m, c);
        }
        return m;
    }

    Gate inverse() const {
        Gate g = *this;
        if (has_angle(kind)) {
            g.angle = -angle;
        }
        return g;
    }

    Matrix2 matrix() const {
        constexpr double r = 1.0 / std::numbers::sqrt2;
        const Amplitude i{0.0, 1.0};
        switch (kind) {
            case GateKind::H:
                return {r, r, r, -r};
            case GateKind::X:
                return {0.0, 1.0, 1.0, 0.0};
            case GateKind::Z:
                return {1.0, 0.0, 0.0, -1.0};
            case GateKind::RX: {
                double c = std::cos(angle / 2), s = std::sin(angle / 2);
                return {c, -i * s, -i * s, c};
            }
            case GateKind::RY: {
                double c = std::cos(angle / 2), s = std::sin(angle / 2);
                return {c, -s, s, c};
            }
            case GateKind::U1:
                return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
        }
        throw std::logic_error("unknown gate kind");
    }

    bool operator==(const Gate &other) const = default;
};

}  // namespace qsearch
