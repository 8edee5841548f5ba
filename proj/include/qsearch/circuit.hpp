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

#include <array>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/gate.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Ordered gate list over a fixed register width. Gates are counted exactly as appended;
/// nothing is fused or cancelled.
class Circuit {
   public:
    explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::out_of_range("circuit width " + std::to_string(num_qubits) + " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
        }
    }

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    Circuit &append(Gate gate) {
        gate.validate();
        if (gate.max_qubit() >= num_qubits_) {
            throw std::out_of_range("gate references qubit " + std::to_string(gate.max_qubit()) +
                                    " of a " + std::to_string(num_qubits_) + "-qubit circuit");
        }
        gates_.push_back(std::move(gate));
        return *this;
    }

    Circuit &append(const Circuit &other) {
        if (other.num_qubits_ != num_qubits_) {
            throw std::invalid_argument("circuit widths differ: " + std::to_string(num_qubits_) +
                                        " vs " + std::to_string(other.num_qubits_));
        }
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
        return *this;
    }

    bool operator==(const Circuit &other) const = default;

   private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

inline Circuit compose(const Circuit &a, const Circuit &b) {
    Circuit out = a;
    out.append(b);
    return out;
}

inline Circuit inverse(const Circuit &c) {
    Circuit out(c.num_qubits());
    const auto &gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.append(it->inverse());
    }
    return out;
}

inline void simulate_in_place(const Circuit &c, StateVector &state) {
    if (c.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit width " + std::to_string(c.num_qubits()) +
                                    " does not match state width " + std::to_string(state.num_qubits()));
    }
    for (const auto &g : c.gates()) {
        apply_gate(state, g);
    }
}

inline StateVector simulate(const Circuit &c, StateVector initial) {
    simulate_in_place(c, initial);
    return initial;
}

inline StateVector simulate(const Circuit &c) {
    return simulate(c, zero_state(c.num_qubits()));
}

// ---------------------------------------------------------------------------------------------
// Gate-count accounting.

/// Histogram columns. Controlled phase gates (U1 or Z) are keyed by control count.
enum class HistKey : int { H, RX, RY, X, Z, U1, CU1, CCU1, nCU1 };
inline constexpr size_t kNumHistKeys = 9;
inline constexpr std::array<HistKey, kNumHistKeys> kAllHistKeys = {
    HistKey::H, HistKey::RX, HistKey::RY, HistKey::X, HistKey::Z,
    HistKey::U1, HistKey::CU1, HistKey::CCU1, HistKey::nCU1};

inline std::string_view key_name(HistKey key) {
    static constexpr std::array<std::string_view, kNumHistKeys> names = {
        "H", "RX", "RY", "X", "Z", "U1", "CU1", "CCU1", "nCU1"};
    return names[static_cast<size_t>(key)];
}

/// How multi-controlled phase gates are keyed.
///
/// ByControlCount: 1 control -> CU1, 2 -> CCU1, 3 or more -> nCU1.
/// TwoRegister:    1 control -> CU1, 2 or more -> nCU1. This is the key/value register
///                 convention, where every reflection-sized controlled phase is one nCU1.
enum class ControlKeying { ByControlCount, TwoRegister };

struct GateHistogram {
    std::array<uint64_t, kNumHistKeys> counts{};

    uint64_t &operator[](HistKey key) {
        return counts[static_cast<size_t>(key)];
    }
    uint64_t operator[](HistKey key) const {
        return counts[static_cast<size_t>(key)];
    }

    uint64_t total() const {
        uint64_t t = 0;
        for (auto c : counts) {
            t += c;
        }
        return t;
    }

    GateHistogram &operator+=(const GateHistogram &other) {
        for (size_t i = 0; i < kNumHistKeys; i++) {
            counts[i] += other.counts[i];
        }
        return *this;
    }
    friend GateHistogram operator+(GateHistogram a, const GateHistogram &b) {
        a += b;
        return a;
    }

    bool operator==(const GateHistogram &other) const = default;

    /// Builds a histogram from {key, count} pairs; unspecified keys are zero.
    static GateHistogram of(std::initializer_list<std::pair<HistKey, uint64_t>> entries) {
        GateHistogram h;
        for (const auto &[k, v] : entries) {
            h[k] = v;
        }
        return h;
    }

    /// "H:6 X:6 CU1:2" style, omitting zero columns.
    std::string str() const {
        std::string out;
        for (auto key : kAllHistKeys) {
            if ((*this)[key] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += ' ';
            }
            out += std::string(key_name(key)) + ":" + std::to_string((*this)[key]);
        }
        return out.empty() ? "(empty)" : out;
    }
};

inline std::ostream &operator<<(std::ostream &out, const GateHistogram &h) {
    return out << h.str();
}

inline HistKey histogram_key(const Gate &g, ControlKeying keying = ControlKeying::ByControlCount) {
    size_t k = g.controls.size();
    if (k == 0) {
        switch (g.kind) {
            case GateKind::H:
                return HistKey::H;
            case GateKind::X:
                return HistKey::X;
            case GateKind::RX:
                return HistKey::RX;
            case GateKind::RY:
                return HistKey::RY;
            case GateKind::U1:
                return HistKey::U1;
            case GateKind::Z:
                return HistKey::Z;
        }
    }
    // Controlled Z counts as controlled U1(pi).
    if (k == 1) {
        return HistKey::CU1;
    }
    if (keying == ControlKeying::TwoRegister) {
        return HistKey::nCU1;
    }
    return k == 2 ? HistKey::CCU1 : HistKey::nCU1;
}

inline GateHistogram histogram(const Circuit &c, ControlKeying keying = ControlKeying::ByControlCount) {
    GateHistogram h;
    for (const auto &g : c.gates()) {
        h[histogram_key(g, keying)]++;
    }
    return h;
}

// ---------------------------------------------------------------------------------------------
// Plain-text listing: a header line, then one gate per line as
//
//     KIND[(angle)] [c0,c1,...] -> target
//
// Angles are printed with 17 significant digits so the listing round-trips doubles.

inline void write_listing(std::ostream &out, const Circuit &c) {
    out << "qubits " << c.num_qubits() << "\n";
    std::ostringstream line;
    line << std::setprecision(17);
    for (const auto &g : c.gates()) {
        line.str("");
        line << kind_name(g.kind);
        if (has_angle(g.kind)) {
            line << '(' << g.angle << ')';
        }
        for (size_t i = 0; i < g.controls.size(); i++) {
            line << (i == 0 ? ' ' : ',') << g.controls[i];
        }
        line << " -> " << g.target << '\n';
        out << line.str();
    }
}

inline std::string to_listing(const Circuit &c) {
    std::ostringstream out;
    write_listing(out, c);
    return out.str();
}

}  // namespace qsearch
