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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Key register on wires [0, n), value register on wires [n, n + m).
///
/// Values are phase-encoded with value wire l carrying weight 2^l, and decoded by an inverse
/// QFT without swap gates. The decoded value therefore comes out bit-reversed on the wires:
/// value bit b is read from wire n + m - 1 - b. All readout (oracles, grids, decoding of
/// measured indices) goes through value_bit_wire so the reversal is a pure relabeling.
struct RegisterLayout {
    int key_qubits = 1;
    int value_qubits = 1;

    void validate() const {
        if (key_qubits < 1 || value_qubits < 1) {
            throw std::invalid_argument("key and value registers need at least one qubit each");
        }
        if (key_qubits + value_qubits > kMaxQubits) {
            throw std::out_of_range("key + value qubits exceed " + std::to_string(kMaxQubits));
        }
    }

    int width() const {
        return key_qubits + value_qubits;
    }
    int key_wire(int i) const {
        return i;
    }
    /// Wire that receives phase weight 2^l during encoding.
    int value_wire(int l) const {
        return key_qubits + l;
    }
    /// Wire holding bit b of the decoded value.
    int value_bit_wire(int b) const {
        return key_qubits + value_qubits - 1 - b;
    }
    bool is_value_wire(int w) const {
        return w >= key_qubits && w < width();
    }

    std::vector<int> value_readout_wires() const {
        std::vector<int> w;
        for (int b = 0; b < value_qubits; b++) {
            w.push_back(value_bit_wire(b));
        }
        return w;
    }

    uint64_t key_count() const {
        return uint64_t{1} << key_qubits;
    }
    uint64_t value_count() const {
        return uint64_t{1} << value_qubits;
    }

    uint64_t basis_index(uint64_t key, uint64_t value) const {
        uint64_t index = key & (key_count() - 1);
        for (int b = 0; b < value_qubits; b++) {
            index |= ((value >> b) & 1) << value_bit_wire(b);
        }
        return index;
    }
    uint64_t key_of(uint64_t index) const {
        return index & (key_count() - 1);
    }
    uint64_t value_of(uint64_t index) const {
        uint64_t v = 0;
        for (int b = 0; b < value_qubits; b++) {
            v |= ((index >> value_bit_wire(b)) & 1) << b;
        }
        return v;
    }
};

/// Reads `bits` as an m-bit two's complement integer.
inline int64_t to_signed(uint64_t bits, int m) {
    uint64_t mask = (m >= 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    bits &= mask;
    if (m < 64 && (bits >> (m - 1)) & 1) {
        return static_cast<int64_t>(bits) - static_cast<int64_t>(uint64_t{1} << m);
    }
    return static_cast<int64_t>(bits);
}

/// True when `value` lies in the m-bit two's complement range [-2^(m-1), 2^(m-1)).
inline bool representable(int64_t value, int m) {
    if (m >= 64) {
        return true;
    }
    int64_t half = int64_t{1} << (m - 1);
    return value >= -half && value < half;
}

/// `value` reduced modulo 2^m (negative values wrap, two's complement).
inline uint64_t to_bits(int64_t value, int m) {
    return static_cast<uint64_t>(value) & ((uint64_t{1} << m) - 1);
}

}  // namespace qsearch
