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
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsearch/circuit.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/register_layout.hpp"

namespace qsearch {

/// Integer array defined by a polynomial f(j) = sum_t coefficients[t] * j^t over keys
/// j in [0, 2^key_qubits), stored modulo 2^value_qubits.
struct DictionarySpec {
    int key_qubits = 1;
    int value_qubits = 1;
    std::vector<int64_t> coefficients;

    RegisterLayout layout() const {
        return RegisterLayout{key_qubits, value_qubits};
    }

    void validate() const {
        layout().validate();
        if (coefficients.empty()) {
            throw std::invalid_argument("polynomial needs at least one coefficient");
        }
    }

    int degree() const {
        int d = static_cast<int>(coefficients.size()) - 1;
        while (d > 0 && coefficients[d] == 0) {
            d--;
        }
        return d;
    }

    /// f(j) mod 2^m. Wrapping 64-bit arithmetic is exact modulo 2^m because 2^m divides 2^64.
    uint64_t value_bits(uint64_t j) const {
        uint64_t acc = 0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
            acc = acc * j + static_cast<uint64_t>(*it);
        }
        return acc & ((uint64_t{1} << value_qubits) - 1);
    }

    int64_t signed_value(uint64_t j) const {
        return to_signed(value_bits(j), value_qubits);
    }

    /// Number of keys whose stored value equals `target_bits`.
    uint64_t multiplicity(uint64_t target_bits) const {
        uint64_t count = 0;
        for (uint64_t j = 0; j < (uint64_t{1} << key_qubits); j++) {
            count += value_bits(j) == target_bits;
        }
        return count;
    }
};

/// U_G(theta): U1(2^l * theta) on value wire l for every l, each carrying `controls`.
/// On a uniform value superposition this imprints e^{i k theta} on |k>.
inline Circuit build_ug(double theta, const RegisterLayout &layout, std::span<const int> controls = {}) {
    layout.validate();
    for (int c : controls) {
        if (layout.is_value_wire(c)) {
            throw std::invalid_argument("U_G control " + std::to_string(c) + " lies in the value register");
        }
        if (c < 0 || c >= layout.key_qubits) {
            throw std::out_of_range("U_G control " + std::to_string(c) + " is not a key wire");
        }
    }
    Circuit c(layout.width());
    std::vector<int> ctl(controls.begin(), controls.end());
    for (int l = 0; l < layout.value_qubits; l++) {
        c.append(Gate::cu1(std::ldexp(theta, l), ctl, layout.value_wire(l)));
    }
    return c;
}

/// Swap-free inverse QFT on the value register. Produces m decoding gates and m(m-1)/2
/// controlled phases; decoded bit b lands on layout.value_bit_wire(b).
///
/// The decoding gate is H for Standard. For the modified variants the value register was
/// prepared with R(pi/2) instead of H, and R(-pi/2) is the gate that decodes that state, so it
/// takes the place of H here.
inline Circuit qft_dagger(const RegisterLayout &layout, Variant v = Variant::Standard) {
    layout.validate();
    const int m = layout.value_qubits;
    Circuit c(layout.width());
    for (int t = m - 1; t >= 0; t--) {
        for (int d = 1; t + d < m; d++) {
            c.append(Gate::cu1(-std::numbers::pi / static_cast<double>(uint64_t{1} << d),
                               {layout.value_wire(t + d)}, layout.value_wire(t)));
        }
        if (v == Variant::Standard) {
            c.append(Gate::h(layout.value_wire(t)));
        } else {
            c.append(quarter_rotation(v, -std::numbers::pi / 2, layout.value_wire(t)));
        }
    }
    return c;
}

namespace detail {

inline double encoding_angle(uint64_t coefficient_bits, int m) {
    return 2 * std::numbers::pi * static_cast<double>(coefficient_bits) / static_cast<double>(uint64_t{1} << m);
}

/// Coefficients g(S) of f written as sum over key-bit subsets S of g(S) * prod_{i in S} b_i,
/// modulo 2^m, indexed by subset mask. Inverse zeta (Moebius) transform of f over the subset
/// lattice.
inline std::vector<uint64_t> subset_coefficients(const DictionarySpec &spec) {
    const uint64_t keys = uint64_t{1} << spec.key_qubits;
    const uint64_t mask = (uint64_t{1} << spec.value_qubits) - 1;
    std::vector<uint64_t> g(keys);
    for (uint64_t j = 0; j < keys; j++) {
        g[j] = spec.value_bits(j);
    }
    for (int i = 0; i < spec.key_qubits; i++) {
        for (uint64_t s = 0; s < keys; s++) {
            if (s >> i & 1) {
                g[s] = (g[s] - g[s ^ (uint64_t{1} << i)]) & mask;
            }
        }
    }
    return g;
}

}  // namespace detail

/// Encoder P: the U_G sequence followed by the inverse QFT.
///
/// For a linear f(j) = c0 + c1 j this is one uncontrolled U_G(2 pi c0 / 2^m) and, for every key
/// qubit i, a U_G(2 pi c1 2^i / 2^m) controlled on that key qubit. Higher degrees add one
/// multi-controlled U_G per key-bit subset with a nonzero coefficient. Applied after H (or
/// R(pi/2) for the modified variants) on every wire, it yields
/// 2^{-n/2} sum_j |j>|f(j) mod 2^m> up to per-basis phases.
inline Circuit build_p(const DictionarySpec &spec, Variant v = Variant::Standard) {
    spec.validate();
    const RegisterLayout layout = spec.layout();
    const int n = spec.key_qubits;
    const int m = spec.value_qubits;
    const uint64_t mask = (uint64_t{1} << m) - 1;
    Circuit c(layout.width());

    if (spec.degree() <= 1) {
        uint64_t c0 = static_cast<uint64_t>(spec.coefficients[0]) & mask;
        uint64_t c1 = spec.coefficients.size() > 1 ? static_cast<uint64_t>(spec.coefficients[1]) : 0;
        c.append(build_ug(detail::encoding_angle(c0, m), layout));
        for (int i = 0; i < n; i++) {
            int ctl[] = {layout.key_wire(i)};
            c.append(build_ug(detail::encoding_angle((c1 << i) & mask, m), layout, ctl));
        }
    } else {
        auto g = detail::subset_coefficients(spec);
        c.append(build_ug(detail::encoding_angle(g[0], m), layout));
        for (int i = 0; i < n; i++) {
            int ctl[] = {layout.key_wire(i)};
            c.append(build_ug(detail::encoding_angle(g[uint64_t{1} << i], m), layout, ctl));
        }
        for (uint64_t s = 1; s < g.size(); s++) {
            if ((s & (s - 1)) == 0 || g[s] == 0) {
                continue;
            }
            std::vector<int> ctl;
            for (int i = 0; i < n; i++) {
                if (s >> i & 1) {
                    ctl.push_back(layout.key_wire(i));
                }
            }
            c.append(build_ug(detail::encoding_angle(g[s], m), layout, ctl));
        }
    }
    c.append(qft_dagger(layout, v));
    return c;
}

/// A = P after a full H layer (Standard) or R(pi/2) layer (modified).
inline Circuit build_encoding(const DictionarySpec &spec, Variant v) {
    Circuit c = build_layer(spec.layout().width(), v, +1);
    c.append(build_p(spec, v));
    return c;
}

/// Marks every basis state whose decoded value equals `target_bits`, regardless of key.
inline Circuit build_array_oracle(const RegisterLayout &layout, uint64_t target_bits) {
    layout.validate();
    Circuit c(layout.width());
    append_phase_flip(c, layout.value_readout_wires(), target_bits);
    return c;
}

struct ArraySearchResult : SearchResult {
    RegisterLayout layout;
    uint64_t target_bits = 0;
    /// Keys holding the target value, counted classically from the polynomial.
    uint64_t multiplicity = 0;
    int64_t target_value = 0;
    /// False when the target lies outside the m-bit two's complement range or no key holds it.
    /// The search still runs (on target mod 2^m, with at least one assumed solution) and is
    /// expected to miss.
    bool target_attainable = false;

    uint64_t top_key() const {
        return layout.key_of(top_outcome);
    }
    uint64_t top_value_bits() const {
        return layout.value_of(top_outcome);
    }
    int64_t top_value() const {
        return to_signed(top_value_bits(), layout.value_qubits);
    }
    bool found_target() const {
        return top_value() == target_value;
    }
};

/// Array search: amplify the (index, value) pairs whose value is `target_value` mod 2^m.
inline ArraySearchResult array_search(const DictionarySpec &spec, int64_t target_value, Variant v,
                                      std::optional<int> iterations = std::nullopt) {
    spec.validate();
    const RegisterLayout layout = spec.layout();
    ArraySearchResult r;
    r.layout = layout;
    r.target_value = target_value;
    r.target_bits = to_bits(target_value, layout.value_qubits);
    r.multiplicity = spec.multiplicity(r.target_bits);
    r.target_attainable = r.multiplicity > 0 && representable(target_value, layout.value_qubits);
    int k = iterations.value_or(iteration_count(layout.key_count(), std::max<uint64_t>(1, r.multiplicity)));

    Circuit p = build_p(spec, v);
    Circuit prep = build_layer(layout.width(), v, +1);
    prep.append(p);
    Circuit iterate = build_amplification_iterate(build_array_oracle(layout, r.target_bits), p, v);
    static_cast<SearchResult &>(r) = run_amplification(prep, iterate, k, ControlKeying::TwoRegister);
    return r;
}

}  // namespace qsearch
