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
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsearch/circuit.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

/// Per-gate depolarizing noise. After each gate without controls, with probability p1, and
/// after each controlled gate, with probability p2, one error event fires and every qubit the
/// gate touched receives an independent uniformly chosen Pauli X, Y or Z.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    uint64_t seed = 0;

    void validate() const {
        if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0)) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
};

struct ShotResult {
    std::map<uint64_t, uint64_t> counts;
    uint64_t shots = 0;

    uint64_t count(uint64_t outcome) const {
        auto it = counts.find(outcome);
        return it == counts.end() ? 0 : it->second;
    }
    double frequency(uint64_t outcome) const {
        return shots == 0 ? 0.0 : static_cast<double>(count(outcome)) / static_cast<double>(shots);
    }
    double frequency_where(const std::function<bool(uint64_t)> &accept) const {
        uint64_t hits = 0;
        for (const auto &[outcome, n] : counts) {
            if (accept(outcome)) {
                hits += n;
            }
        }
        return shots == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(shots);
    }
};

namespace detail {

enum class Pauli : uint8_t { X, Y, Z };

struct ErrorEvent {
    size_t after_gate;
    int qubit;
    Pauli pauli;
};

/// Engine for one trajectory. The stream depends only on (seed, trajectory), so serial and
/// threaded runs draw identical numbers.
inline std::mt19937_64 trajectory_engine(uint64_t seed, uint64_t trajectory) {
    // splitmix64 finalizer over the pair, so neighbouring seeds and trajectories decorrelate.
    uint64_t z = seed * 0x9E3779B97F4A7C15ull + trajectory + 0x632BE59BD9B4E019ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return std::mt19937_64(z ^ (z >> 31));
}

/// Uniform double in [0, 1) from the top 53 bits; same value on every platform.
inline double unit_double(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline uint64_t sample_index(const std::vector<double> &cdf, double u) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
    return std::min<uint64_t>(static_cast<uint64_t>(it - cdf.begin()), cdf.size() - 1);
}

inline uint64_t sample_state(const StateVector &s, double u) {
    double target = u * s.norm_squared(), acc = 0;
    for (size_t i = 0; i < s.size(); i++) {
        acc += std::norm(s[i]);
        if (target < acc) {
            return i;
        }
    }
    return s.size() - 1;
}

inline std::vector<double> cumulative(const StateVector &s) {
    std::vector<double> cdf(s.size());
    double acc = 0;
    for (size_t i = 0; i < s.size(); i++) {
        acc += std::norm(s[i]);
        cdf[i] = acc;
    }
    return cdf;
}

inline void apply_pauli(StateVector &s, int q, Pauli p) {
    switch (p) {
        case Pauli::X:
            apply_gate(s, Gate::x(q));
            break;
        case Pauli::Z:
            apply_gate(s, Gate::z(q));
            break;
        case Pauli::Y: {
            const Amplitude i{0.0, 1.0};
            s.apply_controlled({0.0, -i, i, 0.0}, q, 0);
            break;
        }
    }
}

}  // namespace detail

/// Monte Carlo trajectory sampling: one pure-state trajectory and one measurement per shot.
/// Deterministic in (circuit, noise, shots, initial); `threads` (0 = hardware concurrency) does
/// not change the counts.
inline ShotResult run_noisy(const Circuit &c, const NoiseModel &noise, uint64_t shots,
                            const StateVector &initial, unsigned threads = 0) {
    noise.validate();
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (initial.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("initial state width does not match the circuit");
    }
    const auto &gates = c.gates();
    const std::vector<double> ideal_cdf = detail::cumulative(simulate(c, initial));

    auto run_one = [&](uint64_t t) -> uint64_t {
        auto rng = detail::trajectory_engine(noise.seed, t);
        std::vector<detail::ErrorEvent> events;
        for (size_t g = 0; g < gates.size(); g++) {
            double p = gates[g].controls.empty() ? noise.p1 : noise.p2;
            if (p > 0 && detail::unit_double(rng) < p) {
                for (int q : gates[g].controls) {
                    events.push_back({g, q, static_cast<detail::Pauli>(rng() % 3)});
                }
                events.push_back({g, gates[g].target, static_cast<detail::Pauli>(rng() % 3)});
            }
        }
        double u = detail::unit_double(rng);
        if (events.empty()) {
            return detail::sample_index(ideal_cdf, u);
        }
        StateVector s = initial;
        size_t next = 0;
        for (size_t g = 0; g < gates.size(); g++) {
            apply_gate(s, gates[g]);
            for (; next < events.size() && events[next].after_gate == g; next++) {
                detail::apply_pauli(s, events[next].qubit, events[next].pauli);
            }
        }
        return detail::sample_state(s, u);
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, shots));
    std::vector<std::map<uint64_t, uint64_t>> partial(workers);
    auto work = [&](unsigned w) {
        for (uint64_t t = w; t < shots; t += workers) {
            partial[w][run_one(t)]++;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
    }

    ShotResult result;
    result.shots = shots;
    for (const auto &part : partial) {
        for (const auto &[outcome, n] : part) {
            result.counts[outcome] += n;
        }
    }
    return result;
}

inline ShotResult run_noisy(const Circuit &c, const NoiseModel &noise, uint64_t shots) {
    return run_noisy(c, noise, shots, zero_state(c.num_qubits()));
}

/// Mean over `num_seeds` runs (seeds base_seed, base_seed + 1, ...) of the fraction of shots
/// accepted by `success`.
inline double mean_success(const Circuit &c, double p1, double p2, uint64_t shots, int num_seeds,
                           uint64_t base_seed, const std::function<bool(uint64_t)> &success) {
    if (num_seeds < 1) {
        throw std::invalid_argument("need at least one seed");
    }
    double total = 0;
    for (int s = 0; s < num_seeds; s++) {
        NoiseModel noise{p1, p2, base_seed + static_cast<uint64_t>(s)};
        total += run_noisy(c, noise, shots).frequency_where(success);
    }
    return total / num_seeds;
}

}  // namespace qsearch
