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
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsearch/register_layout.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;

    /// Largest channel; for fully saturated colors this is the HSV value.
    uint8_t brightness() const {
        return std::max({r, g, b});
    }
    bool is_black() const {
        return r == 0 && g == 0 && b == 0;
    }
    bool operator==(const Rgb &) const = default;
};

/// Row-major RGB raster.
struct PixelImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;

    PixelImage() = default;
    PixelImage(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * static_cast<size_t>(h)) {
        if (w < 0 || h < 0) {
            throw std::invalid_argument("image dimensions must be non-negative");
        }
    }

    Rgb &at(int x, int y) {
        return pixels[static_cast<size_t>(y) * width + x];
    }
    const Rgb &at(int x, int y) const {
        return pixels[static_cast<size_t>(y) * width + x];
    }
    bool operator==(const PixelImage &) const = default;
};

/// Hue of an amplitude in degrees, [0, 360). Phase 0 is red (0 deg) and the hue increases
/// with the phase, counterclockwise around the wheel.
inline double phase_hue_degrees(Amplitude a) {
    double deg = std::arg(a) * 180.0 / std::numbers::pi;
    if (deg < 0) {
        deg += 360.0;
    }
    return deg >= 360.0 ? 0.0 : deg;
}

/// HSV color with saturation 1: hue from the phase, value |a| / max_magnitude.
inline Rgb amplitude_color(Amplitude a, double max_magnitude) {
    double mag = std::abs(a);
    if (mag == 0 || max_magnitude <= 0) {
        return {};
    }
    double v = std::min(1.0, mag / max_magnitude);
    double h = phase_hue_degrees(a) / 60.0;
    double x = v * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(h)) {
        case 0: r = v, g = x; break;
        case 1: r = x, g = v; break;
        case 2: g = v, b = x; break;
        case 3: g = x, b = v; break;
        case 4: r = x, b = v; break;
        default: r = v, b = x; break;
    }
    auto channel = [](double c) { return static_cast<uint8_t>(std::lround(255.0 * c)); };
    return {channel(r), channel(g), channel(b)};
}

inline double max_magnitude(const StateVector &state) {
    double m = 0;
    for (const auto &a : state.amplitudes()) {
        m = std::max(m, std::abs(a));
    }
    return m;
}

/// One pixel per amplitude, basis index 0 at the top.
inline PixelImage render_column(const StateVector &state) {
    PixelImage img(1, static_cast<int>(state.size()));
    double peak = max_magnitude(state);
    for (size_t j = 0; j < state.size(); j++) {
        img.at(0, static_cast<int>(j)) = amplitude_color(state[j], peak);
    }
    return img;
}

/// Key on the horizontal axis, decoded value on the vertical (value 0 on the top row).
inline PixelImage render_grid(const StateVector &state, const RegisterLayout &layout) {
    layout.validate();
    if (layout.width() != state.num_qubits()) {
        throw std::invalid_argument("layout covers " + std::to_string(layout.width()) + " qubits, state has " +
                                    std::to_string(state.num_qubits()));
    }
    PixelImage img(static_cast<int>(layout.key_count()), static_cast<int>(layout.value_count()));
    double peak = max_magnitude(state);
    for (uint64_t key = 0; key < layout.key_count(); key++) {
        for (uint64_t value = 0; value < layout.value_count(); value++) {
            img.at(static_cast<int>(key), static_cast<int>(value)) =
                amplitude_color(state[layout.basis_index(key, value)], peak);
        }
    }
    return img;
}

/// Binary PPM (P6, maxval 255): "P6\n<w> <h>\n255\n" followed by the raw RGB rows.
inline std::string encode_ppm(const PixelImage &img) {
    if (img.width <= 0 || img.height <= 0) {
        throw std::invalid_argument("cannot encode an empty image");
    }
    if (img.pixels.size() != static_cast<size_t>(img.width) * static_cast<size_t>(img.height)) {
        throw std::invalid_argument("pixel count does not match image dimensions");
    }
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.reserve(out.size() + img.pixels.size() * 3);
    for (const auto &p : img.pixels) {
        out.push_back(static_cast<char>(p.r));
        out.push_back(static_cast<char>(p.g));
        out.push_back(static_cast<char>(p.b));
    }
    return out;
}

inline void write_image(const PixelImage &img, const std::filesystem::path &path) {
    std::string bytes = encode_ppm(img);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace qsearch
