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

// Command-line front end. Kept in a header so the test suites can drive it in-process.
//
// Exit codes: 0 success, 1 internal failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <utility>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsearch/qsearch.hpp"

namespace qsearch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Table, Json };

/// Everything a subcommand needs, filled in by the parser.
struct RunConfig {
    std::string subcommand;
    int num_qubits = 0;
    int value_qubits = 0;
    std::vector<uint64_t> marked;
    std::vector<int64_t> poly;
    std::optional<int64_t> target;
    std::string variant = "rx";
    std::optional<int> iterations;
    std::string mode = "set";

    std::vector<double> p1_levels{0.0, 0.005, 0.01, 0.02};
    std::vector<double> p2_levels;
    double p2_ratio = 5.0;
    uint64_t shots = 8192;
    int seeds = 10;
    uint64_t seed = 1;
    std::vector<std::string> sweep_variants{"standard", "rx"};

    std::string format = "table";
    std::string out_path;
    std::string dump_circuit;
    std::string image_path;
    std::string layout = "grid";
    std::string frames_dir;
};

namespace detail {

/// printf-formatted number. The structured output stores exactly the value this string
/// parses to, so the table and the document always agree.
inline std::string num(double v, const char *spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline double num_value(double v, const char *spec = "%.6f") {
    return std::stod(num(v, spec));
}

inline std::string bits_string(uint64_t v, int width) {
    std::string s(width, '0');
    for (int b = 0; b < width; b++) {
        if ((v >> b) & 1) {
            s[width - 1 - b] = '1';
        }
    }
    return s;
}

inline std::string join(const std::vector<uint64_t> &xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); i++) {
        s += (i ? "," : "") + std::to_string(xs[i]);
    }
    return s;
}

inline std::string poly_string(const std::vector<int64_t> &c) {
    std::string s;
    for (size_t t = 0; t < c.size(); t++) {
        if (t > 0 && c[t] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += c[t] < 0 ? " - " : " + ";
        } else if (c[t] < 0) {
            s += "-";
        }
        s += std::to_string(c[t] < 0 ? -c[t] : c[t]);
        if (t == 1) {
            s += "*j";
        } else if (t > 1) {
            s += "*j^" + std::to_string(t);
        }
    }
    return s;
}

inline nlohmann::ordered_json histogram_json(const GateHistogram &h) {
    nlohmann::ordered_json j;
    for (auto key : kAllHistKeys) {
        j[std::string(key_name(key))] = h[key];
    }
    return j;
}

inline Variant variant_or_throw(const std::string &name) {
    auto v = parse_variant(name);
    if (!v) {
        throw UsageError("unknown variant '" + name + "' (expected standard, rx or ry)");
    }
    return *v;
}

inline Variant modified_variant(const RunConfig &cfg) {
    Variant v = variant_or_throw(cfg.variant);
    return v == Variant::Standard ? Variant::ModifiedRX : v;
}

inline void require_set_args(const RunConfig &cfg) {
    if (cfg.num_qubits < 1 || cfg.num_qubits > kMaxQubits) {
        throw UsageError("-n must lie in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (cfg.marked.empty()) {
        throw UsageError("--marked needs at least one index");
    }
    for (auto m : cfg.marked) {
        if (m >= (uint64_t{1} << cfg.num_qubits)) {
            throw UsageError("marked index " + std::to_string(m) + " out of range for n=" +
                             std::to_string(cfg.num_qubits));
        }
    }
    try {
        OracleSpec{cfg.num_qubits, cfg.marked}.validate();
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    if (cfg.iterations && *cfg.iterations < 0) {
        throw UsageError("--iterations must be non-negative");
    }
}

inline DictionarySpec require_array_args(const RunConfig &cfg) {
    if (cfg.num_qubits < 1 || cfg.value_qubits < 1) {
        throw UsageError("array mode needs -n >= 1 and -m >= 1");
    }
    if (cfg.num_qubits + cfg.value_qubits > kMaxQubits) {
        throw UsageError("n + m must not exceed " + std::to_string(kMaxQubits));
    }
    if (cfg.poly.empty()) {
        throw UsageError("--poly needs at least one coefficient (constant first)");
    }
    if (!cfg.target) {
        throw UsageError("--target is required in array mode");
    }
    if (cfg.iterations && *cfg.iterations < 0) {
        throw UsageError("--iterations must be non-negative");
    }
    return DictionarySpec{cfg.num_qubits, cfg.value_qubits, cfg.poly};
}

inline void dump_circuit(const RunConfig &cfg, const Circuit &c, std::ostream &out) {
    if (cfg.dump_circuit.empty()) {
        return;
    }
    if (cfg.dump_circuit == "-") {
        write_listing(out, c);
        return;
    }
    std::ofstream f(cfg.dump_circuit);
    if (!f) {
        throw std::runtime_error("cannot open " + cfg.dump_circuit);
    }
    write_listing(f, c);
}

inline PixelImage render(const StateVector &s, const RegisterLayout *layout, const std::string &style) {
    if (style == "grid" && layout != nullptr) {
        return render_grid(s, *layout);
    }
    return render_column(s);
}

/// Distribution rows worth printing: everything nonzero at 6 decimals.
inline std::vector<uint64_t> visible_outcomes(const std::vector<double> &dist) {
    std::vector<uint64_t> rows;
    for (uint64_t i = 0; i < dist.size(); i++) {
        if (num_value(dist[i]) != 0.0) {
            rows.push_back(i);
        }
    }
    return rows;
}

/// Max elementwise distribution difference over every recorded frame.
inline double frame_residual(const SearchResult &a, const SearchResult &b) {
    double worst = 0;
    for (size_t k = 0; k < std::min(a.frames.size(), b.frames.size()); k++) {
        worst = std::max(worst, max_abs_difference(probabilities(a.frames[k]), probabilities(b.frames[k])));
    }
    return worst;
}

struct Report {
    std::ostringstream table;
    nlohmann::ordered_json doc;
};

inline void emit(const RunConfig &cfg, Report &r, std::ostream &out) {
    std::string text = cfg.format == "json" ? r.doc.dump(2) + "\n" : r.table.str();
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + cfg.out_path);
    }
    f << text;
}

}  // namespace detail

inline int cmd_set_search(const RunConfig &cfg, std::ostream &out) {
    using namespace detail;
    require_set_args(cfg);
    Variant v = variant_or_throw(cfg.variant);
    SearchResult res = set_search(cfg.num_qubits, cfg.marked, v, cfg.iterations);
    const int n = cfg.num_qubits;

    Report r;
    r.table << "set search  n=" << n << "  marked={" << join(cfg.marked) << "}  variant=" << variant_name(v)
            << "  iterations=" << res.iterations << "\n";
    r.table << "outcome  bits  probability\n";
    auto &doc = r.doc;
    doc["command"] = "set-search";
    doc["num_qubits"] = n;
    doc["marked"] = cfg.marked;
    doc["variant"] = variant_name(v);
    doc["iterations"] = res.iterations;
    doc["distribution"] = nlohmann::ordered_json::array();
    for (uint64_t i : visible_outcomes(res.distribution)) {
        char line[128];
        std::snprintf(line, sizeof line, "%7llu  %s  %s\n", static_cast<unsigned long long>(i),
                      bits_string(i, n).c_str(), num(res.distribution[i]).c_str());
        r.table << line;
        doc["distribution"].push_back({{"outcome", i}, {"probability", num_value(res.distribution[i])}});
    }
    double top_p = res.distribution[res.top_outcome];
    r.table << "top outcome: " << res.top_outcome << "  P(" << res.top_outcome << ")=" << num(top_p) << "\n";
    r.table << "gates: " << res.histogram << " (total " << res.histogram.total() << ")\n";
    doc["top_outcome"] = res.top_outcome;
    doc["top_probability"] = num_value(top_p);
    doc["histogram"] = histogram_json(res.histogram);
    doc["total_gates"] = res.histogram.total();

    if (!cfg.image_path.empty()) {
        write_image(render_column(res.frames.back()), cfg.image_path);
    }
    emit(cfg, r, out);
    dump_circuit(cfg, res.circuit, out);
    return kExitOk;
}

inline int cmd_array_search(const RunConfig &cfg, std::ostream &out) {
    using namespace detail;
    DictionarySpec spec = require_array_args(cfg);
    Variant v = variant_or_throw(cfg.variant);
    ArraySearchResult res = array_search(spec, *cfg.target, v, cfg.iterations);
    const RegisterLayout &layout = res.layout;
    const int m = layout.value_qubits;

    Report r;
    r.table << "array search  n=" << layout.key_qubits << " m=" << m << "  f(j) = " << poly_string(spec.coefficients)
            << "  target=" << *cfg.target << " (bits " << bits_string(res.target_bits, m) << ")  variant="
            << variant_name(v) << "  iterations=" << res.iterations << "\n";
    r.table << "keys matching oracle: " << res.multiplicity << "\n";
    if (!res.target_attainable) {
        r.table << "note: no index holds value " << *cfg.target << " in " << m
                << "-bit two's complement; the search runs on bits " << bits_string(res.target_bits, m)
                << " and is expected to miss\n";
    }
    r.table << "  index   value  bits  probability\n";
    auto &doc = r.doc;
    doc["command"] = "array-search";
    doc["key_qubits"] = layout.key_qubits;
    doc["value_qubits"] = m;
    doc["poly"] = spec.coefficients;
    doc["target"] = *cfg.target;
    doc["target_bits"] = res.target_bits;
    doc["variant"] = variant_name(v);
    doc["iterations"] = res.iterations;
    doc["keys_matching_oracle"] = res.multiplicity;
    doc["target_attainable"] = res.target_attainable;
    doc["distribution"] = nlohmann::ordered_json::array();
    std::vector<uint64_t> rows = visible_outcomes(res.distribution);
    std::sort(rows.begin(), rows.end(), [&](uint64_t a, uint64_t b) {
        return std::pair(layout.key_of(a), layout.value_of(a)) < std::pair(layout.key_of(b), layout.value_of(b));
    });
    for (uint64_t i : rows) {
        uint64_t key = layout.key_of(i), bits = layout.value_of(i);
        char line[160];
        std::snprintf(line, sizeof line, "%7llu  %6lld  %s  %s\n", static_cast<unsigned long long>(key),
                      static_cast<long long>(to_signed(bits, m)), bits_string(bits, m).c_str(),
                      num(res.distribution[i]).c_str());
        r.table << line;
        doc["distribution"].push_back({{"index", key},
                                       {"value", to_signed(bits, m)},
                                       {"value_bits", bits},
                                       {"probability", num_value(res.distribution[i])}});
    }
    double top_p = res.distribution[res.top_outcome];
    r.table << "top outcome: index " << res.top_key() << ", value " << res.top_value() << "  P=" << num(top_p)
            << "\n";
    r.table << "target found: " << (res.found_target() ? "yes" : "no") << "\n";
    r.table << "gates: " << res.histogram << " (total " << res.histogram.total() << ")\n";
    doc["top_index"] = res.top_key();
    doc["top_value"] = res.top_value();
    doc["top_probability"] = num_value(top_p);
    doc["target_found"] = res.found_target();
    doc["histogram"] = histogram_json(res.histogram);
    doc["total_gates"] = res.histogram.total();

    if (!cfg.frames_dir.empty()) {
        std::filesystem::create_directories(cfg.frames_dir);
        for (size_t k = 0; k < res.frames.size(); k++) {
            char name[32];
            std::snprintf(name, sizeof name, "frame_%02zu.ppm", k);
            write_image(render(res.frames[k], &layout, cfg.layout), std::filesystem::path(cfg.frames_dir) / name);
        }
    }
    if (!cfg.image_path.empty()) {
        write_image(render(res.frames.back(), &layout, cfg.layout), cfg.image_path);
    }
    emit(cfg, r, out);
    dump_circuit(cfg, res.circuit, out);
    return kExitOk;
}

inline int cmd_compare(const RunConfig &cfg, std::ostream &out) {
    using namespace detail;
    Variant modified = modified_variant(cfg);
    SearchResult standard_res, modified_res;
    int width = 0;
    Report r;
    auto &doc = r.doc;
    doc["command"] = "compare";
    doc["mode"] = cfg.mode;
    if (cfg.mode == "set") {
        require_set_args(cfg);
        standard_res = set_search(cfg.num_qubits, cfg.marked, Variant::Standard, cfg.iterations);
        modified_res = set_search(cfg.num_qubits, cfg.marked, modified, cfg.iterations);
        width = cfg.num_qubits;
        r.table << "compare  set search  n=" << width << "  marked={" << join(cfg.marked) << "}";
        doc["num_qubits"] = width;
        doc["marked"] = cfg.marked;
    } else if (cfg.mode == "array") {
        DictionarySpec spec = require_array_args(cfg);
        standard_res = array_search(spec, *cfg.target, Variant::Standard, cfg.iterations);
        modified_res = array_search(spec, *cfg.target, modified, cfg.iterations);
        width = spec.layout().width();
        r.table << "compare  array search  n=" << spec.key_qubits << " m=" << spec.value_qubits
                << "  f(j) = " << poly_string(spec.coefficients) << "  target=" << *cfg.target;
        doc["key_qubits"] = spec.key_qubits;
        doc["value_qubits"] = spec.value_qubits;
        doc["poly"] = spec.coefficients;
        doc["target"] = *cfg.target;
    } else {
        throw UsageError("--mode must be set or array");
    }
    const int k = standard_res.iterations;
    r.table << "  iterations=" << k << "\n";
    doc["iterations"] = k;

    std::vector<HistKey> cols;
    for (auto key : kAllHistKeys) {
        if (standard_res.histogram[key] || modified_res.histogram[key]) {
            cols.push_back(key);
        }
    }
    char cell[32];
    r.table << "variant   ";
    for (auto key : cols) {
        std::snprintf(cell, sizeof cell, "%6s", std::string(key_name(key)).c_str());
        r.table << cell;
    }
    r.table << "   total\n";
    auto row = [&](std::string_view name, const GateHistogram &h) {
        std::snprintf(cell, sizeof cell, "%-10s", std::string(name).c_str());
        r.table << cell;
        for (auto key : cols) {
            std::snprintf(cell, sizeof cell, "%6llu", static_cast<unsigned long long>(h[key]));
            r.table << cell;
        }
        std::snprintf(cell, sizeof cell, "%8llu\n", static_cast<unsigned long long>(h.total()));
        r.table << cell;
    };
    row("standard", standard_res.histogram);
    row(variant_name(modified), modified_res.histogram);

    long long saved = static_cast<long long>(standard_res.histogram[HistKey::X]) -
                      static_cast<long long>(modified_res.histogram[HistKey::X]);
    long long expected_saved = 2LL * width * k;
    double residual = frame_residual(standard_res, modified_res);
    r.table << "X gates saved: " << saved << " (2 x " << width << " per mirror x " << k << " iterations = "
            << expected_saved << ")\n";
    r.table << "equivalence residual: " << num(residual, "%.3e") << "\n";

    doc["standard"] = {{"variant", "standard"},
                       {"histogram", histogram_json(standard_res.histogram)},
                       {"total_gates", standard_res.histogram.total()}};
    doc["modified"] = {{"variant", variant_name(modified)},
                       {"histogram", histogram_json(modified_res.histogram)},
                       {"total_gates", modified_res.histogram.total()}};
    doc["x_saved"] = saved;
    doc["x_saved_expected"] = expected_saved;
    doc["equivalence_residual"] = num_value(residual, "%.3e");
    emit(cfg, r, out);
    return kExitOk;
}

inline int cmd_noise_sweep(const RunConfig &cfg, std::ostream &out) {
    using namespace detail;
    if (cfg.shots < 1) {
        throw UsageError("--shots must be at least 1");
    }
    if (cfg.seeds < 1) {
        throw UsageError("--seeds must be at least 1");
    }
    if (cfg.p1_levels.empty()) {
        throw UsageError("--p1 needs at least one level");
    }
    if (!cfg.p2_levels.empty() && cfg.p2_levels.size() != cfg.p1_levels.size()) {
        throw UsageError("--p2 must list one level per --p1 level");
    }
    std::vector<std::pair<double, double>> levels;
    for (size_t i = 0; i < cfg.p1_levels.size(); i++) {
        double p1 = cfg.p1_levels[i];
        double p2 = cfg.p2_levels.empty() ? cfg.p2_ratio * p1 : cfg.p2_levels[i];
        if (!(p1 >= 0 && p1 <= 1 && p2 >= 0 && p2 <= 1)) {
            throw UsageError("noise levels must lie in [0, 1]");
        }
        levels.emplace_back(p1, p2);
    }
    std::vector<Variant> variants;
    for (const auto &name : cfg.sweep_variants) {
        variants.push_back(variant_or_throw(name));
    }

    Report r;
    auto &doc = r.doc;
    doc["command"] = "noise-sweep";
    doc["mode"] = cfg.mode;
    doc["shots"] = cfg.shots;
    doc["seeds"] = cfg.seeds;
    doc["seed"] = cfg.seed;

    struct Job {
        Variant variant;
        Circuit circuit;
        std::function<bool(uint64_t)> success;
        double exact;
    };
    std::vector<Job> jobs;
    if (cfg.mode == "set") {
        require_set_args(cfg);
        std::vector<uint64_t> marked = cfg.marked;
        auto is_marked = [marked](uint64_t o) { return std::find(marked.begin(), marked.end(), o) != marked.end(); };
        for (Variant v : variants) {
            SearchResult res = set_search(cfg.num_qubits, cfg.marked, v, cfg.iterations);
            double exact = 0;
            for (auto mk : marked) {
                exact += res.distribution[mk];
            }
            jobs.push_back({v, res.circuit, is_marked, exact});
        }
        r.table << "noise sweep  set search  n=" << cfg.num_qubits << "  marked={" << join(cfg.marked) << "}";
        doc["num_qubits"] = cfg.num_qubits;
        doc["marked"] = cfg.marked;
    } else if (cfg.mode == "array") {
        DictionarySpec spec = require_array_args(cfg);
        for (Variant v : variants) {
            ArraySearchResult res = array_search(spec, *cfg.target, v, cfg.iterations);
            RegisterLayout layout = res.layout;
            uint64_t target = res.target_bits;
            auto hit = [layout, target](uint64_t o) { return layout.value_of(o) == target; };
            double exact = 0;
            for (uint64_t i = 0; i < res.distribution.size(); i++) {
                exact += hit(i) ? res.distribution[i] : 0.0;
            }
            jobs.push_back({v, res.circuit, hit, exact});
        }
        r.table << "noise sweep  array search  n=" << spec.key_qubits << " m=" << spec.value_qubits
                << "  f(j) = " << poly_string(spec.coefficients) << "  target=" << *cfg.target;
        doc["key_qubits"] = spec.key_qubits;
        doc["value_qubits"] = spec.value_qubits;
        doc["poly"] = spec.coefficients;
        doc["target"] = *cfg.target;
    } else {
        throw UsageError("--mode must be set or array");
    }
    r.table << "  shots=" << cfg.shots << "  seeds=" << cfg.seeds << "  seed=" << cfg.seed << "\n";
    r.table << "      p1        p2  variant   mean_success     exact\n";
    doc["rows"] = nlohmann::ordered_json::array();
    for (auto [p1, p2] : levels) {
        for (const auto &job : jobs) {
            double mean = mean_success(job.circuit, p1, p2, cfg.shots, cfg.seeds, cfg.seed, job.success);
            char line[160];
            std::snprintf(line, sizeof line, "%s  %s  %-8s  %12s  %8s\n", num(p1).c_str(), num(p2).c_str(),
                          std::string(variant_name(job.variant)).c_str(), num(mean).c_str(), num(job.exact).c_str());
            r.table << line;
            doc["rows"].push_back({{"p1", num_value(p1)},
                                   {"p2", num_value(p2)},
                                   {"variant", variant_name(job.variant)},
                                   {"mean_success", num_value(mean)},
                                   {"exact", num_value(job.exact)}});
        }
    }
    emit(cfg, r, out);
    return kExitOk;
}

inline void add_output_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
}

inline void add_set_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("-n,--qubits", cfg.num_qubits, "Register width");
    sub->add_option("--marked", cfg.marked, "Marked basis indices (comma separated)")->delimiter(',');
}

inline void add_array_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("-n,--key-qubits", cfg.num_qubits, "Index register width");
    sub->add_option("-m,--value-qubits", cfg.value_qubits, "Value register width");
    sub->add_option("--poly", cfg.poly, "Polynomial coefficients, constant first (e.g. -4,1)")->delimiter(',');
    sub->add_option("--target", cfg.target, "Value to search for (decimal, may be negative)");
}

/// Parses and dispatches. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Grover set and array search with standard and RX/RY-modified iterates"};
    app.name("qsearch");
    app.require_subcommand(1, 1);

    auto *set = app.add_subcommand("set-search", "Search a single register for marked indices");
    add_set_options(set, cfg);
    set->add_option("--variant", cfg.variant, "standard | rx | ry")->capture_default_str();
    set->add_option("--iterations", cfg.iterations, "Override the iteration count");
    set->add_option("--image", cfg.image_path, "Write the final state as a PPM column image");
    set->add_option("--dump-circuit", cfg.dump_circuit, "Write the circuit listing ('-' for stdout)");
    add_output_options(set, cfg);

    auto *arr = app.add_subcommand("array-search", "Search a polynomial-encoded array for a value");
    add_array_options(arr, cfg);
    arr->add_option("--variant", cfg.variant, "standard | rx | ry")->capture_default_str();
    arr->add_option("--iterations", cfg.iterations, "Override the iteration count");
    arr->add_option("--emit-frames", cfg.frames_dir, "Write one PPM per iteration (plus the encoding) here");
    arr->add_option("--image", cfg.image_path, "Write the final state as a PPM image");
    arr->add_option("--layout", cfg.layout, "Image layout")->check(CLI::IsMember({"grid", "column"}));
    arr->add_option("--dump-circuit", cfg.dump_circuit, "Write the circuit listing ('-' for stdout)");
    add_output_options(arr, cfg);

    auto *cmp = app.add_subcommand("compare", "Gate counts and equivalence of standard vs modified");
    cmp->add_option("--mode", cfg.mode, "set | array")->check(CLI::IsMember({"set", "array"}));
    cmp->add_option("-n", cfg.num_qubits, "Register (or index register) width");
    cmp->add_option("-m,--value-qubits", cfg.value_qubits, "Value register width (array mode)");
    cmp->add_option("--marked", cfg.marked, "Marked indices (set mode)")->delimiter(',');
    cmp->add_option("--poly", cfg.poly, "Polynomial coefficients (array mode)")->delimiter(',');
    cmp->add_option("--target", cfg.target, "Target value (array mode)");
    cmp->add_option("--variant", cfg.variant, "Modified rotation axis: rx | ry");
    cmp->add_option("--iterations", cfg.iterations, "Override the iteration count");
    add_output_options(cmp, cfg);

    auto *sweep = app.add_subcommand("noise-sweep", "Mean success probability under depolarizing noise");
    sweep->add_option("--mode", cfg.mode, "set | array")->check(CLI::IsMember({"set", "array"}));
    sweep->add_option("-n", cfg.num_qubits, "Register (or index register) width");
    sweep->add_option("-m,--value-qubits", cfg.value_qubits, "Value register width (array mode)");
    sweep->add_option("--marked", cfg.marked, "Marked indices (set mode)")->delimiter(',');
    sweep->add_option("--poly", cfg.poly, "Polynomial coefficients (array mode)")->delimiter(',');
    sweep->add_option("--target", cfg.target, "Target value (array mode)");
    sweep->add_option("--iterations", cfg.iterations, "Override the iteration count");
    sweep->add_option("--p1", cfg.p1_levels, "Single-qubit error levels")->delimiter(',')->capture_default_str();
    sweep->add_option("--p2", cfg.p2_levels, "Controlled-gate error levels, one per --p1")->delimiter(',');
    sweep->add_option("--p2-ratio", cfg.p2_ratio, "p2 = ratio * p1 when --p2 is absent")->capture_default_str();
    sweep->add_option("--shots", cfg.shots, "Shots per run")->capture_default_str();
    sweep->add_option("--seeds", cfg.seeds, "Runs per noise level")->capture_default_str();
    sweep->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    sweep->add_option("--variants", cfg.sweep_variants, "Variants to sweep")->delimiter(',');
    add_output_options(sweep, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    CLI::App *chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    try {
        if (cfg.subcommand == "set-search") {
            return cmd_set_search(cfg, out);
        }
        if (cfg.subcommand == "array-search") {
            return cmd_array_search(cfg, out);
        }
        if (cfg.subcommand == "compare") {
            return cmd_compare(cfg, out);
        }
        return cmd_noise_sweep(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n" << chosen->help();
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qsearch::cli
