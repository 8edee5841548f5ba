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

// Regenerates the golden files under tests/golden. Run only when an intended output change
// has been reviewed:  make_golden <dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qsearch/qsearch.hpp"

int main(int argc, char **argv) {
    using namespace qsearch;
    if (argc != 2) {
        std::cerr << "usage: make_golden <dir>\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    auto listing = [&](const std::string &name, const Circuit &c) {
        std::ofstream(dir / name, std::ios::binary) << to_listing(c);
    };
    listing("set_n2_m2_standard.txt", set_search(2, {2}, Variant::Standard).circuit);
    listing("set_n2_m2_rx.txt", set_search(2, {2}, Variant::ModifiedRX).circuit);
    listing("p_n3_m3_rx.txt", build_p({3, 3, {-4, 1}}, Variant::ModifiedRX));

    DictionarySpec spec{3, 3, {-4, 1}};
    write_image(render_grid(simulate(build_encoding(spec, Variant::Standard)), spec.layout()),
                dir / "encoding_j_minus_4.ppm");
    for (Variant v : {Variant::Standard, Variant::ModifiedRX}) {
        auto r = array_search(spec, -3, v);
        for (size_t k = 0; k < r.frames.size(); k++) {
            write_image(render_grid(r.frames[k], spec.layout()),
                        dir / ("search_" + std::string(variant_name(v)) + "_" + std::to_string(k) + ".ppm"));
        }
    }
    return 0;
}
