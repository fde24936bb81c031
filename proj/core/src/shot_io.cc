// Copyright 2026 The Quantromon Toolkit Authors
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

#include "quantromon/shot_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

#include "quantromon/errors.h"

namespace quantromon {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view text, int line_no) {
    double v = 0.0;
    auto first = text.data();
    auto last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        first++;
    }
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ValidationError("shot csv line " + std::to_string(line_no) + ": not a number: '" + std::string(text) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

struct ParamField {
    const char *name;
    double ReadoutParams::*member;
};

constexpr ParamField kParamFields[] = {
    {"omega_r", &ReadoutParams::omega_r},
    {"two_chi", &ReadoutParams::two_chi},
    {"kappa_ext", &ReadoutParams::kappa_ext},
    {"kappa_int", &ReadoutParams::kappa_int},
    {"nbar", &ReadoutParams::nbar},
    {"tau", &ReadoutParams::tau},
    {"t1", &ReadoutParams::t1},
    {"readout_freq", &ReadoutParams::readout_freq},
    {"efficiency", &ReadoutParams::efficiency},
    {"thermal_population", &ReadoutParams::thermal_population},
};

}  // namespace

void write_shots_csv(std::ostream &out, const ShotSet &shots) {
    out << "# quantromon shots v1\n";
    out << "# prepared_state=" << shots.prepared_state << "\n";
    out << "# seed=" << shots.seed << "\n";
    for (const auto &f : kParamFields) {
        out << "# " << f.name << "=" << format_double(shots.params.*f.member) << "\n";
    }
    out << "value\n";
    for (double v : shots.values) {
        out << format_double(v) << "\n";
    }
}

ShotSet read_shots_csv(std::istream &in) {
    ShotSet shots;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        line_no++;
        auto text = trim(line);
        if (text.empty()) {
            continue;
        }
        if (text.front() == '#') {
            auto body = trim(text.substr(1));
            auto eq = body.find('=');
            if (eq == std::string_view::npos) {
                continue;
            }
            auto key = trim(body.substr(0, eq));
            auto value = trim(body.substr(eq + 1));
            if (key == "prepared_state") {
                shots.prepared_state = static_cast<int>(parse_double(value, line_no));
            } else if (key == "seed") {
                std::uint64_t seed = 0;
                auto res = std::from_chars(value.data(), value.data() + value.size(), seed);
                if (res.ec != std::errc()) {
                    throw ValidationError("shot csv line " + std::to_string(line_no) + ": bad seed");
                }
                shots.seed = seed;
            } else {
                for (const auto &f : kParamFields) {
                    if (key == f.name) {
                        shots.params.*f.member = parse_double(value, line_no);
                    }
                }
            }
            continue;
        }
        if (!header_seen) {
            if (text != "value") {
                throw ValidationError(
                    "shot csv line " + std::to_string(line_no) + ": expected header 'value', got '" + std::string(text) + "'");
            }
            header_seen = true;
            continue;
        }
        shots.values.push_back(parse_double(text, line_no));
    }
    if (!header_seen) {
        throw ValidationError("shot csv: missing 'value' header");
    }
    return shots;
}

void save_shots_csv(const std::string &path, const ShotSet &shots) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open '" + path + "' for writing");
    }
    write_shots_csv(out, shots);
}

ShotSet load_shots_csv(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open shot file '" + path + "'");
    }
    return read_shots_csv(in);
}

}  // namespace quantromon
