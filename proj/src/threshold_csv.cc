// Copyright 2026 The cvqkd Authors
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

#include "cvqkd/threshold_csv.h"

#include <array>
#include <charconv>
#include <optional>
#include <vector>

namespace cvqkd {

namespace {

std::optional<double> parse_double(std::string_view s) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string write_threshold_csv(const ThresholdCurve &curve) {
    std::string out;
    out += kThresholdCsvMagic;
    out += format_double(curve.v_a);
    out += '\n';
    out += kThresholdCsvHeader;
    out += '\n';
    for (const ThresholdRow &row : curve.rows) {
        std::array<double, 6> fields = {row.delta,   row.eta_clone, row.eta_anticlone,
                                        row.eta_bma, row.eta_opt,   row.eta_intercept_resend};
        for (size_t i = 0; i < fields.size(); i++) {
            if (i > 0) {
                out += ',';
            }
            out += format_double(fields[i]);
        }
        out += '\n';
    }
    return out;
}

MalformedInput::MalformedInput(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ThresholdCurve parse_threshold_csv(std::string_view text) {
    std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty() || !lines[0].starts_with(kThresholdCsvMagic)) {
        throw MalformedInput(1, "expected '" + std::string(kThresholdCsvMagic) + "<value>'");
    }
    auto v_a = parse_double(lines[0].substr(kThresholdCsvMagic.size()));
    if (!v_a) {
        throw MalformedInput(1, "unparseable modulation variance");
    }
    if (lines.size() < 2 || lines[1] != kThresholdCsvHeader) {
        throw MalformedInput(2, "expected header '" + std::string(kThresholdCsvHeader) + "'");
    }
    ThresholdCurve curve{.v_a = *v_a, .rows = {}};
    for (size_t i = 2; i < lines.size(); i++) {
        std::string_view line = lines[i];
        std::array<double, 6> fields{};
        size_t count = 0;
        size_t start = 0;
        while (true) {
            size_t comma = line.find(',', start);
            std::string_view field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
            if (count >= fields.size()) {
                throw MalformedInput(i + 1, "too many fields");
            }
            auto value = parse_double(field);
            if (!value) {
                throw MalformedInput(i + 1, "bad number '" + std::string(field) + "'");
            }
            fields[count++] = *value;
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (count != fields.size()) {
            throw MalformedInput(i + 1, "expected 6 fields, got " + std::to_string(count));
        }
        curve.rows.push_back(ThresholdRow{fields[0], fields[1], fields[2], fields[3], fields[4], fields[5]});
    }
    if (curve.rows.empty()) {
        throw MalformedInput(3, "no data rows");
    }
    return curve;
}

}  // namespace cvqkd
