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

#ifndef CVQKD_THRESHOLD_CSV_H
#define CVQKD_THRESHOLD_CSV_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cvqkd/attacks.h"

namespace cvqkd {

// Threshold sweep file, LF line endings:
//
//   # cvqkd-thresholds v1 va=<value>
//   delta,eta_clone,eta_anticlone,eta_bma,eta_opt,eta_intercept_resend
//   <one row per delta, ascending>

inline constexpr std::string_view kThresholdCsvMagic = "# cvqkd-thresholds v1 va=";
inline constexpr std::string_view kThresholdCsvHeader =
    "delta,eta_clone,eta_anticlone,eta_bma,eta_opt,eta_intercept_resend";

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

std::string write_threshold_csv(const ThresholdCurve &curve);

class MalformedInput : public std::runtime_error {
   public:
    MalformedInput(std::size_t line, const std::string &what);
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Throws MalformedInput naming the first offending line (1-based). A file
/// with no data rows is malformed.
ThresholdCurve parse_threshold_csv(std::string_view text);

}  // namespace cvqkd

#endif
