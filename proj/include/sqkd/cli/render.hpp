// Copyright 2026 The sqkd-bound Authors
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

#include <ostream>
#include <span>
#include <string>

#include "sqkd/cli/config.hpp"
#include "sqkd/cli/verify.hpp"
#include "sqkd/keyrate.hpp"

namespace sqkd::cli {

/// Reals with 12 significant digits.
std::string format_real(double x);

void write_rate_reports(std::ostream& out, std::span<const keyrate::KeyRateReport> reports, OutputFormat format);
void write_threshold(std::ostream& out, const keyrate::QxModel& model, double threshold, OutputFormat format);
void write_verify_reports(std::ostream& out, std::span<const VerifyReport> reports, OutputFormat format);

}  // namespace sqkd::cli
