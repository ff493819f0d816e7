// Copyright 2026 chordnet contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHORDNET_TEXT_HPP_
#define CHORDNET_TEXT_HPP_

#include <string>
#include <vector>

namespace chordnet {

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string to_lower(const std::string& s);
bool iequals(const std::string& a, const std::string& b);

// Canonical form of one TSV cell: trimmed, NaN-ish markers emptied, float
// formatting artifacts of integer values ("18.0") stripped.
std::string canonicalize_cell(const std::string& raw);

// Fixed 12-significant-digit rendering used by every CSV/JSON emitter, so
// that identical runs produce identical bytes.
std::string format_double(double v);

// Minimal CSV quoting: quote only when the field contains , " or newline.
std::string csv_field(const std::string& s);

// JSON string escaping (control characters, quotes, backslash).
std::string json_escape(const std::string& s);

}  // namespace chordnet

#endif  // CHORDNET_TEXT_HPP_
