#pragma once

// CSV and JSON forms of CodeRecord. CSV: comma-separated, header row,
// booleans as true/false, unset fields empty, LF line endings. The stable
// form drops runtime_ms so reruns are byte-identical.

#include <iosfwd>
#include <string>
#include <vector>

#include "bchlab/harness.hpp"

namespace bchlab {

std::vector<std::string> csv_columns(bool stable);

void write_csv(std::ostream& out, const std::vector<CodeRecord>& records, bool stable);
/// Reads what write_csv produced (either form). Throws std::runtime_error on malformed input.
std::vector<CodeRecord> read_csv(std::istream& in);

std::string to_json(const CodeRecord& record, bool stable);
std::string to_json(const std::vector<CodeRecord>& records, bool stable);
/// Accepts a single object or an array. Throws std::runtime_error on malformed input.
std::vector<CodeRecord> from_json(const std::string& text);

/// Multi-line human-readable rendering.
std::string describe(const CodeRecord& record);

}  // namespace bchlab
