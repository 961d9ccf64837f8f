#pragma once

// Report serialization: versioned JSON (sorted keys), CSV and a plain table.

#include <string>

#include "qcong/runner.hpp"

namespace qcong {

enum class Format { table, json, csv };

/// Throws InvalidArgument for anything but table, json or csv.
Format parse_format(const std::string& s);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);
std::string to_table(const Report& report);
std::string render(const Report& report, Format format);

/// Parses a JSON report. Throws InvalidArgument on malformed input.
Report report_from_json(const std::string& text);

}  // namespace qcong
