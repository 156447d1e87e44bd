#pragma once

#include <ogf/composita.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace ogf {

enum class Format { Plain, Csv, Json, Bfile };

std::optional<Format> parse_format(std::string_view name);

/// Triangle rendering. Plain centers the rows like a number triangle, csv
/// emits "n,k,value" lines with n outer, json is {"order": N, "rows": [...]}
/// with rationals as strings. Rationals never round; b-file output is not
/// defined for triangles and raises an error.
std::string render_triangle(const Composita& triangle, Format format);

/// Sequence rendering. Plain is one space-separated line, csv emits
/// "index,value", json is {"offset": o, "values": [...]}, bfile emits
/// "index value" lines and requires integer values.
std::string render_sequence(const std::vector<Rational>& values, long long offset,
                            Format format);

/// Write-temp-then-rename text output.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace ogf
