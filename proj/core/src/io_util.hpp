#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace docclust::detail {

/// Whole-file read; throws Error(UnreadableFile).
std::string read_text_file(const std::filesystem::path& path);

/// Writes bytes verbatim (creating parent directories); throws Error(WriteFailed).
void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// Shortest form that parses back to exactly `value` ("%.17g"-safe).
std::string format_double(double value);

/// `value` at `digits` significant digits, locale independent.
std::string format_significant(double value, int digits);

/// Half-up rounding to two decimals, printed with exactly two decimals.
std::string format_percent(double value);

/// Locale-independent strict parse; throws Error(ParseError).
double parse_double(std::string_view text);
std::size_t parse_size(std::string_view text);

/// RFC 4180 field quoting (only when needed).
std::string csv_escape(std::string_view field);

/// Splits a CSV document into records of fields. Handles quoted fields with
/// embedded commas, quotes and newlines. Throws Error(ParseError).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace docclust::detail
