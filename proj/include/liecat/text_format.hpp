#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liecat/numerics.hpp"

namespace liecat::text {

/// `key = value` lines; `#` starts a comment; blank lines ignored.
/// Duplicate keys and lines without `=` throw InvalidSpec.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Comma-separated decimal list. Throws InvalidSpec on malformed or
/// non-finite entries.
std::vector<double> parse_list(std::string_view text);
Vector parse_vector(std::string_view text);
double parse_real(std::string_view text);
int parse_count(std::string_view text);

/// 17 significant digits; re-parses to the identical double.
std::string format_real(double value);
std::string format_list(const std::vector<double>& values);
std::string format_vector(const Vector& values);

}  // namespace liecat::text
