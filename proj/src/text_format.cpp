#include "liecat/text_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "liecat/errors.hpp"

namespace liecat::text {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidSpec, "line " + std::to_string(line_no) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw Error(ErrorKind::InvalidSpec, "line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, std::string(trim(line.substr(eq + 1)))).second)
      throw Error(ErrorKind::InvalidSpec, "duplicate key '" + key + "'");
  }
  return out;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::InvalidSpec, "not a decimal number: '" + std::string(text) + "'");
  if (!std::isfinite(value))
    throw Error(ErrorKind::InvalidSpec, "non-finite number: '" + std::string(text) + "'");
  return value;
}

int parse_count(std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw Error(ErrorKind::InvalidSpec, "not a non-negative integer: '" + std::string(text) + "'");
  return value;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  text = trim(text);
  if (text.empty()) return values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return values;
}

Vector parse_vector(std::string_view text) {
  const auto values = parse_list(text);
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_real(values[i]);
  }
  return out;
}

std::string format_vector(const Vector& values) {
  return format_list(std::vector<double>(values.data(), values.data() + values.size()));
}

}  // namespace liecat::text
