// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#include "kv.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace exactcur::kv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void fail(const Entry& e, const std::string& msg) {
  throw ConfigError(e.line, e.key,
                    "line " + std::to_string(e.line) + ", field '" + e.key + "': " + msg);
}

std::vector<Entry> parse(const std::string& text) {
  std::vector<Entry> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "", "line " + std::to_string(lineno) + ": expected key=value");
    Entry e{lineno, trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (e.key.empty())
      throw ConfigError(lineno, "", "line " + std::to_string(lineno) + ": empty key");
    out.push_back(std::move(e));
  }
  return out;
}

long long to_int(const Entry& e) {
  long long v = 0;
  const auto* first = e.value.data();
  const auto* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || e.value.empty()) fail(e, "expected an integer");
  return v;
}

std::int64_t to_count(const Entry& e) {
  const long long v = to_int(e);
  if (v < 1) fail(e, "expected a positive count");
  return v;
}

std::uint64_t to_u64(const Entry& e) {
  std::uint64_t v = 0;
  const auto* first = e.value.data();
  const auto* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || e.value.empty())
    fail(e, "expected a nonnegative integer");
  return v;
}

double to_double(const Entry& e) {
  if (e.value.empty()) fail(e, "expected a number");
  char* end = nullptr;
  const double v = std::strtod(e.value.c_str(), &end);
  if (end != e.value.c_str() + e.value.size()) fail(e, "expected a number");
  return v;
}

bool to_bool(const Entry& e) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  fail(e, "expected true or false");
}

std::vector<std::string> to_list(const Entry& e) {
  std::vector<std::string> out;
  std::istringstream in(e.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(e, "empty list item");
    out.push_back(item);
  }
  if (out.empty()) fail(e, "empty list");
  return out;
}

std::vector<std::int64_t> to_count_list(const Entry& e) {
  std::vector<std::int64_t> out;
  for (const auto& item : to_list(e)) out.push_back(to_count(Entry{e.line, e.key, item}));
  return out;
}

}  // namespace exactcur::kv
