// exactcur - exact CUR decompositions by column and row selection
// SPDX-License-Identifier: Apache-2.0

#ifndef EXACTCUR_SRC_KV_HPP
#define EXACTCUR_SRC_KV_HPP

// key=value text blocks shared by experiment configs and model specs.

#include <cstdint>
#include <string>
#include <vector>

#include "exactcur/error.hpp"

namespace exactcur::kv {

struct Entry {
  std::size_t line = 0;
  std::string key;
  std::string value;
};

/// One `key = value` per line; `#` starts a comment. Keys are not deduplicated.
std::vector<Entry> parse(const std::string& text);

long long to_int(const Entry& e);
std::int64_t to_count(const Entry& e);  // >= 1
std::uint64_t to_u64(const Entry& e);
double to_double(const Entry& e);
bool to_bool(const Entry& e);
std::vector<std::int64_t> to_count_list(const Entry& e);
std::vector<std::string> to_list(const Entry& e);

[[noreturn]] void fail(const Entry& e, const std::string& msg);

}  // namespace exactcur::kv

#endif
