#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace csbm {

// Flat key-value records: one "key=value" per line, '#' starts a comment.
using KvRecord = std::map<std::string, std::string>;

KvRecord read_kv(std::istream& in);
KvRecord read_kv_file(const std::string& path);
void write_kv_file(const std::string& path, const KvRecord& kv);

const std::string& kv_get(const KvRecord& kv, const std::string& key);
std::string kv_get_or(const KvRecord& kv, const std::string& key,
                      const std::string& fallback);

}  // namespace csbm
