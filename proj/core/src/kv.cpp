#include "csbm/kv.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace csbm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KvRecord read_kv(std::istream& in) {
  KvRecord kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("kv record: expected key=value, got: " + line);
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

KvRecord read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_kv(in);
}

void write_kv_file(const std::string& path, const KvRecord& kv) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
}

const std::string& kv_get(const KvRecord& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw std::runtime_error("kv record: missing key '" + key + "'");
  return it->second;
}

std::string kv_get_or(const KvRecord& kv, const std::string& key,
                      const std::string& fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

}  // namespace csbm
