#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "homlp/error.hpp"
#include "json.hpp"

namespace homlp {

/// Operation name plus canonical arguments. Graph arguments are passed as
/// their expression text with whitespace removed.
struct InstanceKey {
  std::string op;
  nlohmann::ordered_json args = nlohmann::ordered_json::object();

  std::string text() const { return op + " " + args.dump(); }
};

inline std::string canonical_expression(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
  }
  return out;
}

inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string key_hash(const InstanceKey& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key.text())));
  return buf;
}

/// Directory of JSON records, one file per key hash. A record holds the key
/// text and the result text exactly as first produced.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, bool audit = false) : dir_(std::move(dir)), audit_(audit) {
    std::filesystem::create_directories(dir_);
  }

  std::optional<std::string> get(const InstanceKey& key) const {
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    auto rec = nlohmann::json::parse(ss.str(), nullptr, false);
    if (rec.is_discarded() || !rec.contains("key") || !rec.contains("result")) return std::nullopt;
    if (rec["key"].get<std::string>() != key.text()) return std::nullopt;  // hash collision
    return rec["result"].get<std::string>();
  }

  void put(const InstanceKey& key, const std::string& result) const {
    nlohmann::ordered_json rec;
    rec["key"] = key.text();
    rec["result"] = result;
    auto target = path(key);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << rec.dump() << '\n';
      if (!out) throw Error("cannot write cache record " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }

  /// Cached result, or `compute()` stored under `key`. In audit mode every
  /// tenth hit is recomputed and must match byte for byte.
  std::string fetch(const InstanceKey& key, const std::function<std::string()>& compute) {
    if (auto hit = get(key)) {
      ++hits_;
      if (audit_ && hits_ % 10 == 1) {
        ++audits_;
        if (compute() != *hit) throw Error("cache audit mismatch for " + key.text());
      }
      return *hit;
    }
    ++misses_;
    std::string fresh = compute();
    put(key, fresh);
    return fresh;
  }

  std::filesystem::path path(const InstanceKey& key) const { return dir_ / (key_hash(key) + ".json"); }
  long hits() const { return hits_; }
  long misses() const { return misses_; }
  long audits() const { return audits_; }

 private:
  std::filesystem::path dir_;
  bool audit_ = false;
  long hits_ = 0, misses_ = 0, audits_ = 0;
};

}  // namespace homlp
