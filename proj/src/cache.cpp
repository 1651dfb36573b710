#include "gridcycles/cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gridcycles/version.hpp"

namespace gridcycles {

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) {
    out << ((hash >> shift) & 0xF);
  }
  return out.str();
}

}  // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    throw std::invalid_argument("cache: directory path must be non-empty");
  }
  std::filesystem::create_directories(dir_);
}

std::string Cache::entry_name(const std::string& command,
                              const nlohmann::json& parameters) {
  std::string material = command;
  material.push_back('\n');
  material += parameters.dump();
  material.push_back('\n');
  material += kVersion;
  return fnv1a_hex(material) + ".json";
}

std::optional<std::string> Cache::load(const std::string& command,
                                       const nlohmann::json& parameters) const {
  if (!enabled()) return std::nullopt;
  const std::filesystem::path path = dir_ / entry_name(command, parameters);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json entry;
  try {
    entry = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
  // Guard against hash collisions and stale tool versions.
  if (!entry.is_object() || entry.value("command", "") != command ||
      entry.value("version", "") != kVersion ||
      !entry.contains("parameters") || entry["parameters"] != parameters ||
      !entry.contains("document") || !entry["document"].is_string()) {
    return std::nullopt;
  }
  return entry["document"].get<std::string>();
}

void Cache::store(const std::string& command, const nlohmann::json& parameters,
                  const std::string& document) const {
  if (!enabled()) return;
  nlohmann::json entry;
  entry["command"] = command;
  entry["parameters"] = parameters;
  entry["version"] = kVersion;
  entry["document"] = document;

  const std::filesystem::path path = dir_ / entry_name(command, parameters);
  std::filesystem::path temp = path;
  // Unique per-writer temp name: concurrent processes may share a cache dir.
  temp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cache: cannot write " + temp.string());
    }
    out << entry.dump(2) << '\n';
  }
  std::filesystem::rename(temp, path);  // atomic publish
}

}  // namespace gridcycles
