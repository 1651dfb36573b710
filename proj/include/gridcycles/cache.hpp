#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace gridcycles {

// On-disk store for canonical JSON documents, keyed by (command, canonical
// parameters, tool version). Disabled unless constructed with a directory.
// Writes are atomic (temp file + rename), so a reader never sees a partial
// entry. Verification commands never consult it.
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> load(const std::string& command,
                                  const nlohmann::json& parameters) const;
  void store(const std::string& command, const nlohmann::json& parameters,
             const std::string& document) const;

  // Stable entry filename for the key triple; exposed for tests.
  static std::string entry_name(const std::string& command,
                                const nlohmann::json& parameters);

 private:
  std::filesystem::path dir_;
};

}  // namespace gridcycles
