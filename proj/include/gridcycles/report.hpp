#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gridcycles {

enum class OutputFormat { json, csv, plain };

// Accepts "json", "csv", "plain"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

// One machine-readable result document. The JSON rendering is canonical:
// {meta, payload, provenance} with sorted keys and stable indentation, so
// identical inputs yield byte-identical output. CSV and plain are
// projections of the payload rows through the stable column list; all three
// agree on every value.
struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<nlohmann::json> rows;  // flat records; big counts as strings
  nlohmann::json extras = nlohmann::json::object();  // payload beyond the rows

  nlohmann::json document() const;
  std::string render(OutputFormat format) const;
};

// Rendering from an already-assembled document (used by the cache path).
std::string render_document(const nlohmann::json& document, OutputFormat format);

}  // namespace gridcycles
