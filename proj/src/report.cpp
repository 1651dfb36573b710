#include "gridcycles/report.hpp"

#include <sstream>
#include <stdexcept>

#include "gridcycles/version.hpp"

namespace gridcycles {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "plain") return OutputFormat::plain;
  throw std::invalid_argument("unknown format \"" + name +
                              "\" (expected json, csv, or plain)");
}

nlohmann::json Report::document() const {
  nlohmann::json payload;
  payload["columns"] = columns;
  payload["rows"] = rows;
  for (const auto& [key, value] : extras.items()) payload[key] = value;

  nlohmann::json per_row = nlohmann::json::array();
  for (const auto& row : rows) {
    per_row.push_back(row.contains("method") ? row.at("method")
                                             : nlohmann::json("n/a"));
  }
  nlohmann::json doc;
  doc["meta"] = {{"command", command},
                 {"parameters", parameters},
                 {"version", kVersion}};
  doc["payload"] = payload;
  doc["provenance"] = {{"per_row", per_row}};
  return doc;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string cell_text(const nlohmann::json& row, const std::string& column) {
  if (!row.contains(column)) return "";
  const nlohmann::json& value = row.at(column);
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_null()) return "";
  return value.dump();
}

std::string render_table(const nlohmann::json& payload, OutputFormat format) {
  std::vector<std::string> columns =
      payload.at("columns").get<std::vector<std::string>>();
  const nlohmann::json& rows = payload.at("rows");
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    for (size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out << ',';
      out << csv_escape(columns[c]);
    }
    out << '\n';
    for (const auto& row : rows) {
      for (size_t c = 0; c < columns.size(); ++c) {
        if (c > 0) out << ',';
        out << csv_escape(cell_text(row, columns[c]));
      }
      out << '\n';
    }
    return out.str();
  }

  // plain: space-aligned table, then any scalar payload extras.
  std::vector<size_t> widths(columns.size());
  for (size_t c = 0; c < columns.size(); ++c) widths[c] = columns[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line(columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
      line[c] = cell_text(row, columns[c]);
      widths[c] = std::max(widths[c], line[c].size());
    }
    cells.push_back(std::move(line));
  }
  auto put_line = [&](const std::vector<std::string>& line) {
    for (size_t c = 0; c < line.size(); ++c) {
      if (c > 0) out << "  ";
      out << line[c];
      if (c + 1 < line.size()) {
        out << std::string(widths[c] - line[c].size(), ' ');
      }
    }
    out << '\n';
  };
  put_line(columns);
  for (const auto& line : cells) put_line(line);
  for (const auto& [key, value] : payload.items()) {
    if (key == "columns" || key == "rows") continue;
    out << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_document(const nlohmann::json& document, OutputFormat format) {
  if (format == OutputFormat::json) return document.dump(2) + "\n";
  return render_table(document.at("payload"), format);
}

std::string Report::render(OutputFormat format) const {
  return render_document(document(), format);
}

}  // namespace gridcycles
