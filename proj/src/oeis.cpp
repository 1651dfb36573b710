#include "gridcycles/oeis.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace gridcycles {

namespace {

constexpr const char* kDefaultBaseUrl = "https://oeis.org";

std::string a_number(long number) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "A%06ld", number);
  return buf;
}

// Pulls identifier/name pairs out of a search response. The modern endpoint
// wraps hits in {"results": [...]}; be tolerant of a bare array and of a
// null results field (no matches).
bool extract_hits(const nlohmann::json& body, std::vector<OeisHit>& hits) {
  const nlohmann::json* results = nullptr;
  if (body.is_array()) {
    results = &body;
  } else if (body.is_object() && body.contains("results")) {
    if (body["results"].is_null()) return true;  // zero hits
    if (!body["results"].is_array()) return false;
    results = &body["results"];
  } else {
    return false;
  }
  for (const auto& entry : *results) {
    if (!entry.is_object()) return false;
    OeisHit hit;
    if (entry.contains("number") && entry["number"].is_number_integer()) {
      hit.id = a_number(entry["number"].get<long>());
    } else {
      return false;
    }
    hit.name = entry.value("name", "");
    hits.push_back(std::move(hit));
  }
  return true;
}

}  // namespace

std::string oeis_base_url() {
  const char* override_url = std::getenv("GRIDCYCLES_OEIS_URL");
  if (override_url != nullptr && *override_url != '\0') return override_url;
  return kDefaultBaseUrl;
}

OeisResult oeis_lookup(const std::vector<std::string>& terms,
                       bool enable_network) {
  if (terms.empty()) {
    throw std::invalid_argument("oeis: no terms supplied");
  }
  if (terms.size() < 4) {
    throw std::invalid_argument(
        "oeis: need at least 4 terms for a meaningful lookup, got " +
        std::to_string(terms.size()));
  }
  OeisResult result;
  if (!enable_network) {
    result.status = "not-queried";
    result.error = "network access disabled; pass --enable-network to query";
    return result;
  }

  const std::string base = oeis_base_url();
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (base.rfind("https://", 0) == 0) {
    result.status = "error";
    result.error = "TLS support not built; set GRIDCYCLES_OEIS_URL to an "
                   "http:// endpoint";
    return result;
  }
#endif

  std::string query = "/search?q=";
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) query.push_back(',');
    query += terms[i];
  }
  query += "&fmt=json";

  httplib::Client client(base);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  client.set_follow_location(true);
  httplib::Result response = client.Get(query);
  if (!response) {
    result.status = "error";
    result.error = "transport failure: " + httplib::to_string(response.error());
    return result;
  }
  result.raw_body = response->body;
  if (response->status != 200) {
    result.status = "error";
    result.error = "unexpected HTTP status " + std::to_string(response->status);
    return result;
  }
  nlohmann::json body = nlohmann::json::parse(response->body, nullptr,
                                              /*allow_exceptions=*/false);
  if (body.is_discarded() || !extract_hits(body, result.hits)) {
    result.status = "error";
    result.error = "malformed response body";
    result.hits.clear();
    return result;
  }
  result.status = "ok";
  result.raw_body.clear();  // parsed fine; keep the document lean
  return result;
}

}  // namespace gridcycles
