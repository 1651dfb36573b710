#pragma once

#include <string>
#include <vector>

namespace gridcycles {

struct OeisHit {
  std::string id;    // "A000048"
  std::string name;  // sequence title
};

// Outcome of a lookup. Transport and parse failures are carried as data
// ("error" status, message, and the raw body when one was received); only
// precondition violations throw.
struct OeisResult {
  std::string status;  // "ok" | "not-queried" | "error"
  std::string error;
  std::string raw_body;
  std::vector<OeisHit> hits;
};

// Lookup endpoint: GRIDCYCLES_OEIS_URL if set, else the public site.
std::string oeis_base_url();

// GET <base>/search?q=<t1>,<t2>,...&fmt=json and extract identifier/name
// pairs. Requires at least 4 terms (std::invalid_argument otherwise). With
// enable_network false, returns a "not-queried" document without touching
// the network.
OeisResult oeis_lookup(const std::vector<std::string>& terms,
                       bool enable_network);

}  // namespace gridcycles
