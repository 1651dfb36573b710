#pragma once

#include <stdexcept>
#include <string>

namespace gridcycles {

// Enumeration request over the configured budget. Carries a cost estimate in
// the message so callers can decide whether to raise the budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

class network_error : public std::runtime_error {
 public:
  explicit network_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gridcycles
