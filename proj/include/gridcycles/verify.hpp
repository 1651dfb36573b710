#pragma once

#include <string>
#include <vector>

#include "gridcycles/oracle.hpp"

namespace gridcycles {

// What to check. `c3_c8` reproduces the six closed forms against the oracle
// (plus the term-wise equalities c3=c4, c5=c7, c6=c8); `c12_report` compares
// the sigma_1/sigma_2 printed forms against both the class count (annotated
// known discrepancy) and the exactly-two-descents/-ascents counts (exact).
enum class VerifyTarget { bijection, refined, lemmas, c3_c8, c12_report, all };

// Accepts "bijection", "refined", "lemmas", "c3..c8", "c12_report", "all".
VerifyTarget parse_verify_target(const std::string& name);
std::string verify_target_name(VerifyTarget target);

struct VerifySummary {
  std::vector<VerificationRecord> records;
  bool complete = true;     // false when the budget stopped the run early
  std::string stop_reason;  // set when incomplete

  // True iff every record not annotated as a known discrepancy matches.
  bool passed() const;
};

// Runs the selected checks. Oracle-backed claims range over n up to n_max
// (the peak closed form additionally caps at 10); formula-only lemma checks
// use their own fixed ranges, cheap at any n_max. A budget_error inside a
// sweep yields a partial summary with complete = false instead of a throw.
VerifySummary run_verify(VerifyTarget target, int n_max,
                         const OracleBudget& budget = {});

}  // namespace gridcycles
