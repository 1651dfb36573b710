#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridcycles/arith.hpp"
#include "gridcycles/perms.hpp"
#include "gridcycles/signature.hpp"

namespace gridcycles {

// Enumeration budget and parallelism. Results are identical for any
// parallel_shards value; sharding only spreads the work.
struct OracleBudget {
  int max_n = 11;
  int parallel_shards = 4;
};

// One checked claim: left and right values computed by independent routes.
struct VerificationRecord {
  std::string claim;
  std::string sigma;  // empty when not applicable
  int n = 0;
  std::optional<int> pos;                     // position parameter (i), if any
  std::optional<std::vector<long>> eval;      // evaluation tuple, if any
  ExactInt left;
  ExactInt right;
  bool known_discrepancy = false;  // annotated mismatches never fail a run
  std::string note;

  bool match() const { return left == right; }
};

// Streams every n-cycle exactly once, as the cycle map applied to each
// sequence starting with 1, tails in lexicographic order. Deterministic.
// Throws budget_error (with a cost estimate) when n exceeds the budget.
void for_each_cycle(int n, const OracleBudget& budget,
                    const std::function<void(const Permutation&)>& visit);

// Materialized variant; only sensible for small n.
std::vector<Permutation> enumerate_cycles(int n, const OracleBudget& budget = {});

// |{cyclic pi of length n : pi in the sigma-class}| by exhaustive scan.
// Works for any signature length k >= 2.
ExactInt count_cyclic_in_class(const Signature& sigma, int n,
                               const OracleBudget& budget = {});

// Total number of (cycle, sigma-segmentation) pairs over the class.
ExactInt segmentation_sum(const Signature& sigma, int n,
                          const OracleBudget& budget = {});

// Evaluation-refined two-sided check: left counts necklaces of the
// sigma-filtered family with the given evaluation, right counts cycles
// admitting the single segmentation whose boundaries are the partial sums.
VerificationRecord refined_bijection_check(const Signature& sigma, int n,
                                           const std::vector<long>& eval,
                                           const OracleBudget& budget = {});

// The complete sweep over every evaluation tuple of total n.
std::vector<VerificationRecord> refined_bijection_sweep(
    const Signature& sigma, int n, const OracleBudget& budget = {});

// Brute-force count of cyclic unimodal permutations with value n at
// position i. Operational definition is pi_i = n (peak statements coincide
// with it for n >= 3).
ExactInt oracle_unimodal_peak_count(int n, int i, const OracleBudget& budget = {});

// Counts of n-cycles with a given number of descents / ascents; these back
// the sigma_1/sigma_2 discrepancy report.
ExactInt count_cycles_with_descents(int n, int descents,
                                    const OracleBudget& budget = {});
ExactInt count_cycles_with_ascents(int n, int ascents,
                                   const OracleBudget& budget = {});

int descent_count(const Permutation& pi);
int ascent_count(const Permutation& pi);

}  // namespace gridcycles
