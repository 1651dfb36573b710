#pragma once

#include <optional>
#include <vector>

#include "gridcycles/oracle.hpp"
#include "gridcycles/signature.hpp"

namespace gridcycles {

enum class CounterKind { formula, oracle };

// Partition of the input signatures by equality of cyclic-count sequences
// over n = n_min..n_max (full), and over the same range restricted to
// n != 2 mod 4 (weak). Classes list indices into `signatures` and are ordered
// by first member; the weak partition always coarsens the full one.
struct EquivalenceReport {
  int n_min = 3;
  int n_max = 0;
  CounterKind counter = CounterKind::oracle;
  std::vector<Signature> signatures;
  std::vector<std::vector<ExactInt>> counts;  // [signature][n - n_min]
  std::vector<std::vector<int>> full_classes;
  std::vector<std::vector<int>> weak_classes;

  struct PairDisagreement {
    int a = 0;
    int b = 0;
    std::optional<int> first_n;  // minimal disagreeing n, if any
  };
  std::vector<PairDisagreement> disagreements;  // all pairs a < b
};

// Groups signatures by their count sequences over 3..n_max. The formula
// counter is only valid for the eight length-3 signatures; indices 1 and 2
// still draw their sequence from the oracle there, because the printed
// closed forms for them do not count the class.
EquivalenceReport classify(const std::vector<Signature>& signatures, int n_max,
                           CounterKind counter, const OracleBudget& budget = {});

// For every signature of length 2..k_max and every n in 3..n_max with
// n != 2 mod 4, compares the class count against the complement signature's.
std::vector<VerificationRecord> conjecture_complement(
    int k_max, int n_max, const OracleBudget& budget = {});

// For each k <= k_max compares the two alternating signatures' count
// sequences over 3..n_max (even k is implied by reversal and checked anyway).
std::vector<VerificationRecord> conjecture_alternating(
    int k_max, int n_max, const OracleBudget& budget = {});

}  // namespace gridcycles
