#pragma once

#include "gridcycles/arith.hpp"
#include "gridcycles/signature.hpp"

namespace gridcycles {

// Reading of the sigma_1/sigma_2 closed forms. Both modes evaluate the same
// printed expression; the mode records whether the value is being reported
// as printed or under the exactly-two-descents (resp. ascents) reading that
// enumeration supports. Only indices 1 and 2 accept a non-default mode.
enum class FormulaVariant { as_printed, exact_descents_interpretation };

// Number of cyclic unimodal permutations of length n, via the odd-parity
// necklace count for the two-block signature +-.
ExactInt unimodal_cycle_count(int n);

// Number of cyclic unimodal permutations with the maximum in position i
// (1 <= i <= n), by the alternating sum over binary density counts, with the
// even-n correction summing over even k < i with n + k + 2 divisible by 4.
ExactInt unimodal_peak_count(int n, int i);

// Closed-form count of cyclic permutations in the sigma_index class:
//   1: L3(n) - (n+1) L2(n)                      (as printed; see the
//   2: L3*(n;---) - (n+1) L2*(n;--)              discrepancy report)
//   3: L3*(n;+-+)/4        4: L3*(n;-+-)/4
//   5: L3*(n;++-)/2 - sum i*Lambda(n,i)          (i = 2..n-1)
//   6: L3*(n;+--)/2 - sum (n-i+1)*Lambda(n,i)
//   7, 8: as 5, 6 with the reversed signatures.
// Requires n >= 3 for indices 3 and 4 and n >= 2 otherwise; out-of-range n
// throws std::invalid_argument naming the violated hypothesis. Non-exact
// divisions throw std::logic_error.
ExactInt class_count_formula(int index, int n,
                             FormulaVariant variant = FormulaVariant::as_printed);

}  // namespace gridcycles
