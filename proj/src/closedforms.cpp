#include "gridcycles/closedforms.hpp"

#include <stdexcept>
#include <string>

#include "gridcycles/words.hpp"

namespace gridcycles {

ExactInt unimodal_cycle_count(int n) {
  if (n < 1) throw std::invalid_argument("unimodal_cycle_count: n must be >= 1");
  return lyndon_odd_count(2, n, Signature("+-"));
}

ExactInt unimodal_peak_count(int n, int i) {
  if (n < 1) throw std::invalid_argument("unimodal_peak_count: n must be >= 1");
  if (i < 1 || i > n) {
    throw std::invalid_argument("unimodal_peak_count: position must lie in [1, n]");
  }
  ExactInt sum = 0;
  for (int j = 1; j <= i - 1; ++j) {
    ExactInt term = lyndon_density_count(n, j);
    if ((i + j + 1) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (n % 2 == 0) {
    // Correction over even k in [2, i) with n + k + 2 divisible by 4. The
    // k = 0 slot is excluded so that the count at position 1 is always zero;
    // this changes nothing for n > 2 since a constant half-length word is
    // primitive only at length 1.
    ExactInt correction = 0;
    for (int k = 2; k < i; k += 2) {
      if ((n + k + 2) % 4 == 0) correction += lyndon_density_count(n / 2, k / 2);
    }
    if (i % 2 == 1) {
      sum += correction;
    } else {
      sum -= correction;
    }
  }
  return sum;
}

ExactInt class_count_formula(int index, int n, FormulaVariant variant) {
  if (index < 1 || index > 8) {
    throw std::invalid_argument("class_count_formula: index must lie in [1, 8]");
  }
  if (variant == FormulaVariant::exact_descents_interpretation && index > 2) {
    throw std::invalid_argument(
        "class_count_formula: the exact-descents reading applies only to "
        "indices 1 and 2");
  }
  const int min_n = (index == 3 || index == 4) ? 3 : 2;
  if (n < min_n) {
    throw std::invalid_argument("class_count_formula: the sigma_" +
                                std::to_string(index) +
                                " closed form requires n >= " +
                                std::to_string(min_n));
  }
  const Signature sigma = Signature::from_index(index);
  switch (index) {
    case 1:
      return lyndon_count(3, n) - (n + 1) * lyndon_count(2, n);
    case 2:
      return star_count(3, n, sigma) -
             (n + 1) * star_count(2, n, Signature("--"));
    case 3:
    case 4:
      return exact_div(star_count(3, n, sigma), 4,
                       "class_count_formula: quarter of the star count");
    case 5:
    case 7: {
      ExactInt total = exact_div(star_count(3, n, sigma), 2,
                                 "class_count_formula: half of the star count");
      for (int i = 2; i <= n - 1; ++i) total -= i * unimodal_peak_count(n, i);
      return total;
    }
    case 6:
    case 8: {
      ExactInt total = exact_div(star_count(3, n, sigma), 2,
                                 "class_count_formula: half of the star count");
      for (int i = 2; i <= n - 1; ++i) {
        total -= (n - i + 1) * unimodal_peak_count(n, i);
      }
      return total;
    }
    default:
      throw std::logic_error("class_count_formula: unreachable");
  }
}

}  // namespace gridcycles
