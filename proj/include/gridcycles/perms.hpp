#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gridcycles/signature.hpp"

namespace gridcycles {

// A permutation of [n] in one-line notation. Positions and values are
// 1-based, as in all segmentations and peak/valley statements. The text form
// uses contiguous digits for n <= 9 ("268147953") and comma-separated values
// otherwise ("10,2,7,...").
class Permutation {
 public:
  // Validates that entries is a bijection on [n].
  explicit Permutation(std::vector<int> entries);
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int pos) const { return entries_[static_cast<size_t>(pos - 1)]; }
  const std::vector<int>& entries() const { return entries_; }
  std::string str() const;

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<int> entries_;
};

// Boundary sequence 0 = e_0 <= e_1 <= ... <= e_k = n witnessing membership.
struct Segmentation {
  std::vector<int> boundaries;

  bool operator==(const Segmentation& other) const = default;
};

// The cycle map: sends one-line pi to the cyclic permutation with cycle form
// (pi_1, ..., pi_n), written back in one-line notation.
Permutation theta(const Permutation& pi);

// True iff the permutation consists of a single n-cycle.
bool is_cyclic(const Permutation& pi);

// Positions i with pi_{i-1} < pi_i > pi_{i+1}, padding pi_0 = pi_{n+1} = 0.
std::vector<int> peaks(const Permutation& pi);
// Positions i with pi_{i-1} > pi_i < pi_{i+1}, padding pi_0 = pi_{n+1} = n+1.
// Note the padding deliberately differs from peaks.
std::vector<int> valleys(const Permutation& pi);

// All sigma-segmentations, in lexicographic order of (e_1, ..., e_{k-1}).
// Empty and singleton segments count as both increasing and decreasing.
std::vector<Segmentation> segmentations(const Permutation& pi,
                                        const Signature& sigma);
long count_segmentations(const Permutation& pi, const Signature& sigma);

// Membership in the sigma-class via a greedy maximal-run sweep.
bool in_class(const Permutation& pi, const Signature& sigma);
// Reference implementation: membership iff the segmentation list is
// non-empty. Kept independent of the sweep; the two must always agree.
bool in_class_exhaustive(const Permutation& pi, const Signature& sigma);

namespace detail {

// Span-level workhorses used by the exhaustive-enumeration hot loops.
// `one_line` holds the values pi_1..pi_n in 0-indexed storage.
bool in_class_span(std::span<const int> one_line, const Signature& sigma);
long count_segmentations_span(std::span<const int> one_line,
                              const Signature& sigma);
void segmentations_span(std::span<const int> one_line, const Signature& sigma,
                        const std::function<void(std::span<const int>)>& emit);
// Checks one fixed boundary sequence e_0..e_k (including both endpoints).
bool admits_boundaries(std::span<const int> one_line, const Signature& sigma,
                       std::span<const int> boundaries);

}  // namespace detail

}  // namespace gridcycles
