#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gridcycles {

// Sign pattern over {+,-} of length k >= 2: the grid-class descriptor.
// Sign positions are 0-based, matching the letters of the word alphabet.
class Signature {
 public:
  // Construct from a literal such as "+-+".
  // Throws std::invalid_argument on bad characters or length < 2.
  explicit Signature(std::string signs);

  // The eight length-3 signatures by table index 1..8:
  //   1:+++  2:---  3:+-+  4:-+-  5:++-  6:+--  7:-++  8:--+
  static Signature from_index(int index);

  // Accepts either a sign literal ("+-+") or an index form ("s3").
  static Signature parse(const std::string& text);

  int size() const { return static_cast<int>(signs_.size()); }
  bool is_minus(int i) const { return signs_[static_cast<size_t>(i)] == '-'; }
  bool is_plus(int i) const { return !is_minus(i); }
  int minus_count() const;

  // The sign literal, e.g. "+-+". Reports always echo this form.
  const std::string& str() const { return signs_; }

  // Table index 1..8 when this is one of the eight length-3 signatures.
  std::optional<int> table_index() const;

  bool operator==(const Signature& other) const = default;
  bool operator<(const Signature& other) const { return signs_ < other.signs_; }

 private:
  std::string signs_;
};

// Reversal sigma^{k-1} ... sigma^0 and sign-flip complement; both involutions.
Signature reverse_signature(const Signature& sigma);
Signature complement_signature(const Signature& sigma);

// Partition of the sign positions {0..k-1} into the minus set and plus set.
struct SignatureParity {
  std::vector<int> t_minus;
  std::vector<int> t_plus;
};
SignatureParity parity(const Signature& sigma);

// All 2^k signatures of length k in lexicographic order of their literals.
std::vector<Signature> all_signatures(int k);

}  // namespace gridcycles
