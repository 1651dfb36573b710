#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gridcycles/arith.hpp"
#include "gridcycles/signature.hpp"

namespace gridcycles {

// A sequence over the alphabet {0..k-1}. The text form writes letters as
// contiguous digits ("0020112"), so it is limited to k <= 9; the alphabet size
// is always supplied separately and never inferred from the letters.
class Word {
 public:
  Word(std::vector<int> letters, int alphabet_size);
  static Word parse(const std::string& digits, int alphabet_size);

  int size() const { return static_cast<int>(letters_.size()); }
  int alphabet_size() const { return alphabet_; }
  int letter(int i) const { return letters_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<int>& letters() const { return letters_; }
  std::string str() const;

  bool operator==(const Word& other) const = default;
  bool operator<(const Word& other) const;

 private:
  std::vector<int> letters_;
  int alphabet_;
};

// Rotation class of a word, stored by its lexicographically least rotation.
// root_length is the length of the primitive root (the minimal period); it
// divides size() and equals size() exactly when the necklace is primitive.
struct Necklace {
  Word canonical;
  int root_length;

  bool primitive() const { return root_length == canonical.size(); }
  bool operator==(const Necklace& other) const = default;
};

// True iff the word is not the concatenation of r >= 2 copies of a shorter
// word.
bool is_primitive(const Word& s);

// Letter multiplicities (a_0, ..., a_{k-1}); entries sum to the length.
std::vector<long> evaluation(const Word& s);

// Number of letters of s lying in the minus positions of sigma. Requires the
// alphabet size of s to equal the signature length.
long o_sigma(const Signature& sigma, const Word& s);

// Lexicographically least rotation plus the primitive-root length. Idempotent.
Necklace canonicalize(const Word& s);

enum class NecklaceFilter { all, primitive };

// Successor-based (FKM-style) generation of necklaces of length n over k
// letters, in lexicographic order of the canonical representatives.
void for_each_necklace(int k, int n, NecklaceFilter filter,
                       const std::function<void(const Necklace&)>& visit);
std::vector<Necklace> generate_necklaces(int k, int n, NecklaceFilter filter);

// The sigma-filtered necklace family: all primitive necklaces of length n
// plus, for even n, the squares [q^2] of primitive q of length n/2 whose
// sigma-parity is odd. Odd n contributes no 2-periodic members.
void for_each_star_necklace(int k, int n, const Signature& sigma,
                            const std::function<void(const Necklace&)>& visit);
std::vector<Necklace> generate_star_necklaces(int k, int n,
                                              const Signature& sigma);

// Independent cross-check route: group all k^n words by rotation. Returns
// every necklace of length n exactly once, sorted by canonical word. Only
// intended for small n (<= 12 or so).
std::vector<Necklace> necklaces_by_grouping(int k, int n);

// Count of primitive necklaces of length n on k letters, by the Moebius
// formula (1/n) sum_{d|n} mu(d) k^{n/d}. The division is exact by
// construction; a remainder throws std::logic_error.
ExactInt lyndon_count(int k, int n);

// Count of binary primitive necklaces of length n with exactly `ones` ones,
// by (1/n) sum_{d | gcd(n, ones)} mu(d) C(n/d, ones/d) with gcd(n, 0) = n.
// Throws std::invalid_argument when ones is outside [0, n].
ExactInt lyndon_density_count(int n, int ones);

// Count of primitive necklaces of length n with odd sigma-parity. Defaults to
// generator enumeration; for k = 3, odd n and a single minus letter the value
// is lyndon_count(3, n) / 2 and that closed form is used directly.
ExactInt lyndon_odd_count(int k, int n, const Signature& sigma);

// Same count, always by generator enumeration (no closed-form shortcut).
ExactInt lyndon_odd_count_enumerated(int k, int n, const Signature& sigma);

// Size of the sigma-filtered family above: lyndon_count(k, n) plus, for even
// n, lyndon_odd_count(k, n/2, sigma).
ExactInt star_count(int k, int n, const Signature& sigma);

}  // namespace gridcycles
