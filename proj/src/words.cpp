#include "gridcycles/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gridcycles {

Word::Word(std::vector<int> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_(alphabet_size) {
  if (alphabet_ < 2) throw std::invalid_argument("word: alphabet size must be >= 2");
  if (letters_.empty()) throw std::invalid_argument("word: length must be >= 1");
  for (int c : letters_) {
    if (c < 0 || c >= alphabet_) {
      throw std::invalid_argument("word: letter " + std::to_string(c) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_));
    }
  }
}

Word Word::parse(const std::string& digits, int alphabet_size) {
  if (alphabet_size > 9) {
    throw std::invalid_argument("word: digit form limited to alphabets of size <= 9");
  }
  std::vector<int> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("word: non-digit character in \"" + digits + "\"");
    }
    letters.push_back(c - '0');
  }
  return Word(std::move(letters), alphabet_size);
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (int c : letters_) out.push_back(static_cast<char>('0' + c));
  return out;
}

bool Word::operator<(const Word& other) const {
  return letters_ < other.letters_;
}

namespace {

// Minimal period of `w`: smallest p dividing the length with w[i] == w[i % p].
int minimal_period(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return p;
  }
  return n;
}

}  // namespace

bool is_primitive(const Word& s) {
  return minimal_period(s.letters()) == s.size();
}

std::vector<long> evaluation(const Word& s) {
  std::vector<long> counts(static_cast<size_t>(s.alphabet_size()), 0);
  for (int c : s.letters()) ++counts[static_cast<size_t>(c)];
  return counts;
}

long o_sigma(const Signature& sigma, const Word& s) {
  if (s.alphabet_size() != sigma.size()) {
    throw std::invalid_argument("o_sigma: alphabet size " +
                                std::to_string(s.alphabet_size()) +
                                " does not match signature length " +
                                std::to_string(sigma.size()));
  }
  long count = 0;
  for (int c : s.letters()) {
    if (sigma.is_minus(c)) ++count;
  }
  return count;
}

Necklace canonicalize(const Word& s) {
  const std::vector<int>& w = s.letters();
  const int n = static_cast<int>(w.size());
  // Doubling scan: compare every rotation against the best so far.
  std::vector<int> doubled(w);
  doubled.insert(doubled.end(), w.begin(), w.end());
  int best = 0;
  for (int start = 1; start < n; ++start) {
    for (int i = 0; i < n; ++i) {
      int a = doubled[static_cast<size_t>(start + i)];
      int b = doubled[static_cast<size_t>(best + i)];
      if (a != b) {
        if (a < b) best = start;
        break;
      }
    }
  }
  std::vector<int> canonical(doubled.begin() + best, doubled.begin() + best + n);
  int root = minimal_period(canonical);
  return Necklace{Word(std::move(canonical), s.alphabet_size()), root};
}

namespace {

// Cattell-Ruskey-Sawada successor recursion. Visits prenecklace extensions;
// a full-length prefix is a necklace iff its longest-Lyndon-prefix length p
// divides n, and primitive iff p == n.
struct FkmGenerator {
  int k = 0;
  int n = 0;
  bool lyndon_only = false;
  std::vector<int> a;  // a[1..n], a[0] sentinel
  const std::function<void(const std::vector<int>&, int)>* emit = nullptr;

  void run() {
    a.assign(static_cast<size_t>(n + 1), 0);
    gen(1, 1);
  }

  void gen(int t, int p) {
    if (t > n) {
      if (lyndon_only ? (p == n) : (n % p == 0)) {
        (*emit)(a, p);
      }
      return;
    }
    a[static_cast<size_t>(t)] = a[static_cast<size_t>(t - p)];
    gen(t + 1, p);
    for (int j = a[static_cast<size_t>(t - p)] + 1; j < k; ++j) {
      a[static_cast<size_t>(t)] = j;
      gen(t + 1, t);
    }
  }
};

void fkm_visit(int k, int n, bool lyndon_only,
               const std::function<void(const std::vector<int>&, int)>& emit) {
  if (k < 2) throw std::invalid_argument("necklace generation: k must be >= 2");
  if (n < 1) throw std::invalid_argument("necklace generation: n must be >= 1");
  FkmGenerator g;
  g.k = k;
  g.n = n;
  g.lyndon_only = lyndon_only;
  g.emit = &emit;
  g.run();
}

}  // namespace

void for_each_necklace(int k, int n, NecklaceFilter filter,
                       const std::function<void(const Necklace&)>& visit) {
  fkm_visit(k, n, filter == NecklaceFilter::primitive,
            [&](const std::vector<int>& a, int p) {
              std::vector<int> letters(a.begin() + 1, a.end());
              visit(Necklace{Word(std::move(letters), k), p});
            });
}

std::vector<Necklace> generate_necklaces(int k, int n, NecklaceFilter filter) {
  std::vector<Necklace> out;
  for_each_necklace(k, n, filter, [&](const Necklace& nl) { out.push_back(nl); });
  return out;
}

void for_each_star_necklace(int k, int n, const Signature& sigma,
                            const std::function<void(const Necklace&)>& visit) {
  if (sigma.size() != k) {
    throw std::invalid_argument("star necklaces: signature length must equal k");
  }
  for_each_necklace(k, n, NecklaceFilter::primitive, visit);
  if (n % 2 == 0) {
    // Squares of odd-parity primitive roots of half length. The square of a
    // least rotation is the least rotation of the square.
    fkm_visit(k, n / 2, /*lyndon_only=*/true,
              [&](const std::vector<int>& a, int) {
                long parity = 0;
                for (int i = 1; i <= n / 2; ++i) {
                  if (sigma.is_minus(a[static_cast<size_t>(i)])) ++parity;
                }
                if (parity % 2 == 0) return;
                std::vector<int> letters;
                letters.reserve(static_cast<size_t>(n));
                letters.insert(letters.end(), a.begin() + 1, a.end());
                letters.insert(letters.end(), a.begin() + 1, a.end());
                visit(Necklace{Word(std::move(letters), k), n / 2});
              });
  }
}

std::vector<Necklace> generate_star_necklaces(int k, int n,
                                              const Signature& sigma) {
  std::vector<Necklace> out;
  for_each_star_necklace(k, n, sigma,
                         [&](const Necklace& nl) { out.push_back(nl); });
  return out;
}

std::vector<Necklace> necklaces_by_grouping(int k, int n) {
  if (k < 2 || n < 1) throw std::invalid_argument("grouping: need k >= 2, n >= 1");
  std::set<std::vector<int>> canonicals;
  std::vector<int> word(static_cast<size_t>(n), 0);
  while (true) {
    canonicals.insert(canonicalize(Word(word, k)).canonical.letters());
    int i = n - 1;
    while (i >= 0 && word[static_cast<size_t>(i)] == k - 1) {
      word[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++word[static_cast<size_t>(i)];
  }
  std::vector<Necklace> out;
  out.reserve(canonicals.size());
  for (const auto& letters : canonicals) {
    out.push_back(Necklace{Word(letters, k), minimal_period(letters)});
  }
  return out;
}

ExactInt lyndon_count(int k, int n) {
  if (n < 1) throw std::invalid_argument("lyndon_count: n must be >= 1");
  if (k < 2) throw std::invalid_argument("lyndon_count: k must be >= 2");
  ExactInt sum = 0;
  for (long d : divisors(n)) {
    sum += moebius(d) * pow_int(k, n / d);
  }
  return exact_div(sum, n, "lyndon_count");
}

ExactInt lyndon_density_count(int n, int ones) {
  if (n < 1) throw std::invalid_argument("lyndon_density_count: n must be >= 1");
  if (ones < 0 || ones > n) {
    throw std::invalid_argument("lyndon_density_count: ones must lie in [0, n]");
  }
  long g = ones == 0 ? n : std::gcd(static_cast<long>(n), static_cast<long>(ones));
  ExactInt sum = 0;
  for (long d : divisors(g)) {
    sum += moebius(d) * binomial(n / d, ones / d);
  }
  return exact_div(sum, n, "lyndon_density_count");
}

ExactInt lyndon_odd_count_enumerated(int k, int n, const Signature& sigma) {
  if (sigma.size() != k) {
    throw std::invalid_argument("lyndon_odd_count: signature length must equal k");
  }
  long long count = 0;
  fkm_visit(k, n, /*lyndon_only=*/true, [&](const std::vector<int>& a, int) {
    long parity = 0;
    for (int i = 1; i <= n; ++i) {
      if (sigma.is_minus(a[static_cast<size_t>(i)])) ++parity;
    }
    if (parity % 2 == 1) ++count;
  });
  return count;
}

ExactInt lyndon_odd_count(int k, int n, const Signature& sigma) {
  // Closed-form shortcut proven only for a single minus letter on three
  // letters at odd length >= 3: exactly half of all primitive necklaces
  // qualify. (At n = 1 the Moebius sum underlying the halving argument does
  // not vanish, and indeed 2 of the 3 words would be claimed.)
  if (k == 3 && n >= 3 && n % 2 == 1 && sigma.size() == 3 &&
      sigma.minus_count() == 1) {
    return exact_div(lyndon_count(3, n), 2, "lyndon_odd_count half-count");
  }
  return lyndon_odd_count_enumerated(k, n, sigma);
}

ExactInt star_count(int k, int n, const Signature& sigma) {
  ExactInt total = lyndon_count(k, n);
  if (n % 2 == 0) total += lyndon_odd_count(k, n / 2, sigma);
  return total;
}

}  // namespace gridcycles
