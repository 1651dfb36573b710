#include "gridcycles/perms.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridcycles {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n == 0) throw std::invalid_argument("permutation: length must be >= 1");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : entries_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation: entry " + std::to_string(v) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    if (seen[static_cast<size_t>(v - 1)]) {
      throw std::invalid_argument("permutation: repeated entry " + std::to_string(v));
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("permutation: empty text");
  std::vector<int> entries;
  if (text.find(',') != std::string::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      std::string token = text.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("permutation: bad entry \"" + token + "\"");
      }
      if (used != token.size()) {
        throw std::invalid_argument("permutation: bad entry \"" + token + "\"");
      }
      entries.push_back(value);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("permutation: digit form allows only 1-9, got \"" +
                                    text + "\"");
      }
      entries.push_back(c - '0');
    }
  }
  return Permutation(std::move(entries));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : entries_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(entries_[i]);
    }
  }
  return out;
}

Permutation theta(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out(static_cast<size_t>(n), 0);
  const std::vector<int>& s = pi.entries();
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(s[static_cast<size_t>(i)] - 1)] =
        s[static_cast<size_t>((i + 1) % n)];
  }
  return Permutation(std::move(out));
}

bool is_cyclic(const Permutation& pi) {
  int cur = 1;
  int steps = 0;
  do {
    cur = pi.at(cur);
    ++steps;
  } while (cur != 1);
  return steps == pi.size();
}

std::vector<int> peaks(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    int left = i == 1 ? 0 : pi.at(i - 1);
    int right = i == n ? 0 : pi.at(i + 1);
    if (left < pi.at(i) && pi.at(i) > right) out.push_back(i);
  }
  return out;
}

std::vector<int> valleys(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    int left = i == 1 ? n + 1 : pi.at(i - 1);
    int right = i == n ? n + 1 : pi.at(i + 1);
    if (left > pi.at(i) && pi.at(i) < right) out.push_back(i);
  }
  return out;
}

namespace detail {

namespace {

// Is the run over 1-based positions lo+1..hi monotone in the direction of
// segment index `seg` (0-based)? Entries are distinct, so strictness is free.
bool run_ok(std::span<const int> a, bool minus, int lo, int hi) {
  for (int i = lo; i + 1 < hi; ++i) {
    bool bad = minus ? a[static_cast<size_t>(i)] < a[static_cast<size_t>(i + 1)]
                     : a[static_cast<size_t>(i)] > a[static_cast<size_t>(i + 1)];
    if (bad) return false;
  }
  return true;
}

void enumerate_rec(std::span<const int> a, const Signature& sigma, int seg,
                   std::vector<int>& bounds,
                   const std::function<void(std::span<const int>)>& emit) {
  const int n = static_cast<int>(a.size());
  const int k = sigma.size();
  const int prev = bounds.back();
  const bool minus = sigma.is_minus(seg);
  if (seg == k - 1) {
    if (run_ok(a, minus, prev, n)) {
      bounds.push_back(n);
      emit(std::span<const int>(bounds));
      bounds.pop_back();
    }
    return;
  }
  for (int e = prev; e <= n; ++e) {
    if (e >= prev + 2) {
      // Extending the segment by one position; only the new adjacency needs
      // checking, and once it fails every longer extension fails too.
      bool bad = minus ? a[static_cast<size_t>(e - 2)] < a[static_cast<size_t>(e - 1)]
                       : a[static_cast<size_t>(e - 2)] > a[static_cast<size_t>(e - 1)];
      if (bad) break;
    }
    bounds.push_back(e);
    enumerate_rec(a, sigma, seg + 1, bounds, emit);
    bounds.pop_back();
  }
}

}  // namespace

void segmentations_span(std::span<const int> one_line, const Signature& sigma,
                        const std::function<void(std::span<const int>)>& emit) {
  std::vector<int> bounds;
  bounds.reserve(static_cast<size_t>(sigma.size() + 1));
  bounds.push_back(0);
  enumerate_rec(one_line, sigma, 0, bounds, emit);
}

long count_segmentations_span(std::span<const int> one_line,
                              const Signature& sigma) {
  long count = 0;
  segmentations_span(one_line, sigma, [&](std::span<const int>) { ++count; });
  return count;
}

bool in_class_span(std::span<const int> one_line, const Signature& sigma) {
  const int n = static_cast<int>(one_line.size());
  int pos = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (pos == n) break;
    ++pos;  // a singleton extends any run
    const bool minus = sigma.is_minus(i);
    while (pos < n) {
      bool extends = minus ? one_line[static_cast<size_t>(pos - 1)] >
                                 one_line[static_cast<size_t>(pos)]
                           : one_line[static_cast<size_t>(pos - 1)] <
                                 one_line[static_cast<size_t>(pos)];
      if (!extends) break;
      ++pos;
    }
  }
  return pos == n;
}

bool admits_boundaries(std::span<const int> one_line, const Signature& sigma,
                       std::span<const int> boundaries) {
  const int n = static_cast<int>(one_line.size());
  const int k = sigma.size();
  if (static_cast<int>(boundaries.size()) != k + 1 || boundaries[0] != 0 ||
      boundaries[static_cast<size_t>(k)] != n) {
    throw std::invalid_argument("admits_boundaries: malformed boundary sequence");
  }
  for (int i = 0; i < k; ++i) {
    int lo = boundaries[static_cast<size_t>(i)];
    int hi = boundaries[static_cast<size_t>(i + 1)];
    if (lo > hi || lo < 0 || hi > n) {
      throw std::invalid_argument("admits_boundaries: malformed boundary sequence");
    }
    if (!run_ok(one_line, sigma.is_minus(i), lo, hi)) return false;
  }
  return true;
}

}  // namespace detail

std::vector<Segmentation> segmentations(const Permutation& pi,
                                        const Signature& sigma) {
  std::vector<Segmentation> out;
  detail::segmentations_span(std::span<const int>(pi.entries()), sigma,
                             [&](std::span<const int> bounds) {
                               out.push_back(Segmentation{
                                   std::vector<int>(bounds.begin(), bounds.end())});
                             });
  return out;
}

long count_segmentations(const Permutation& pi, const Signature& sigma) {
  return detail::count_segmentations_span(std::span<const int>(pi.entries()), sigma);
}

bool in_class(const Permutation& pi, const Signature& sigma) {
  return detail::in_class_span(std::span<const int>(pi.entries()), sigma);
}

bool in_class_exhaustive(const Permutation& pi, const Signature& sigma) {
  return count_segmentations(pi, sigma) > 0;
}

}  // namespace gridcycles
