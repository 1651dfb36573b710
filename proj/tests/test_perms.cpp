#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "gridcycles/oracle.hpp"
#include "gridcycles/perms.hpp"

using namespace gridcycles;

namespace {

std::set<std::vector<int>> boundary_set(const Permutation& pi,
                                        const Signature& sigma) {
  std::set<std::vector<int>> out;
  for (const auto& seg : segmentations(pi, sigma)) out.insert(seg.boundaries);
  return out;
}

}  // namespace

TEST_CASE("permutation parsing, validation and text form") {
  CHECK(Permutation::parse("268147953").entries() ==
        std::vector<int>{2, 6, 8, 1, 4, 7, 9, 5, 3});
  CHECK(Permutation::parse("268147953").str() == "268147953");
  const Permutation big = Permutation::parse("10,2,7,1,3,4,5,6,8,9");
  CHECK(big.size() == 10);
  CHECK(big.at(1) == 10);
  CHECK(big.str() == "10,2,7,1,3,4,5,6,8,9");
  CHECK(Permutation::parse(big.str()) == big);

  CHECK_THROWS_AS(Permutation::parse("122"), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(Permutation::parse("130"), std::invalid_argument);  // 0 entry
  CHECK_THROWS_AS(Permutation::parse("14"), std::invalid_argument);   // gap
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("2,x,1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
}

TEST_CASE("cycle map anchors") {
  CHECK(theta(Permutation::parse("165892437")).str() == "647385192");
  CHECK(theta(Permutation::parse("12")).str() == "21");
  CHECK(theta(Permutation::parse("123")).str() == "231");
  CHECK(theta(Permutation::parse("1")).str() == "1");
  // The image is always a single n-cycle.
  for (const char* text : {"165892437", "12", "123", "4321", "35142"}) {
    CHECK(is_cyclic(theta(Permutation::parse(text))));
  }
}

TEST_CASE("cyclicity detection") {
  CHECK(is_cyclic(Permutation::parse("231")));
  CHECK(is_cyclic(Permutation::parse("1")));
  CHECK(is_cyclic(Permutation::parse("21")));
  CHECK_FALSE(is_cyclic(Permutation::parse("213")));   // 3 fixed
  CHECK_FALSE(is_cyclic(Permutation::parse("123")));
  CHECK_FALSE(is_cyclic(Permutation::parse("2143")));  // two 2-cycles
}

TEST_CASE("peaks and valleys use asymmetric padding") {
  const Permutation pi = Permutation::parse("356894127");
  CHECK(peaks(pi) == std::vector<int>{5, 9});
  CHECK(valleys(pi) == std::vector<int>{1, 7});
  CHECK(peaks(Permutation::parse("12345")) == std::vector<int>{5});
  CHECK(valleys(Permutation::parse("12345")) == std::vector<int>{1});
  CHECK(peaks(Permutation::parse("54321")) == std::vector<int>{1});
  CHECK(valleys(Permutation::parse("54321")) == std::vector<int>{5});
  CHECK(peaks(Permutation::parse("231")) == std::vector<int>{2});
  CHECK(valleys(Permutation::parse("231")) == std::vector<int>{1, 3});
}

TEST_CASE("segmentation anchor for 231 in the peak-valley class") {
  const std::set<std::vector<int>> expect = {
      {0, 1, 2, 3}, {0, 1, 3, 3}, {0, 2, 2, 3}, {0, 2, 3, 3}};
  CHECK(boundary_set(Permutation::parse("231"), Signature("+-+")) == expect);
  CHECK(count_segmentations(Permutation::parse("231"), Signature("+-+")) == 4);
  // Lexicographic emission order of the interior boundaries.
  const auto list = segmentations(Permutation::parse("231"), Signature("+-+"));
  REQUIRE(list.size() == 4);
  CHECK(list[0].boundaries == std::vector<int>{0, 1, 2, 3});
  CHECK(list[3].boundaries == std::vector<int>{0, 2, 3, 3});
}

TEST_CASE("segmentation counts for hand-worked examples") {
  // Unimodal with the maximum at position 2, under ++-: 2(i+1) = 6.
  CHECK(count_segmentations(Permutation::parse("1432"), Signature("++-")) == 6);
  // Cyclic unimodal with the maximum at position 3: 2(i+1) = 8 under ++-,
  // 2(n-i+2) = 6 under +--.
  CHECK(count_segmentations(Permutation::parse("2341"), Signature("++-")) == 8);
  CHECK(count_segmentations(Permutation::parse("2341"), Signature("+--")) == 6);
  // Monotone words admit segmentations everywhere the signs allow.
  CHECK(count_segmentations(Permutation::parse("123"), Signature("+-+")) == 7);
  // Not in class: no segmentation at all.
  CHECK(count_segmentations(Permutation::parse("2413"), Signature("+-")) == 0);
  CHECK(boundary_set(Permutation::parse("2413"), Signature("+-")).empty());
}

TEST_CASE("greedy membership agrees with the exhaustive reference") {
  std::vector<Signature> sigmas;
  for (int index = 1; index <= 8; ++index) {
    sigmas.push_back(Signature::from_index(index));
  }
  sigmas.push_back(Signature("+-"));
  sigmas.push_back(Signature("-+"));
  sigmas.push_back(Signature("+-+-"));

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> entries(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) entries[static_cast<size_t>(i)] = i + 1;
    do {
      const Permutation pi(entries);
      for (const auto& sigma : sigmas) {
        CHECK(in_class(pi, sigma) == in_class_exhaustive(pi, sigma));
      }
    } while (std::next_permutation(entries.begin(), entries.end()));
  }
}

TEST_CASE("peak-valley class members carry exactly the four grid segmentations") {
  // For every cyclic member: a unique peak-before-valley pair (i, j), and the
  // segmentation set is the 2x2 grid {i-1, i} x {j-1, j}.
  const Signature sigma("+-+");
  for (int n = 4; n <= 7; ++n) {
    for (const auto& pi : enumerate_cycles(n)) {
      if (!in_class(pi, sigma)) continue;
      std::vector<std::pair<int, int>> crossings;
      for (int i : peaks(pi)) {
        for (int j : valleys(pi)) {
          if (i < j) crossings.emplace_back(i, j);
        }
      }
      REQUIRE(crossings.size() == 1);
      const auto [i, j] = crossings.front();
      const std::set<std::vector<int>> expect = {{0, i - 1, j - 1, n},
                                                 {0, i - 1, j, n},
                                                 {0, i, j - 1, n},
                                                 {0, i, j, n}};
      CHECK(boundary_set(pi, sigma) == expect);
    }
  }
}

TEST_CASE("segmentation multiplicities in the two topped three-block classes") {
  const Signature up_up_down("++-");
  const Signature up_down_down("+--");
  const Signature unimodal("+-");
  for (int n = 4; n <= 7; ++n) {
    for (const auto& pi : enumerate_cycles(n)) {
      if (in_class(pi, unimodal)) {
        int i = 0;
        for (int pos = 1; pos <= n; ++pos) {
          if (pi.at(pos) == n) i = pos;
        }
        CHECK(count_segmentations(pi, up_up_down) == 2 * (i + 1));
        CHECK(count_segmentations(pi, up_down_down) == 2 * (n - i + 2));
      } else {
        if (in_class(pi, up_up_down)) {
          CHECK(count_segmentations(pi, up_up_down) == 2);
        }
        if (in_class(pi, up_down_down)) {
          CHECK(count_segmentations(pi, up_down_down) == 2);
        }
      }
    }
  }
}

TEST_CASE("boundary admission checks one explicit segmentation") {
  const Permutation pi = Permutation::parse("231");
  const Signature sigma("+-+");
  const std::vector<int> yes = {0, 1, 2, 3};
  const std::vector<int> no = {0, 3, 3, 3};  // 231 is not increasing
  CHECK(detail::admits_boundaries(pi.entries(), sigma, yes));
  CHECK_FALSE(detail::admits_boundaries(pi.entries(), sigma, no));
  const std::vector<int> malformed = {1, 2, 3, 3};
  CHECK_THROWS_AS(detail::admits_boundaries(pi.entries(), sigma, malformed),
                  std::invalid_argument);
}
