#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridcycles/words.hpp"

using namespace gridcycles;

namespace {

std::set<std::string> canonical_set(const std::vector<Necklace>& necklaces) {
  std::set<std::string> out;
  for (const auto& neck : necklaces) out.insert(neck.canonical.str());
  return out;
}

}  // namespace

TEST_CASE("word parse and text round-trip") {
  const Word w = Word::parse("0020112", 3);
  CHECK(w.size() == 7);
  CHECK(w.alphabet_size() == 3);
  CHECK(w.str() == "0020112");
  CHECK(w.letter(2) == 2);
  CHECK(Word::parse(w.str(), 3) == w);

  CHECK_THROWS_AS(Word::parse("012", 2), std::invalid_argument);  // letter 2
  CHECK_THROWS_AS(Word::parse("0a1", 3), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, 1, 5}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, -1}, 2), std::invalid_argument);
}

TEST_CASE("primitivity detection") {
  CHECK(is_primitive(Word::parse("0", 2)));
  CHECK(is_primitive(Word::parse("01", 2)));
  CHECK(is_primitive(Word::parse("0010", 2)));
  CHECK_FALSE(is_primitive(Word::parse("0101", 2)));
  CHECK_FALSE(is_primitive(Word::parse("000", 2)));
  CHECK_FALSE(is_primitive(Word::parse("012012", 3)));
  CHECK(is_primitive(Word::parse("012021", 3)));
}

TEST_CASE("evaluation counts letter multiplicities") {
  CHECK(evaluation(Word::parse("0020112", 3)) == std::vector<long>{3, 2, 2});
  CHECK(evaluation(Word::parse("1111", 2)) == std::vector<long>{0, 4});
  CHECK(evaluation(Word::parse("0", 3)) == std::vector<long>{1, 0, 0});
}

TEST_CASE("sigma-parity counts letters on minus positions") {
  const Signature s3("+-+");
  CHECK(o_sigma(s3, Word::parse("0020112", 3)) == 2);  // the two 1s
  CHECK(o_sigma(Signature("---"), Word::parse("0212", 3)) == 4);
  CHECK(o_sigma(Signature("+-"), Word::parse("0101", 2)) == 2);
  // Alphabet size and signature length must agree.
  CHECK_THROWS_AS(o_sigma(Signature("+-"), Word::parse("012", 3)),
                  std::invalid_argument);
}

TEST_CASE("canonicalize picks the least rotation and the primitive root") {
  const Necklace a = canonicalize(Word::parse("110", 2));
  CHECK(a.canonical.str() == "011");
  CHECK(a.root_length == 3);
  CHECK(a.primitive());

  const Necklace b = canonicalize(Word::parse("0101", 2));
  CHECK(b.canonical.str() == "0101");
  CHECK(b.root_length == 2);
  CHECK_FALSE(b.primitive());

  const Necklace c = canonicalize(Word::parse("21021", 3));
  CHECK(c.canonical.str() == "02121");
  CHECK(c.root_length == 5);

  // Idempotence over every rotation of a sample word.
  const Word sample = Word::parse("2010210", 3);
  const Necklace expect = canonicalize(sample);
  std::vector<int> rotated = sample.letters();
  for (int r = 0; r < sample.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    CHECK(canonicalize(Word(rotated, 3)) == expect);
  }
}

TEST_CASE("necklace generation matches hand-counted anchors") {
  const auto all_24 = generate_necklaces(2, 4, NecklaceFilter::all);
  CHECK(canonical_set(all_24) ==
        std::set<std::string>{"0000", "0001", "0011", "0101", "0111", "1111"});
  // Representatives arrive in lexicographic order.
  for (size_t i = 1; i < all_24.size(); ++i) {
    CHECK(all_24[i - 1].canonical < all_24[i].canonical);
  }

  const auto prim_24 = generate_necklaces(2, 4, NecklaceFilter::primitive);
  CHECK(canonical_set(prim_24) ==
        std::set<std::string>{"0001", "0011", "0111"});
  for (const auto& neck : prim_24) CHECK(neck.primitive());

  CHECK(generate_necklaces(3, 3, NecklaceFilter::all).size() == 11);
  CHECK(generate_necklaces(3, 3, NecklaceFilter::primitive).size() == 8);
}

TEST_CASE("generator agrees with rotation-grouping on necklaces and roots") {
  for (int k = 2; k <= 3; ++k) {
    for (int n = 1; n <= 8; ++n) {
      auto generated = generate_necklaces(k, n, NecklaceFilter::all);
      auto grouped = necklaces_by_grouping(k, n);
      REQUIRE(generated.size() == grouped.size());
      for (size_t i = 0; i < generated.size(); ++i) {
        CHECK(generated[i].canonical == grouped[i].canonical);
        CHECK(generated[i].root_length == grouped[i].root_length);
      }
      // Primitive sub-family consistency.
      size_t primitive_generated =
          generate_necklaces(k, n, NecklaceFilter::primitive).size();
      size_t primitive_grouped = 0;
      for (const auto& neck : grouped) {
        if (neck.primitive()) ++primitive_grouped;
      }
      CHECK(primitive_generated == primitive_grouped);
      CHECK(ExactInt(primitive_generated) == lyndon_count(k, n));
    }
  }
}

TEST_CASE("star family adds odd-parity squares on even length") {
  const auto star = generate_star_necklaces(2, 4, Signature("+-"));
  CHECK(canonical_set(star) ==
        std::set<std::string>{"0001", "0011", "0101", "0111"});
  for (const auto& neck : star) {
    if (neck.canonical.str() == "0101") {
      CHECK(neck.root_length == 2);  // square of the odd-parity root 01
    } else {
      CHECK(neck.primitive());
    }
  }

  // Odd length: the family is exactly the primitive necklaces.
  const auto star_odd = generate_star_necklaces(3, 5, Signature("+-+"));
  const auto prim_odd = generate_necklaces(3, 5, NecklaceFilter::primitive);
  REQUIRE(star_odd.size() == prim_odd.size());
  for (size_t i = 0; i < star_odd.size(); ++i) {
    CHECK(star_odd[i].canonical == prim_odd[i].canonical);
  }

  // Counting identity: family size = primitive count + half-length odd count.
  for (int n = 1; n <= 12; ++n) {
    for (int index : {1, 3, 5}) {
      const Signature sigma = Signature::from_index(index);
      ExactInt expect = lyndon_count(3, n);
      if (n % 2 == 0) expect += lyndon_odd_count(3, n / 2, sigma);
      CHECK(star_count(3, n, sigma) == expect);
      CHECK(ExactInt(generate_star_necklaces(3, n, sigma).size()) ==
            star_count(3, n, sigma));
    }
  }
}

TEST_CASE("primitive necklace counts match the frozen tables") {
  const long expect2[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161};
  const long expect3[] = {3, 3, 8, 18, 48, 116, 312, 810, 2184, 5880,
                          16104, 44220, 122640, 341484};
  for (int n = 1; n <= 14; ++n) {
    CHECK(lyndon_count(2, n) == expect2[n - 1]);
    CHECK(lyndon_count(3, n) == expect3[n - 1]);
  }
}

TEST_CASE("fixed-density counts agree with direct enumeration") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<long> by_density(static_cast<size_t>(n) + 1, 0);
    for (const auto& neck : necklaces_by_grouping(2, n)) {
      if (!neck.primitive()) continue;
      ++by_density[static_cast<size_t>(evaluation(neck.canonical)[1])];
    }
    for (int ones = 0; ones <= n; ++ones) {
      CHECK(lyndon_density_count(n, ones) == by_density[static_cast<size_t>(ones)]);
    }
  }
  // gcd(n, 0) = n convention: a zero-density primitive exists only at n = 1.
  CHECK(lyndon_density_count(1, 0) == 1);
  CHECK(lyndon_density_count(5, 0) == 0);
  CHECK_THROWS_AS(lyndon_density_count(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(lyndon_density_count(4, -1), std::invalid_argument);
}

TEST_CASE("odd-parity closed-form shortcut equals plain enumeration") {
  for (int n = 1; n <= 13; ++n) {
    for (int index = 1; index <= 8; ++index) {
      const Signature sigma = Signature::from_index(index);
      CHECK(lyndon_odd_count(3, n, sigma) ==
            lyndon_odd_count_enumerated(3, n, sigma));
    }
  }
  // Binary unimodal counts (the Lambda sequence).
  const long expect[] = {1, 1, 1, 2, 3, 5, 9, 16, 28, 51};
  for (int n = 1; n <= 10; ++n) {
    CHECK(lyndon_odd_count(2, n, Signature("+-")) == expect[n - 1]);
  }
}
