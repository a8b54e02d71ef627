#include <doctest.h>

#include <stdexcept>

#include "annular/permutation.hpp"
#include "oracles.hpp"

using namespace annular;

TEST_CASE("product applies the right factor first") {
  const auto a = Permutation::parse(3, "(1 2)");
  const auto b = Permutation::parse(3, "(2 3)");
  // (1 2)(2 3): 3 -> 2 -> 1
  CHECK((a * b)(3) == 1);
  CHECK(to_string(a * b) == "(1 2 3)");
  CHECK(to_string(b * a) == "(1 3 2)");
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"e", "(1 2)", "(1 3 2)(4 5)", "(2 4)"}) {
    CHECK(to_string(Permutation::parse(5, text)) == text);
  }
  CHECK_THROWS_AS(Permutation::parse(3, "(1 4)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(3, "(1 2)(2 3)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(3, "(1 2"), std::invalid_argument);
}

TEST_CASE("cycles start at their minimum and include fixed points") {
  const auto p = Permutation::parse(5, "(3 1 4)");
  const std::vector<Cycle> expected = {{1, 4, 3}, {2}, {5}};
  CHECK(cycles(p) == expected);
  CHECK(cycle_count(p) == 3);
}

TEST_CASE("partition parsing sorts parts and validates") {
  const auto l = Partition::parse("2,3,1");
  CHECK(l.parts() == std::vector<int>{3, 2, 1});
  CHECK(l.n() == 6);
  CHECK(l.to_string() == "3,2,1");
  CHECK_THROWS(Partition::parse(""));
  CHECK_THROWS(Partition({0, 1}));
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("canonical cycles and alpha_pq") {
  CHECK(to_string(canonical_cycles(Partition({2, 3}))) == "(1 2 3)(4 5)");
  CHECK(to_string(alpha_pq(2, 3)) == "(1 2)(3 4 5)");
  CHECK(to_string(alpha_pq(3, 2)) == "(1 2 3)(4 5)");
}

TEST_CASE("absolute length equals transposition distance") {
  for (int n = 1; n <= 5; ++n) {
    const auto dist = oracle::distances(Permutation::identity(n), oracle::transpositions_A(n));
    CHECK(dist.size() == oracle::all_perms(n).size());
    for (const auto& [g, d] : dist) CHECK(abs_length(g) == d);
  }
}

TEST_CASE("absolute order matches the distance oracle") {
  const int n = 4;
  const auto dist = oracle::distances(Permutation::identity(n), oracle::transpositions_A(n));
  const auto all = oracle::all_perms(n);
  for (const auto& a : all) {
    for (const auto& b : all) CHECK(abs_leq(a, b) == oracle::leq(dist, a, b));
  }
}

TEST_CASE("connectedness over a split") {
  CHECK(is_connected(Permutation::parse(4, "(1 3)"), 2));
  CHECK_FALSE(is_connected(Permutation::parse(4, "(1 2)(3 4)"), 2));
  CHECK_FALSE(is_connected(Permutation::identity(4), 2));
}

TEST_CASE("transitivity of a word") {
  const std::vector<Permutation> chain = {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(2 3)")};
  CHECK(generates_transitively(chain, 3));
  const std::vector<Permutation> split = {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 2)")};
  CHECK_FALSE(generates_transitively(split, 3));
}

TEST_CASE("group laws on S_4") {
  const auto all = oracle::all_perms(4);
  const auto id = Permutation::identity(4);
  for (const auto& a : all) {
    CHECK(a * a.inverse() == id);
    CHECK(a.inverse() * a == id);
    for (const auto& b : all) CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}
