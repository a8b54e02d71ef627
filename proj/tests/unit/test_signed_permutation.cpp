#include <doctest.h>

#include <algorithm>
#include <set>

#include "annular/errors.hpp"
#include "annular/signed_permutation.hpp"
#include "oracles.hpp"

using namespace annular;

TEST_CASE("zero and paired cycle notation") {
  const auto z = SignedPermutation::parse(3, "[1 2]");
  CHECK(z(1) == 2);
  CHECK(z(2) == -1);
  CHECK(z(-1) == -2);
  const auto p = SignedPermutation::parse(3, "((1 -3))");
  CHECK(p(1) == -3);
  CHECK(p(3) == -1);
  CHECK(p(2) == 2);
}

TEST_CASE("printing is canonical") {
  for (const char* text : {"e", "[1]", "[1 2]", "((1 -2))", "((1 -3 -2))", "[1][3]", "((1 2))[3]"}) {
    CHECK(to_string(SignedPermutation::parse(3, text)) == text);
  }
  CHECK(to_string(SignedPermutation::parse(3, "((-2 1))")) == "((1 -2))");
  CHECK(to_string(SignedPermutation::parse(3, "[2 -1]")) == "[1 2]");
}

TEST_CASE("there are n^2 reflections, all distinct involutions") {
  for (int n = 1; n <= 5; ++n) {
    const auto ts = b_transpositions(n);
    CHECK(ts.size() == static_cast<std::size_t>(n * n));
    std::set<SignedPermutation> seen;
    for (const auto& t : ts) {
      const auto s = t.to_permutation(n);
      CHECK(s * s == SignedPermutation::identity(n));
      CHECK(BTransposition::from_permutation(s) == t);
      seen.insert(s);
    }
    const auto ref = oracle::reflections_B(n);
    CHECK(seen == std::set<SignedPermutation>(ref.begin(), ref.end()));
  }
}

TEST_CASE("reflection normalisation") {
  CHECK(BTransposition::paired(3, 1) == BTransposition::paired(1, 3));
  CHECK(BTransposition::paired(-1, 3) == BTransposition::paired(1, -3));
  CHECK(BTransposition::paired(-3, -1) == BTransposition::paired(1, 3));
  CHECK(to_string(BTransposition::paired(2, -1)) == "((1 -2))");
  CHECK(to_string(BTransposition::zero(2)) == "[2]");
  CHECK_THROWS(BTransposition::paired(2, -2));
  CHECK_THROWS(BTransposition::from_permutation(SignedPermutation::parse(3, "[1 2]")));
}

TEST_CASE("absolute length equals reflection distance") {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = oracle::distances(SignedPermutation::identity(n), oracle::reflections_B(n));
    CHECK(dist.size() == oracle::all_signed(n).size());
    for (const auto& [g, d] : dist) CHECK(abs_length(g) == d);
  }
}

TEST_CASE("absolute order matches the distance oracle on B_3") {
  const auto dist = oracle::distances(SignedPermutation::identity(3), oracle::reflections_B(3));
  const auto all = oracle::all_signed(3);
  for (const auto& a : all) {
    for (const auto& b : all) CHECK(abs_leq(a, b) == oracle::leq(dist, a, b));
  }
}

TEST_CASE("zero cycles through sign relations") {
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const int n = 3;
    const auto zi = BTransposition::zero(i).to_permutation(n);
    const auto zj = BTransposition::zero(j).to_permutation(n);
    const auto t = BTransposition::paired(i, j).to_permutation(n);
    const auto tb = bar(BTransposition::paired(i, j)).to_permutation(n);
    const auto target = SignedPermutation::from_cycles(n, {{BCycle::Kind::zero, {i, j}}});
    CHECK(zi * t == target);
    CHECK(t * zj == target);
    CHECK(tb * zi == target);
    CHECK(zj * tb == target);
  }
}

TEST_CASE("plus and abs maps") {
  const auto s = SignedPermutation::parse(3, "[1 -2]((3))");
  CHECK(to_string(plus_map(s)) == "((1 2))");
  CHECK(to_string(abs_map(s)) == "(1 2)");
  CHECK(bar(bar(BTransposition::paired(1, 2))) == BTransposition::paired(1, 2));
  CHECK_THROWS_AS(bar(BTransposition::zero(1)), DomainError);
}

TEST_CASE("gamma and beta") {
  CHECK(to_string(gamma_pq(2, 1)) == "[1 2][3]");
  CHECK(to_string(beta_pq(3, 2)) == "((1 2 3))((4 5))");
  CHECK(abs_length(gamma_pq(4, 3)) == 7);
  CHECK(abs_length(beta_pq(4, 3)) == 5);
}

TEST_CASE("connectivity counts connected paired cycles only") {
  CHECK(connectivity(SignedPermutation::parse(7, "((1 5 6))((2 3 4))"), 4) == 1);
  CHECK(connectivity(SignedPermutation::parse(7, "[1 5 -7 2]((3 4))"), 4) == 0);
  CHECK(connectivity(SignedPermutation::parse(4, "((1 3))((2 4))"), 2) == 2);
  CHECK(zero_cycle_count(SignedPermutation::parse(4, "[1][3 4]")) == 2);
  CHECK(paired_cycle_count(SignedPermutation::parse(4, "[1][3 4]")) == 1);
}

TEST_CASE("group laws on B_3") {
  const auto all = oracle::all_signed(3);
  const auto id = SignedPermutation::identity(3);
  for (const auto& a : all) {
    CHECK(a * a.inverse() == id);
    CHECK(SignedPermutation::parse(3, to_string(a)) == a);
  }
}
