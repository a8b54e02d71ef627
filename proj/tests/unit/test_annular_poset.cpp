#include <doctest.h>

#include <set>

#include "annular/annular_poset.hpp"
#include "annular/closed_forms.hpp"
#include "annular/errors.hpp"
#include "oracles.hpp"

using namespace annular;

namespace {

// Elements below gamma by the distance oracle alone.
std::set<SignedPermutation> interval_by_oracle(int p, int q) {
  const int n = p + q;
  const auto dist = oracle::distances(SignedPermutation::identity(n), oracle::reflections_B(n));
  const auto top = gamma_pq(p, q);
  std::set<SignedPermutation> out;
  for (const auto& [s, d] : dist) {
    if (oracle::leq(dist, s, top)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("interval elements agree with the distance oracle") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    AnnularPoset poset(p, q);
    const auto els = poset.elements();
    CHECK(std::set<SignedPermutation>(els.begin(), els.end()) == interval_by_oracle(p, q));
  }
}

TEST_CASE("(2,1) has twenty elements with ranks 1, 9, 9, 1") {
  AnnularPoset poset(2, 1);
  int by_rank[4] = {0, 0, 0, 0};
  for (const auto& s : poset.elements()) ++by_rank[poset.rank(s)];
  CHECK(by_rank[0] == 1);
  CHECK(by_rank[1] == 9);
  CHECK(by_rank[2] == 9);
  CHECK(by_rank[3] == 1);
}

TEST_CASE("rank throws outside the poset") {
  AnnularPoset poset(2, 1);
  CHECK_THROWS_AS(poset.rank(SignedPermutation::parse(3, "[1 3]")), DomainError);
}

TEST_CASE("cover types change cycle counts as described") {
  AnnularPoset poset(3, 2);
  for (const auto& pi : poset.elements()) {
    for (const auto& cover : poset.interval().upper_covers(pi)) {
      const auto type = poset.cover_type(pi, cover.element);
      REQUIRE(type.has_value());
      const int dz = zero_cycle_count(cover.element) - zero_cycle_count(pi);
      const int dp = paired_cycle_count(cover.element) - paired_cycle_count(pi);
      switch (*type) {
        case CoverType::a: CHECK((dz == 1 && dp == -1)); break;
        case CoverType::b: CHECK((dz == 0 && dp == -1)); break;
        case CoverType::c: CHECK((dz == 0 && dp == -1)); break;
        case CoverType::d: CHECK((dz == 2 && dp == -1)); break;
      }
    }
  }
  CHECK_FALSE(poset.cover_type(SignedPermutation::identity(5), gamma_pq(3, 2)).has_value());
}

TEST_CASE("phi round trips on every chain of (2,2)") {
  AnnularPoset poset(2, 2);
  std::size_t seen = 0;
  poset.for_each_maximal_chain([&](const MaximalChainB& chain) {
    const auto ts = phi(chain);
    CHECK(ts.size() == 4);
    CHECK(phi_inverse(ts, poset) == chain);
    ++seen;
    return true;
  });
  CHECK(seen == 288);
}

TEST_CASE("phi_inverse rejects words that leave the interval") {
  AnnularPoset poset(2, 1);
  const std::vector<BTransposition> bad = {BTransposition::zero(1), BTransposition::zero(1), BTransposition::zero(3)};
  CHECK_THROWS_AS(phi_inverse(bad, poset), DomainError);
}

TEST_CASE("chain counts match the closed forms") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 2}}) {
    AnnularPoset poset(p, q);
    const auto counts = poset.count_chains();
    CHECK(counts.connected == cmc_sum(p, q));
    CHECK(counts.disconnected == dmc_count(p, q));
    CHECK(counts.total == nc_chain_count_B(p, q));
  }
}

TEST_CASE("chain counts are independent of the thread count") {
  AnnularPoset poset(3, 2);
  const auto one = poset.count_chains(7, 1);
  const auto three = poset.count_chains(7, 3);
  CHECK(one.total == three.total);
  CHECK(one.connected == three.connected);
  CHECK(three.total == 3672);
}

TEST_CASE("shuffles of block chains are disconnected and distinct") {
  AnnularPoset poset(2, 1);
  std::vector<MaximalChainB> outer;
  BInterval(outer_gamma(2, 1)).for_each_maximal_chain([&](const MaximalChainB& c) {
    outer.push_back(c);
    return true;
  });
  std::vector<MaximalChainB> inner;
  BInterval(inner_gamma(2, 1)).for_each_maximal_chain([&](const MaximalChainB& c) {
    inner.push_back(c);
    return true;
  });
  CHECK(outer.size() == 4);
  CHECK(inner.size() == 1);
  std::set<std::vector<SignedPermutation>> shuffled;
  const std::vector<std::vector<int>> slots = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& a : outer) {
    for (const auto& b : inner) {
      for (const auto& pos : slots) {
        const auto chain = shuffle_chains(a, b, pos, poset);
        CHECK(poset.classify(chain) == ChainKind::disconnected);
        shuffled.insert(chain.elements);
      }
    }
  }
  CHECK(shuffled.size() == 12);
  CHECK_THROWS_AS(shuffle_chains(outer[0], inner[0], std::vector<int>{2, 1}, poset), DomainError);
}

TEST_CASE("type B noncrossing chain counts are n^n") {
  for (int n = 1; n <= 4; ++n) CHECK(nc_b_chain_count(n) == power(n, n));
  CHECK_THROWS_AS(nc_b_chain_count(7), GuardError);
}

TEST_CASE("element enumeration is guarded") {
  AnnularPoset poset(5, 3);
  CHECK_THROWS_AS(poset.elements(), GuardError);
}

TEST_CASE("multichains of the maximal profile are maximal chains") {
  AnnularPoset poset(2, 1);
  std::size_t total = 0;
  std::size_t connected = 0;
  const std::vector<int> profile = {0, 1, 2, 3};
  poset.for_each_multichain(profile, [&](const std::vector<SignedPermutation>&, bool c) {
    ++total;
    if (c) ++connected;
  });
  CHECK(total == 28);
  CHECK(connected == 16);
}
