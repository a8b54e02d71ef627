#include <doctest.h>

#include "annular/closed_forms.hpp"
#include "annular/errors.hpp"
#include "annular/marked_poset.hpp"
#include "oracles.hpp"

using namespace annular;

TEST_CASE("membership follows the length conditions") {
  MarkedPoset poset(2, 1);
  const auto dist = oracle::distances(Permutation::identity(3), oracle::transpositions_A(3));
  const auto alpha = alpha_pq(2, 1);
  for (const auto& [pi, d] : dist) {
    const int slack = d + dist.at(pi.inverse() * alpha) - dist.at(alpha);
    const bool conn = is_connected(pi, 2);
    CHECK(poset.is_element(pi, 0) == (conn ? slack == 2 : slack == 0));
    CHECK(poset.is_element(pi, 1) == (!conn && slack == 0));
  }
}

TEST_CASE("bottom, top and ranks") {
  MarkedPoset poset(2, 1);
  CHECK(poset.rank(poset.bottom()) == 0);
  CHECK(poset.rank(poset.top()) == 3);
  CHECK(poset.top().perm == alpha_pq(2, 1));
  CHECK(poset.top().mark == 1);
  CHECK_THROWS_AS(poset.rank(MarkedElement{Permutation::parse(3, "(1 3)"), 1}), DomainError);
}

TEST_CASE("alpha keeps the block order for p < q") {
  MarkedPoset poset(1, 2);
  CHECK(to_string(poset.alpha()) == "(2 3)");
}

TEST_CASE("maximal chain counts") {
  CHECK(MarkedPoset(1, 1).count_maximal_chains() == 1);
  CHECK(MarkedPoset(2, 1).count_maximal_chains() == 8);
  CHECK(MarkedPoset(1, 2).count_maximal_chains() == 8);
  CHECK(MarkedPoset(2, 2).count_maximal_chains() == 96);
  CHECK(MarkedPoset(3, 2).count_maximal_chains() == 1296);
  for (auto [p, q] : {std::pair{3, 1}, std::pair{3, 3}}) CHECK(MarkedPoset(p, q).count_maximal_chains() == marked_chain_count(p, q));
}

TEST_CASE("chains and factorizations correspond") {
  MarkedPoset poset(2, 2);
  std::size_t seen = 0;
  poset.for_each_maximal_chain([&](const MarkedChain& chain) {
    const auto word = marked_chain_to_factorization(chain, poset);
    CHECK(word.size() == 4);
    CHECK(factorization_to_marked_chain(word, poset) == chain);
    ++seen;
    return true;
  });
  CHECK(seen == 96);
}

TEST_CASE("non-transitive words are rejected") {
  MarkedPoset poset(2, 1);
  const std::vector<Permutation> word = {Permutation::parse(3, "(1 2)"), Permutation::parse(3, "(1 2)"),
                                         Permutation::parse(3, "(1 2)")};
  CHECK_THROWS_AS(factorization_to_marked_chain(word, poset), DomainError);
}

TEST_CASE("disconnected element counts") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    CHECK(MarkedPoset(p, q).disconnected_element_count() == disconnected_marked_count(p, q));
  }
}

TEST_CASE("covers raise the rank by one") {
  MarkedPoset poset(3, 1);
  for (const auto& e : poset.elements()) {
    for (const auto& up : poset.upper_covers(e)) {
      CHECK(poset.rank(up) == poset.rank(e) + 1);
      CHECK(poset.leq(e, up));
    }
  }
}
