#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "annular/annular_poset.hpp"
#include "annular/closed_forms.hpp"
#include "annular/errors.hpp"
#include "annular/factorization.hpp"
#include "annular/render.hpp"
#include "oracles.hpp"

using namespace annular;

namespace {

// Every word of the given length over gens, by plain recursion.
template <class G>
void all_words(const std::vector<G>& gens, int length, const std::function<void(const std::vector<G>&)>& visit) {
  std::vector<G> word;
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == length) {
      visit(word);
      return;
    }
    for (const auto& g : gens) {
      word.push_back(g);
      rec();
      word.pop_back();
    }
  };
  rec();
}

bool supports_connect(const std::vector<std::pair<int, int>>& edges, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int parts = n;
  for (auto [a, b] : edges) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --parts;
    }
  }
  return parts == 1;
}

std::size_t brute_mtf(const Partition& lambda) {
  const int n = lambda.n();
  const int length = n + static_cast<int>(lambda.parts().size()) - 2;
  const auto target = canonical_cycles(lambda);
  std::size_t count = 0;
  all_words<Permutation>(oracle::transpositions_A(n), length, [&](const std::vector<Permutation>& w) {
    Permutation prod = Permutation::identity(n);
    std::vector<std::pair<int, int>> edges;
    for (const auto& t : w) {
      prod = prod * t;
      const auto c = cycles(t);
      for (const auto& cyc : c) {
        if (cyc.size() == 2) edges.emplace_back(cyc[0], cyc[1]);
      }
    }
    if (prod == target && supports_connect(edges, n)) ++count;
  });
  return count;
}

WordB parse_word(std::initializer_list<const char*> items) {
  WordB out;
  for (const char* s : items) out.push_back(parse_btransposition(s));
  return out;
}

std::vector<WordB> collect_FB(int p, int q) {
  std::vector<WordB> out;
  for_each_FB(p, q, [&](const WordB& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<WordB> collect_Fplus(int p, int q) {
  std::vector<WordB> out;
  for_each_Fplus(p, q, [&](const WordB& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("transitive factorization counts by brute force") {
  CHECK(brute_mtf(Partition({2, 1})) == 8);
  CHECK(brute_mtf(Partition({1, 1})) == 1);
  CHECK(brute_mtf(Partition({1, 1, 1})) == 24);
  CHECK(brute_mtf(Partition({3})) == 3);
  CHECK(brute_mtf(Partition({2, 2})) == 96);
}

TEST_CASE("depth-first and walk counts agree with the product formula") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CAPTURE(lambda.to_string());
      if (n + static_cast<int>(lambda.parts().size()) - 2 <= kMaxWordLength) {
        CHECK(count_mtf_enumerate(lambda) == gj_count(lambda));
      }
      CHECK(count_mtf_dp(lambda) == gj_count(lambda));
    }
  }
  for (const auto& lambda : partitions_of(7)) CHECK(count_mtf_dp(lambda) == gj_count(lambda));
}

TEST_CASE("enumerated words are transitive factorizations") {
  const Partition lambda({2, 2});
  std::set<WordA> seen;
  for_each_mtf(lambda, [&](const WordA& w) {
    CHECK(is_mtf(w, lambda));
    seen.insert(w);
    return true;
  });
  CHECK(seen.size() == 96);
  CHECK_THROWS_AS(count_mtf_dp(Partition({8})), GuardError);
}

TEST_CASE("is_mtf rejects the repeated single transposition") {
  const auto t = Permutation::parse(3, "(1 2)");
  CHECK_FALSE(is_mtf(std::vector<Permutation>{t, t, t}, Partition({2, 1})));
}

TEST_CASE("type B factorization sets") {
  const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (auto [p, q] : shapes) {
    const int n = p + q;
    std::size_t brute_b = 0;
    std::size_t brute_plus = 0;
    std::vector<BTransposition> gens;
    for (const auto& r : oracle::reflections_B(n)) gens.push_back(BTransposition::from_permutation(r));
    all_words<BTransposition>(gens, n, [&](const WordB& w) {
      std::vector<std::pair<int, int>> edges;
      bool positive = true;
      for (const auto& t : w) {
        if (t.is_zero()) {
          positive = false;
          continue;
        }
        edges.emplace_back(std::abs(t.first()), std::abs(t.second()));
        if (t.first() < 0 || t.second() < 0) positive = false;
      }
      if (!supports_connect(edges, n)) return;
      const auto prod = product(w, n);
      if (prod == gamma_pq(p, q)) ++brute_b;
      if (positive && prod == beta_pq(p, q)) ++brute_plus;
    });
    const auto fb = collect_FB(p, q);
    const auto fplus = collect_Fplus(p, q);
    CHECK(fb.size() == brute_b);
    CHECK(fplus.size() == brute_plus);
    CHECK(BigCount(static_cast<unsigned long>(fb.size())) == cmc_sum(p, q));
    CHECK(BigCount(static_cast<unsigned long>(fplus.size())) == pq_count(p, q));
    for (const auto& w : fb) CHECK(is_FB(w, p, q));
    for (const auto& w : fplus) CHECK(is_Fplus(w, p, q));
  }
}

TEST_CASE("worked (3,2) factorization") {
  const auto sigma = parse_word({"((1 2))", "((2 5))", "((2 3))", "((4 5))", "((3 4))"});
  const auto tau = parse_word({"((1 2))", "((2 -5))", "((2 3))", "((4 -5))", "((3 -4))"});
  const auto tau_prime = parse_word({"((1 2))", "((2 5))", "((2 3))", "((4 -5))", "((3 4))"});
  CHECK(is_Fplus(sigma, 3, 2));
  CHECK(is_FB(tau, 3, 2));
  CHECK(plus_tuple(tau, 3, 2) == sigma);
  CHECK(toggle_connected(tau, 3, 2) == tau_prime);
  CHECK(plus_tuple(tau_prime, 3, 2) == sigma);
  CHECK(plus_tuple(sigma, 3, 2) == sigma);
  const auto eta = abs_tuple(sigma, 3, 2);
  CHECK(to_string(product(eta, 5)) == "(1 2 3)(4 5)");
  CHECK(is_mtf_of(eta, alpha_pq(3, 2)));
  CHECK(positive_from_abs(eta, 3, 2) == sigma);
  const auto lifted = lift_positive(sigma, 3, 2);
  CHECK((lifted == tau || lifted == tau_prime));
}

TEST_CASE("lift of the (1,1) word") {
  const auto sigma = parse_word({"((1 2))", "((1 2))"});
  const auto tau = lift_positive(sigma, 1, 1);
  CHECK(to_string(product(tau, 2)) == "[1][2]");
  CHECK(plus_tuple(tau, 1, 1) == sigma);
}

TEST_CASE("plus fibers have exactly two members, found by sign search") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    std::map<WordB, std::vector<WordB>> fibers;
    for (const auto& w : collect_FB(p, q)) fibers[plus_tuple(w, p, q)].push_back(w);
    for (const auto& sigma : collect_Fplus(p, q)) {
      std::vector<WordB> by_sign;
      for (const auto& t : enumerate_F_sigma(sigma, p, q)) {
        if (product(t, p + q) == gamma_pq(p, q)) by_sign.push_back(t);
      }
      CHECK(by_sign.size() == 2);
      CHECK(preimages_under_plus(sigma, p, q) == by_sign);
      CHECK(fibers[sigma] == by_sign);
      const auto lifted = lift_positive(sigma, p, q);
      CHECK(plus_tuple(lifted, p, q) == sigma);
      CHECK(toggle_connected(lifted, p, q) != lifted);
      CHECK(toggle_connected(toggle_connected(lifted, p, q), p, q) == lifted);
    }
  }
}

TEST_CASE("sign classes of beta") {
  for (int n = 2; n <= 5; ++n) {
    for (int p = 1; p < n; ++p) {
      const auto b = enumerate_B_beta(p, n - p);
      CHECK(b.size() == (1u << (n - 1)));
      for (const auto& delta : b) {
        CHECK(plus_map(delta) == beta_pq(p, n - p));
        CHECK(ind_set(delta, p, n - p).size() % 2 == 0);
      }
    }
  }
}

TEST_CASE("each delta is reached twice by the sign variants") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{2, 2}}) {
    for (const auto& sigma : collect_Fplus(p, q)) {
      CHECK(enumerate_F_sigma(sigma, p, q).size() == (1u << (p + q)));
      std::size_t total = 0;
      for (const auto& delta : enumerate_B_beta(p, q)) {
        const auto hits = F_sigma_delta(sigma, delta, p, q);
        CHECK(hits.size() == 2);
        total += hits.size();
      }
      CHECK(total == (1u << (p + q)));
    }
  }
}

TEST_CASE("connected chains map two to one onto type A factorizations") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
    AnnularPoset poset(p, q);
    std::map<WordA, int> hits;
    poset.for_each_maximal_chain([&](const MaximalChainB& chain) {
      if (poset.classify(chain) == ChainKind::connected) {
        ++hits[two_to_one_composite(chain, poset)];
      } else {
        CHECK_THROWS_AS(two_to_one_composite(chain, poset), DomainError);
      }
      return true;
    });
    CHECK(BigCount(static_cast<unsigned long>(hits.size())) == pq_count(p, q));
    for (const auto& [word, k] : hits) {
      CHECK(k == 2);
      CHECK(is_mtf_of(word, alpha_pq(p, q)));
    }
  }
}

TEST_CASE("walk table counts words in S_3") {
  TranspositionWalkTable table(3, 3);
  CHECK(table.count(Permutation::identity(3), 0) == 1);
  CHECK(table.count(Permutation::identity(3), 2) == 3);
  CHECK(table.count(Permutation::parse(3, "(1 2)"), 3) == 9);
  CHECK(table.count(Permutation::parse(3, "(1 2 3)"), 2) == 3);
}
