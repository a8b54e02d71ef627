#include "annular/marked_poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "annular/errors.hpp"

namespace annular {

namespace {

void guard_degree(int degree, int max_degree, const char* what) {
  if (degree > max_degree) {
    throw GuardError(std::string(what) + ": degree " + std::to_string(degree) + " exceeds limit " +
                     std::to_string(max_degree));
  }
}

Permutation checked_alpha(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("marked poset needs p, q >= 1");
  if (p + q > kMaxDegree) throw std::invalid_argument("p + q exceeds the supported degree");
  return alpha_pq(p, q);
}

}  // namespace

MarkedPoset::MarkedPoset(int p, int q)
    : p_(p), q_(q), alpha_(checked_alpha(p, q)), transpositions_(transpositions(p + q)) {}

bool MarkedPoset::is_element(const Permutation& pi, int z) const {
  if (pi.size() != n() || (z != 0 && z != 1)) return false;
  const int total = abs_length(pi) + abs_length(pi.inverse() * alpha_);
  const int top = abs_length(alpha_);
  if (is_connected(pi)) return z == 0 && top == total - 2;
  return top == total;
}

bool MarkedPoset::leq(const MarkedElement& a, const MarkedElement& b) const {
  if (a.mark == b.mark) return abs_leq(a.perm, b.perm);
  if (a.mark == 0 && b.mark == 1 && is_connected(a.perm) && !is_connected(b.perm)) {
    return abs_length(b.perm) == abs_length(a.perm) + abs_length(a.perm.inverse() * b.perm) - 2;
  }
  return false;
}

int MarkedPoset::rank(const MarkedElement& e) const {
  if (!is_element(e)) throw DomainError("not a marked annular element: " + to_string(e.perm));
  return abs_length(e.perm) + 2 * e.mark;
}

MarkedElement MarkedPoset::bottom() const { return {Permutation::identity(n()), 0}; }

MarkedElement MarkedPoset::top() const { return {alpha_, 1}; }

std::vector<MarkedElement> MarkedPoset::upper_covers(const MarkedElement& e) const {
  std::vector<MarkedElement> out;
  const int len = abs_length(e.perm);
  const bool connected = is_connected(e.perm);
  for (const auto& t : transpositions_) {
    Permutation next = e.perm * t;
    const int next_len = abs_length(next);
    if (next_len == len + 1 && is_element(next, e.mark)) {
      out.push_back({next, e.mark});
    } else if (e.mark == 0 && connected && next_len == len - 1 && !is_connected(next) && is_element(next, 1)) {
      out.push_back({next, 1});
    }
  }
  return out;
}

std::vector<MarkedElement> MarkedPoset::elements(int max_degree) const {
  guard_degree(n(), max_degree, "marked elements");
  std::vector<MarkedElement> out;
  std::vector<int> images(static_cast<std::size_t>(n()));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation pi = Permutation::from_images(images);
    for (int z = 0; z <= 1; ++z) {
      if (is_element(pi, z)) out.push_back({pi, z});
    }
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(out.begin(), out.end(), [this](const MarkedElement& a, const MarkedElement& b) {
    int ra = rank(a);
    int rb = rank(b);
    return ra != rb ? ra < rb : a < b;
  });
  return out;
}

void MarkedPoset::for_each_maximal_chain(const std::function<bool(const MarkedChain&)>& visit,
                                         int max_degree) const {
  guard_degree(n(), max_degree, "marked chain enumeration");
  const MarkedElement goal = top();
  MarkedChain chain;
  chain.elements.push_back(bottom());
  std::function<bool()> rec = [&]() -> bool {
    const MarkedElement cur = chain.elements.back();
    if (cur == goal) return visit(chain);
    for (const auto& next : upper_covers(cur)) {
      chain.elements.push_back(next);
      bool go_on = rec();
      chain.elements.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec();
}

BigCount MarkedPoset::count_maximal_chains(int max_degree) const {
  unsigned long count = 0;
  for_each_maximal_chain(
      [&](const MarkedChain&) {
        ++count;
        return true;
      },
      max_degree);
  return BigCount(count);
}

void MarkedPoset::for_each_multichain(std::span<const int> rank_profile,
                                      const std::function<void(const std::vector<MarkedElement>&, bool)>& visit,
                                      int max_degree) const {
  if (rank_profile.empty()) throw std::invalid_argument("rank profile must be nonempty");
  for (std::size_t i = 0; i < rank_profile.size(); ++i) {
    if (rank_profile[i] < 0 || rank_profile[i] > n() || (i > 0 && rank_profile[i] < rank_profile[i - 1])) {
      throw std::invalid_argument("rank profile must be weakly increasing within [0, p+q]");
    }
  }
  std::vector<std::vector<MarkedElement>> by_rank(static_cast<std::size_t>(n()) + 1);
  for (auto& e : elements(max_degree)) by_rank[static_cast<std::size_t>(rank(e))].push_back(e);

  std::vector<MarkedElement> tuple;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool hot) {
    if (i == rank_profile.size()) {
      visit(tuple, hot);
      return;
    }
    for (const auto& e : by_rank[static_cast<std::size_t>(rank_profile[i])]) {
      if (!tuple.empty() && !leq(tuple.back(), e)) continue;
      tuple.push_back(e);
      rec(i + 1, hot || is_connected(e.perm));
      tuple.pop_back();
    }
  };
  rec(0, false);
}

BigCount MarkedPoset::disconnected_element_count(int max_degree) const {
  unsigned long count = 0;
  for (const auto& e : elements(max_degree)) count += is_connected(e.perm) ? 0 : 1;
  return BigCount(count);
}

std::vector<Permutation> marked_chain_to_factorization(const MarkedChain& chain, const MarkedPoset& poset) {
  const auto& el = chain.elements;
  if (static_cast<int>(el.size()) != poset.n() + 1 || el.front() != poset.bottom() || el.back() != poset.top()) {
    throw DomainError("not a maximal chain of the marked poset");
  }
  std::vector<Permutation> word;
  for (std::size_t i = 1; i < el.size(); ++i) {
    if (!poset.is_element(el[i]) || !poset.leq(el[i - 1], el[i]) ||
        poset.rank(el[i]) != poset.rank(el[i - 1]) + 1) {
      throw DomainError("chain step " + std::to_string(i) + " is not a cover");
    }
    Permutation t = el[i - 1].perm.inverse() * el[i].perm;
    if (abs_length(t) != 1) throw InternalError("marked cover not given by a transposition");
    word.push_back(t);
  }
  return word;
}

MarkedChain factorization_to_marked_chain(std::span<const Permutation> word, const MarkedPoset& poset) {
  const int n = poset.n();
  if (static_cast<int>(word.size()) != n) throw DomainError("factorization must have p+q factors");
  Permutation product = Permutation::identity(n);
  int last_connected = -1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].size() != n || abs_length(word[i]) != 1 || cycle_count(word[i]) != n - 1) {
      throw DomainError("factor " + std::to_string(i + 1) + " is not a transposition");
    }
    if (poset.is_connected(word[i])) last_connected = static_cast<int>(i) + 1;
    product = product * word[i];
  }
  if (product != poset.alpha()) throw DomainError("factorization does not multiply to alpha_{p,q}");
  if (!generates_transitively(word, n)) throw DomainError("factorization is not transitive");
  if (last_connected < 0) throw InternalError("transitive factorization without a connected factor");

  MarkedChain chain;
  chain.elements.push_back(poset.bottom());
  Permutation prefix = Permutation::identity(n);
  for (std::size_t i = 0; i < word.size(); ++i) {
    prefix = prefix * word[i];
    const int idx = static_cast<int>(i) + 1;
    MarkedElement e{prefix, idx >= last_connected ? 1 : 0};
    if (!poset.is_element(e) || !poset.leq(chain.elements.back(), e) ||
        poset.rank(e) != poset.rank(chain.elements.back()) + 1) {
      throw InternalError("partial product " + std::to_string(idx) + " leaves the marked poset");
    }
    chain.elements.push_back(e);
  }
  return chain;
}

}  // namespace annular
