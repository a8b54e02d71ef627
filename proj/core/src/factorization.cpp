#include "annular/factorization.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

#include "annular/errors.hpp"

namespace annular {

namespace {

// Union-find over {1..n} small enough to copy at every DFS level.
struct Components {
  std::array<std::int8_t, kMaxDegree + 1> parent{};
  int count = 0;

  explicit Components(int n) : count(n) {
    for (int i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
  }
  int find(int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
    --count;
  }
};

void guard(int value, int limit, const std::string& what) {
  if (value > limit) {
    throw GuardError(what + ": " + std::to_string(value) + " exceeds limit " + std::to_string(limit));
  }
}

void check_pq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  if (p + q > kMaxDegree) throw std::invalid_argument("p + q exceeds the supported degree");
}

// The two points moved by a transposition of S_n.
std::pair<int, int> support(const Permutation& t) {
  int a = 0;
  for (int i = 1; i <= t.size(); ++i) {
    if (t(i) != i) {
      if (a == 0) {
        a = i;
      } else {
        return {a, i};
      }
    }
  }
  throw DomainError("not a transposition: " + to_string(t));
}

bool is_transposition(const Permutation& t) { return abs_length(t) == 1 && cycle_count(t) == t.size() - 1; }

bool in_range(const BTransposition& t, int n) { return t.first() <= n && std::abs(t.second()) <= n; }

bool is_positive(const BTransposition& t) { return !t.is_zero() && t.second() > 0; }

bool shadows_connect(std::span<const BTransposition> word, int n) {
  Components comp(n);
  for (const auto& t : word) {
    if (!t.is_zero()) comp.join(t.first(), std::abs(t.second()));
  }
  return comp.count <= 1;
}

void check_word_size(std::size_t size, int p, int q) {
  if (static_cast<int>(size) != p + q) throw DomainError("factorization must have p+q factors");
}

// Depth-first walk over words of reflections from `pool` whose partial
// products climb by one in absolute length towards `target`, with
// transitivity pruning. Shared by F^(B) and F^+.
void walk_B(const SignedPermutation& target, int length, const std::vector<BTransposition>& pool,
            bool exact_length, const std::function<bool(const WordB&)>& visit) {
  const int n = target.size();
  std::vector<SignedPermutation> as_perm;
  as_perm.reserve(pool.size());
  for (const auto& t : pool) as_perm.push_back(t.to_permutation(n));

  WordB word;
  word.reserve(static_cast<std::size_t>(length));
  std::function<bool(const SignedPermutation&, const Components&)> rec = [&](const SignedPermutation& pi,
                                                                            const Components& comp) -> bool {
    const int depth = static_cast<int>(word.size());
    const int remaining = length - depth;
    if (remaining == 0) {
      if (pi == target && comp.count <= 1) return visit(word);
      return true;
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
      SignedPermutation next = pi * as_perm[k];
      const int gap = abs_length(next.inverse() * target);
      if (exact_length) {
        if (gap != remaining - 1) continue;
      } else if (gap > remaining - 1 || (remaining - 1 - gap) % 2 != 0) {
        continue;
      }
      Components next_comp = comp;
      if (!pool[k].is_zero()) next_comp.join(pool[k].first(), std::abs(pool[k].second()));
      if (next_comp.count - 1 > remaining - 1) continue;
      word.push_back(pool[k]);
      const bool go_on = rec(next, next_comp);
      word.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(SignedPermutation::identity(n), Components(n));
}

}  // namespace

SignedPermutation product(std::span<const BTransposition> word, int n) {
  SignedPermutation out = SignedPermutation::identity(n);
  for (const auto& t : word) out = out * t.to_permutation(n);
  return out;
}

Permutation product(std::span<const Permutation> word, int n) {
  Permutation out = Permutation::identity(n);
  for (const auto& t : word) out = compose(out, t);
  return out;
}

bool is_mtf(std::span<const Permutation> word, const Partition& lambda) {
  const int n = lambda.n();
  if (static_cast<int>(word.size()) != n + lambda.num_parts() - 2) return false;
  for (const auto& t : word) {
    if (t.size() != n || !is_transposition(t)) return false;
  }
  return product(word, n) == canonical_cycles(lambda) && generates_transitively(word, n);
}

bool is_mtf_of(std::span<const Permutation> word, const Permutation& target) {
  const int n = target.size();
  if (static_cast<int>(word.size()) != n + cycle_count(target) - 2) return false;
  for (const auto& t : word) {
    if (t.size() != n || !is_transposition(t)) return false;
  }
  return product(word, n) == target && generates_transitively(word, n);
}

void for_each_mtf(const Partition& lambda, const std::function<bool(const WordA&)>& visit, int max_length) {
  const int n = lambda.n();
  const int length = n + lambda.num_parts() - 2;
  guard(length, max_length, "factorization length");
  guard(n, kMaxDegree, "degree");
  const Permutation target = canonical_cycles(lambda);
  const auto pool = transpositions(n);
  std::vector<std::pair<int, int>> supports;
  for (const auto& t : pool) supports.push_back(support(t));

  WordA word;
  std::function<bool(const Permutation&, const Components&)> rec = [&](const Permutation& pi,
                                                                      const Components& comp) -> bool {
    const int remaining = length - static_cast<int>(word.size());
    if (remaining == 0) {
      if (pi == target && comp.count <= 1) return visit(word);
      return true;
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
      Permutation next = pi * pool[k];
      const int gap = abs_length(next.inverse() * target);
      if (gap > remaining - 1 || (remaining - 1 - gap) % 2 != 0) continue;
      Components next_comp = comp;
      next_comp.join(supports[k].first, supports[k].second);
      if (next_comp.count - 1 > remaining - 1) continue;
      word.push_back(pool[k]);
      const bool go_on = rec(next, next_comp);
      word.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(Permutation::identity(n), Components(n));
}

BigCount count_mtf_enumerate(const Partition& lambda, int max_length) {
  BigCount count = 0;
  for_each_mtf(
      lambda,
      [&](const WordA&) {
        ++count;
        return true;
      },
      max_length);
  return count;
}

bool is_FB(std::span<const BTransposition> word, int p, int q) {
  const int n = p + q;
  if (static_cast<int>(word.size()) != n) return false;
  for (const auto& t : word) {
    if (!in_range(t, n)) return false;
  }
  return product(word, n) == gamma_pq(p, q) && shadows_connect(word, n);
}

bool is_Fplus(std::span<const BTransposition> word, int p, int q) {
  const int n = p + q;
  if (static_cast<int>(word.size()) != n) return false;
  for (const auto& t : word) {
    if (!is_positive(t) || !in_range(t, n)) return false;
  }
  return product(word, n) == beta_pq(p, q) && shadows_connect(word, n);
}

void for_each_FB(int p, int q, const std::function<bool(const WordB&)>& visit, int max_degree) {
  check_pq(p, q);
  guard(p + q, max_degree, "F^(B) enumeration degree");
  auto pool = b_transpositions(p + q);
  std::sort(pool.begin(), pool.end());
  walk_B(gamma_pq(p, q), p + q, pool, true, visit);
}

void for_each_Fplus(int p, int q, const std::function<bool(const WordB&)>& visit, int max_degree) {
  check_pq(p, q);
  guard(p + q, max_degree, "F^+ enumeration degree");
  std::vector<BTransposition> pool;
  for (int i = 1; i <= p + q; ++i) {
    for (int j = i + 1; j <= p + q; ++j) pool.push_back(BTransposition::paired(i, j));
  }
  walk_B(beta_pq(p, q), p + q, pool, false, visit);
}

WordB plus_tuple(std::span<const BTransposition> word, int p, int q) {
  check_pq(p, q);
  check_word_size(word.size(), p, q);
  WordB out;
  for (const auto& t : word) {
    if (t.is_zero()) throw DomainError("(.)^+ of " + to_string(t) + " is not a reflection");
    out.push_back(BTransposition::paired(t.first(), std::abs(t.second())));
  }
  return out;
}

WordA abs_tuple(std::span<const BTransposition> word, int p, int q) {
  check_pq(p, q);
  check_word_size(word.size(), p, q);
  WordA out;
  for (const auto& t : word) {
    if (!is_positive(t)) throw DomainError("|.| expects positive factors, got " + to_string(t));
    out.push_back(Permutation::transposition(p + q, t.first(), t.second()));
  }
  return out;
}

WordB positive_from_abs(std::span<const Permutation> word, int p, int q) {
  check_pq(p, q);
  check_word_size(word.size(), p, q);
  WordB out;
  for (const auto& t : word) {
    if (t.size() != p + q) throw DomainError("factor of the wrong degree");
    auto [a, b] = support(t);
    if (!is_transposition(t)) throw DomainError("not a transposition: " + to_string(t));
    out.push_back(BTransposition::paired(a, b));
  }
  return out;
}

WordB toggle_connected(std::span<const BTransposition> word, int p, int q) {
  check_pq(p, q);
  check_word_size(word.size(), p, q);
  WordB out;
  for (const auto& t : word) out.push_back(t.is_connected(p) ? bar(t) : t);
  return out;
}

WordB lift_positive(std::span<const BTransposition> word, int p, int q) {
  check_pq(p, q);
  if (!is_Fplus(word, p, q)) throw DomainError("lift_positive expects a member of F^+");
  const int n = p + q;

  // Breadth-first search from 1 to p+1; edges are explored in factor order.
  std::vector<int> via(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> from(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::deque<int> queue{1};
  seen[1] = true;
  while (!queue.empty() && !seen[static_cast<std::size_t>(p + 1)]) {
    const int u = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < word.size(); ++l) {
      if (!word[l].touches(u)) continue;
      const int v = word[l].first() == u ? word[l].second() : word[l].first();
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      via[static_cast<std::size_t>(v)] = static_cast<int>(l);
      from[static_cast<std::size_t>(v)] = u;
      queue.push_back(v);
    }
  }
  if (!seen[static_cast<std::size_t>(p + 1)]) throw InternalError("no path from 1 to p+1 in a transitive word");

  struct Step {
    int factor;
    int u;
    int v;
  };
  std::vector<Step> path;
  for (int v = p + 1; v != 1; v = from[static_cast<std::size_t>(v)]) {
    path.push_back({via[static_cast<std::size_t>(v)], from[static_cast<std::size_t>(v)], v});
  }
  std::reverse(path.begin(), path.end());

  // eps_u w = eps_v (eps_v eps_u) w; conjugating by eps_u eps_v bars the
  // factors meeting exactly one of u, v, and absorbing it into w_l = ((u v))
  // bars that factor.
  WordB out(word.begin(), word.end());
  for (const auto& step : path) {
    for (int k = 0; k < step.factor; ++k) {
      auto& t = out[static_cast<std::size_t>(k)];
      if (t.touches(step.u) != t.touches(step.v)) t = bar(t);
    }
    out[static_cast<std::size_t>(step.factor)] = bar(out[static_cast<std::size_t>(step.factor)]);
  }
  if (product(out, n) != gamma_pq(p, q)) throw InternalError("lift does not multiply to gamma_{p,q}");
  return out;
}

std::vector<WordB> preimages_under_plus(std::span<const BTransposition> word, int p, int q) {
  WordB lifted = lift_positive(word, p, q);
  WordB toggled = toggle_connected(lifted, p, q);
  std::vector<WordB> out{lifted, toggled};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ind_set(const SignedPermutation& delta, int p, int q) {
  check_pq(p, q);
  const SignedPermutation beta = beta_pq(p, q);
  if (delta.size() != p + q || plus_map(delta) != beta) throw DomainError("ind_set expects delta^+ = beta_{p,q}");
  std::vector<int> out;
  for (int i = 1; i <= p + q; ++i) {
    if (delta(i) == -beta(i)) out.push_back(i);
  }
  return out;
}

std::vector<SignedPermutation> enumerate_B_beta(int p, int q) {
  check_pq(p, q);
  const int n = p + q;
  guard(n, 20, "B(beta) degree");
  const std::vector<int> base = beta_pq(p, q).window();
  std::vector<SignedPermutation> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<int> w = base;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
    }
    out.push_back(SignedPermutation::from_window(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WordB> enumerate_F_sigma(std::span<const BTransposition> word, int p, int q) {
  check_pq(p, q);
  check_word_size(word.size(), p, q);
  for (const auto& t : word) {
    if (!is_positive(t)) throw DomainError("sign variants expect positive factors");
  }
  const int n = p + q;
  guard(n, 20, "F(sigma) degree");
  std::vector<WordB> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    WordB w(word.begin(), word.end());
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) w[static_cast<std::size_t>(i)] = bar(w[static_cast<std::size_t>(i)]);
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WordB> F_sigma_delta(std::span<const BTransposition> word, const SignedPermutation& delta, int p,
                                 int q) {
  std::vector<WordB> out;
  for (auto& w : enumerate_F_sigma(word, p, q)) {
    if (product(w, p + q) == delta) out.push_back(std::move(w));
  }
  return out;
}

WordA two_to_one_composite(const MaximalChainB& chain, const AnnularPoset& poset) {
  if (poset.classify(chain) != ChainKind::connected) throw DomainError("two_to_one_composite expects a connected chain");
  const WordB taus = phi(chain);
  return abs_tuple(plus_tuple(taus, poset.p(), poset.q()), poset.p(), poset.q());
}

}  // namespace annular
