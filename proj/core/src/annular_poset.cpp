#include "annular/annular_poset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "annular/errors.hpp"

namespace annular {

namespace {

using CoverCache = std::unordered_map<SignedPermutation, std::vector<BCover>>;

const std::vector<BCover>& cached_covers(const BInterval& interval, CoverCache& cache,
                                         const SignedPermutation& s) {
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, interval.upper_covers(s)).first;
  return it->second;
}

void guard_degree(int degree, int max_degree, const char* what) {
  if (degree > max_degree) {
    throw GuardError(std::string(what) + ": degree " + std::to_string(degree) + " exceeds limit " +
                     std::to_string(max_degree));
  }
}

// Depth-first walk over saturated chains starting from chain.back().
// Returns false once the visitor asks to stop.
template <class Visit>
bool walk(const BInterval& interval, CoverCache& cache, MaximalChainB& chain, Visit& visit) {
  const SignedPermutation cur = chain.elements.back();
  if (cur == interval.top()) return visit(chain);
  // Copy: the cache may rehash while recursing.
  std::vector<BCover> covers = cached_covers(interval, cache, cur);
  for (const auto& cover : covers) {
    chain.elements.push_back(cover.element);
    bool go_on = walk(interval, cache, chain, visit);
    chain.elements.pop_back();
    if (!go_on) return false;
  }
  return true;
}

// Orbit labels of sigma on {+-1..+-n}, indexed by x + n.
std::array<int, 2 * kMaxDegree + 1> orbits(const SignedPermutation& sigma) {
  std::array<int, 2 * kMaxDegree + 1> label{};
  label.fill(-1);
  const int n = sigma.size();
  int next = 0;
  for (int x = -n; x <= n; ++x) {
    if (x == 0 || label[x + n] >= 0) continue;
    for (int y = x; label[y + n] < 0; y = sigma(y)) label[y + n] = next;
    ++next;
  }
  return label;
}

SignedPermutation checked_gamma(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("annular poset needs p, q >= 1");
  if (p + q > kMaxDegree) throw std::invalid_argument("p + q exceeds the supported degree");
  return gamma_pq(p, q);
}

}  // namespace

BInterval::BInterval(SignedPermutation top)
    : top_(std::move(top)), rank_(abs_length(top_)), labels_(b_transpositions(top_.size())) {
  reflections_.reserve(labels_.size());
  for (const auto& t : labels_) reflections_.push_back(t.to_permutation(top_.size()));
}

bool BInterval::contains(const SignedPermutation& s) const {
  if (s.size() != degree()) return false;
  return abs_length(s) + abs_length(s.inverse() * top_) == rank_;
}

int BInterval::rank_of(const SignedPermutation& s) const {
  if (!contains(s)) throw DomainError("element " + to_string(s) + " is not in the interval");
  return abs_length(s);
}

std::vector<BCover> BInterval::upper_covers(const SignedPermutation& s) const {
  std::vector<BCover> out;
  const int r = abs_length(s);
  for (std::size_t k = 0; k < reflections_.size(); ++k) {
    SignedPermutation next = s * reflections_[k];
    if (abs_length(next) != r + 1) continue;
    if (abs_length(next.inverse() * top_) != rank_ - r - 1) continue;
    out.push_back({labels_[k], next});
  }
  return out;
}

std::vector<SignedPermutation> BInterval::elements(int max_degree) const {
  const int n = degree();
  guard_degree(n, max_degree, "interval elements");
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> window(static_cast<std::size_t>(n));
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      for (int i = 0; i < n; ++i) window[i] = (signs >> i & 1u) ? -perm[i] : perm[i];
      SignedPermutation s = SignedPermutation::from_window(window);
      if (contains(s)) out.push_back(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const SignedPermutation& a, const SignedPermutation& b) {
    int ra = abs_length(a);
    int rb = abs_length(b);
    return ra != rb ? ra < rb : a < b;
  });
  return out;
}

void BInterval::for_each_maximal_chain(const std::function<bool(const MaximalChainB&)>& visit,
                                       int max_degree) const {
  guard_degree(degree(), max_degree, "maximal chain enumeration");
  CoverCache cache;
  MaximalChainB chain;
  chain.elements.reserve(static_cast<std::size_t>(rank_) + 1);
  chain.elements.push_back(SignedPermutation::identity(degree()));
  auto v = [&](const MaximalChainB& c) { return visit(c); };
  walk(*this, cache, chain, v);
}

BigCount BInterval::count_maximal_chains(int max_degree) const {
  unsigned long count = 0;
  for_each_maximal_chain(
      [&](const MaximalChainB&) {
        ++count;
        return true;
      },
      max_degree);
  return BigCount(count);
}

AnnularPoset::AnnularPoset(int p, int q) : p_(p), q_(q), interval_(checked_gamma(p, q)) {}

bool AnnularPoset::contains(const SignedPermutation& s) const { return interval_.contains(s); }

int AnnularPoset::rank(const SignedPermutation& s) const { return interval_.rank_of(s); }

bool AnnularPoset::is_connected(const SignedPermutation& s) const { return connectivity(s, p_) > 0; }

std::optional<CoverType> AnnularPoset::cover_type(const SignedPermutation& pi,
                                                  const SignedPermutation& sigma) const {
  if (!contains(pi) || !contains(sigma)) return std::nullopt;
  if (abs_length(sigma) != abs_length(pi) + 1) return std::nullopt;
  SignedPermutation step = pi.inverse() * sigma;
  if (abs_length(step) != 1) return std::nullopt;
  const BTransposition t = BTransposition::from_permutation(step);
  const auto orbit = orbits(pi);
  const int n = pi.size();
  auto same = [&](int x, int y) { return orbit[x + n] == orbit[y + n]; };
  auto is_zero = [&](int x) { return same(x, -x); };

  if (t.is_zero()) {
    if (!is_zero(t.first())) return CoverType::a;
    throw InternalError("cover through eps_i of a zero cycle");
  }
  const int i = t.first();
  const int j = t.second();
  const bool zi = is_zero(i);
  const bool zj = is_zero(j);
  if (!zi && !zj) {
    if (same(i, -j)) return CoverType::d;
    if (!same(i, j)) return CoverType::b;
  } else if (zi != zj) {
    return CoverType::c;
  }
  throw InternalError("cover " + to_string(pi) + " < " + to_string(sigma) + " matches no cover type");
}

std::vector<SignedPermutation> AnnularPoset::elements(int max_degree) const {
  return interval_.elements(max_degree);
}

void AnnularPoset::for_each_maximal_chain(const std::function<bool(const MaximalChainB&)>& visit,
                                          int max_degree) const {
  interval_.for_each_maximal_chain(visit, max_degree);
}

ChainKind AnnularPoset::classify(const MaximalChainB& chain) const {
  for (const auto& e : chain.elements) {
    if (is_connected(e)) return ChainKind::connected;
  }
  return ChainKind::disconnected;
}

ChainCounts AnnularPoset::count_chains(int max_degree, int threads) const {
  guard_degree(n(), max_degree, "maximal chain count");
  const SignedPermutation id = SignedPermutation::identity(n());
  const std::vector<BCover> first = interval_.upper_covers(id);

  struct Tally {
    unsigned long long connected = 0;
    unsigned long long disconnected = 0;
  };
  // Counts chains below `top` that start eps < first[k]; `hot` tracks how
  // many connected elements are on the current path.
  auto run_branch = [&](std::size_t k, Tally& tally) {
    CoverCache cache;
    std::unordered_map<SignedPermutation, bool> connected_memo;
    auto connected = [&](const SignedPermutation& s) {
      auto it = connected_memo.find(s);
      if (it == connected_memo.end()) it = connected_memo.emplace(s, is_connected(s)).first;
      return it->second;
    };
    std::function<void(const SignedPermutation&, int)> rec = [&](const SignedPermutation& s, int hot) {
      hot += connected(s) ? 1 : 0;
      if (s == gamma()) {
        (hot > 0 ? tally.connected : tally.disconnected) += 1;
        return;
      }
      std::vector<BCover> covers = cached_covers(interval_, cache, s);
      for (const auto& c : covers) rec(c.element, hot);
    };
    rec(first[k].element, 0);
  };

  std::vector<Tally> tallies(first.size());
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(first.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < first.size(); ++k) run_branch(k, tallies[k]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < first.size(); k += static_cast<std::size_t>(workers)) {
          run_branch(k, tallies[k]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  ChainCounts out{0, 0, 0};
  for (const auto& t : tallies) {
    out.connected += BigCount(static_cast<unsigned long>(t.connected));
    out.disconnected += BigCount(static_cast<unsigned long>(t.disconnected));
  }
  out.total = out.connected + out.disconnected;
  return out;
}

void AnnularPoset::for_each_multichain(
    std::span<const int> rank_profile,
    const std::function<void(const std::vector<SignedPermutation>&, bool)>& visit, int max_degree) const {
  if (rank_profile.empty()) throw std::invalid_argument("rank profile must be nonempty");
  for (std::size_t i = 0; i < rank_profile.size(); ++i) {
    if (rank_profile[i] < 0 || rank_profile[i] > n() || (i > 0 && rank_profile[i] < rank_profile[i - 1])) {
      throw std::invalid_argument("rank profile must be weakly increasing within [0, p+q]");
    }
  }
  std::vector<std::vector<SignedPermutation>> by_rank(static_cast<std::size_t>(n()) + 1);
  for (auto& e : elements(max_degree)) by_rank[static_cast<std::size_t>(abs_length(e))].push_back(e);

  std::vector<SignedPermutation> tuple;
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool hot) {
    if (i == rank_profile.size()) {
      visit(tuple, hot);
      return;
    }
    for (const auto& e : by_rank[static_cast<std::size_t>(rank_profile[i])]) {
      if (!tuple.empty() && !abs_leq(tuple.back(), e)) continue;
      tuple.push_back(e);
      rec(i + 1, hot || is_connected(e));
      tuple.pop_back();
    }
  };
  rec(0, false);
}

std::vector<BTransposition> phi(const MaximalChainB& chain) {
  std::vector<BTransposition> out;
  for (std::size_t i = 1; i < chain.elements.size(); ++i) {
    SignedPermutation step = chain.elements[i - 1].inverse() * chain.elements[i];
    if (abs_length(step) != 1) throw DomainError("consecutive chain elements do not differ by a reflection");
    out.push_back(BTransposition::from_permutation(step));
  }
  return out;
}

MaximalChainB phi_inverse(std::span<const BTransposition> ts, const BInterval& interval) {
  const int n = interval.degree();
  if (static_cast<int>(ts.size()) != interval.rank()) {
    throw DomainError("a maximal chain needs exactly " + std::to_string(interval.rank()) + " transpositions");
  }
  MaximalChainB chain;
  chain.elements.push_back(SignedPermutation::identity(n));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    SignedPermutation next = chain.elements.back() * ts[i].to_permutation(n);
    if (!interval.contains(next) || abs_length(next) != static_cast<int>(i) + 1) {
      throw DomainError("partial product " + std::to_string(i + 1) + " leaves the interval or skips a rank");
    }
    chain.elements.push_back(next);
  }
  if (chain.elements.back() != interval.top()) throw InternalError("saturated chain missed the top element");
  return chain;
}

MaximalChainB phi_inverse(std::span<const BTransposition> ts, const AnnularPoset& poset) {
  return phi_inverse(ts, poset.interval());
}

SignedPermutation outer_gamma(int p, int q) {
  std::vector<BCycle> cs{{BCycle::Kind::zero, {}}};
  for (int i = 1; i <= p; ++i) cs[0].entries.push_back(i);
  return SignedPermutation::from_cycles(p + q, cs);
}

SignedPermutation inner_gamma(int p, int q) {
  std::vector<BCycle> cs{{BCycle::Kind::zero, {}}};
  for (int i = p + 1; i <= p + q; ++i) cs[0].entries.push_back(i);
  return SignedPermutation::from_cycles(p + q, cs);
}

MaximalChainB shuffle_chains(const MaximalChainB& c1, const MaximalChainB& c2, std::span<const int> positions,
                             const AnnularPoset& poset) {
  const int p = poset.p();
  const int q = poset.q();
  const BInterval outer(outer_gamma(p, q));
  const BInterval inner(inner_gamma(p, q));
  auto check_chain = [](const MaximalChainB& c, const BInterval& iv, const char* which) {
    if (static_cast<int>(c.elements.size()) != iv.rank() + 1 || c.elements.front() != SignedPermutation::identity(iv.degree()) ||
        c.elements.back() != iv.top()) {
      throw DomainError(std::string(which) + " is not a maximal chain of its block interval");
    }
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      if (!iv.contains(c.elements[i]) || abs_length(c.elements[i]) != static_cast<int>(i)) {
        throw DomainError(std::string(which) + " is not saturated in its block interval");
      }
    }
  };
  check_chain(c1, outer, "first chain");
  check_chain(c2, inner, "second chain");
  if (static_cast<int>(positions.size()) != p) throw DomainError("positions must select exactly p slots");
  std::vector<bool> slot(static_cast<std::size_t>(p + q) + 1, false);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    int x = positions[k];
    if (x < 1 || x > p + q || (k > 0 && x <= positions[k - 1])) {
      throw DomainError("positions must be increasing within 1..p+q");
    }
    slot[static_cast<std::size_t>(x)] = true;
  }
  const auto t1 = phi(c1);
  const auto t2 = phi(c2);
  std::vector<BTransposition> merged;
  std::size_t a = 0;
  std::size_t b = 0;
  for (int x = 1; x <= p + q; ++x) merged.push_back(slot[static_cast<std::size_t>(x)] ? t1[a++] : t2[b++]);
  MaximalChainB chain = phi_inverse(merged, poset);
  if (poset.classify(chain) != ChainKind::disconnected) throw InternalError("shuffle produced a connected chain");
  return chain;
}

BigCount nc_b_chain_count(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  guard_degree(n, max_n, "nc_b_chain_count");
  return BInterval(gamma_pq(n, 0)).count_maximal_chains(max_n);
}

}  // namespace annular
