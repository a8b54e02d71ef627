#include "annular/encoding.hpp"

#include <algorithm>
#include <string>

#include "annular/annular_poset.hpp"
#include "annular/errors.hpp"

namespace annular {

namespace {

constexpr int kLeft = -1;
constexpr int kRight = 0;

bool sorted_subset(const std::vector<int>& s, int lo, int hi) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < lo || s[i] > hi || (i > 0 && s[i] <= s[i - 1])) return false;
  }
  return true;
}

// Rotates a connected cycle into (g_1 .. g_u, h_1 .. h_v); throws unless the
// outer entries form one cyclic run.
Cycle split_connected(const Cycle& c, int p) {
  const std::size_t k = c.size();
  std::size_t start = k;
  for (std::size_t i = 0; i < k; ++i) {
    const bool here_outer = c[i] <= p;
    const bool prev_outer = c[(i + k - 1) % k] <= p;
    if (here_outer && !prev_outer) {
      if (start != k) throw DomainError("connected cycle with interleaved blocks");
      start = i;
    }
  }
  if (start == k) throw InternalError("connected cycle without a block boundary");
  Cycle out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(c[(start + i) % k]);
  return out;
}

struct Step2 {
  int a = 0;
  int b = 0;
  std::vector<int> LE, RE, LI, RI;
  std::vector<int> sequence;
};

Step2 run_steps_1_2(const Permutation& pi, int p, int q) {
  MarkedPoset poset(p, q);
  if (pi.size() != p + q) throw DomainError("permutation has the wrong degree");
  if (!poset.is_connected(pi)) throw DomainError("encoding expects a connected permutation");
  if (!poset.is_element(pi, 0)) throw DomainError("(pi, 0) is not in the marked poset: " + to_string(pi));

  const auto cs = cycles(pi);
  Step2 s;
  const Cycle* cmax = nullptr;
  for (const auto& c : cs) {
    if (!is_connected(Permutation::from_cycles(p + q, {c}), p)) continue;
    if (!cmax || *std::max_element(c.begin(), c.end()) > *std::max_element(cmax->begin(), cmax->end())) cmax = &c;
  }
  const Cycle top = split_connected(*cmax, p);
  s.a = top.front();
  s.b = top.back();

  auto outer_key = [&](int x) { return (x - s.a + p) % p; };
  auto inner_key = [&](int x) { return ((x - s.b - 1) % q + q) % q; };

  for (const auto& c : cs) {
    const bool has_outer = std::any_of(c.begin(), c.end(), [&](int x) { return x <= p; });
    const bool has_inner = std::any_of(c.begin(), c.end(), [&](int x) { return x > p; });
    if (has_outer && has_inner) {
      const Cycle split = split_connected(c, p);
      s.LE.push_back(split.front());
      s.RI.push_back(split.back());
    } else if (has_outer) {
      auto [lo, hi] = std::minmax_element(c.begin(), c.end(),
                                          [&](int x, int y) { return outer_key(x) < outer_key(y); });
      s.LE.push_back(*lo);
      s.RE.push_back(*hi);
    } else {
      auto [lo, hi] = std::minmax_element(c.begin(), c.end(),
                                          [&](int x, int y) { return inner_key(x) < inner_key(y); });
      s.LI.push_back(*lo);
      s.RI.push_back(*hi);
    }
  }
  for (auto* v : {&s.LE, &s.RE, &s.LI, &s.RI}) std::sort(v->begin(), v->end());

  for (int i = 0; i < p; ++i) s.sequence.push_back((s.a - 1 + i) % p + 1);
  for (int i = 0; i < q; ++i) s.sequence.push_back(p + (s.b - p + i) % q + 1);
  return s;
}

std::vector<int> parenthesize(const Step2& s, bool outer_only, int p) {
  auto has = [](const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); };
  std::vector<int> word;
  for (int x : s.sequence) {
    if (outer_only && x > p) continue;
    if (has(s.LE, x) || has(s.LI, x)) word.push_back(kLeft);
    word.push_back(x);
    if (has(s.RE, x) || has(s.RI, x)) word.push_back(kRight);
  }
  return word;
}

void check_profile(std::span<const int> profile, int n) {
  if (profile.empty()) throw std::invalid_argument("rank profile must be nonempty");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0 || profile[i] > n || (i > 0 && profile[i] < profile[i - 1])) {
      throw std::invalid_argument("rank profile must be weakly increasing within [0, p+q]");
    }
  }
}

}  // namespace

bool satisfies_invariants(const ChainEncoding& enc, int p, int q) {
  if (enc.c < 1 || enc.d < 1) return false;
  if (enc.d > (enc.flavor == EncodingFlavor::typeA ? enc.c : 2 * enc.c)) return false;
  if (enc.REs.empty() || enc.REs.size() != enc.RIs.size()) return false;
  if (!sorted_subset(enc.LE, 1, p) || !sorted_subset(enc.LI, p + 1, p + q)) return false;
  std::size_t re = 0;
  std::size_t ri = 0;
  for (std::size_t i = 0; i < enc.REs.size(); ++i) {
    if (!sorted_subset(enc.REs[i], 1, p) || !sorted_subset(enc.RIs[i], p + 1, p + q)) return false;
    re += enc.REs[i].size();
    ri += enc.RIs[i].size();
  }
  const long c = enc.c;
  return static_cast<long>(enc.LE.size()) == static_cast<long>(re) + c &&
         static_cast<long>(enc.LI.size()) == static_cast<long>(ri) - c;
}

std::vector<int> encoding_word(const Permutation& pi, int p, int q) {
  return parenthesize(run_steps_1_2(pi, p, q), false, p);
}

ChainEncoding encode_connected_perm_A(const Permutation& pi, int p, int q) {
  const Step2 s = run_steps_1_2(pi, p, q);

  const auto full = parenthesize(s, false, p);
  if (std::count(full.begin(), full.end(), kLeft) != std::count(full.begin(), full.end(), kRight)) {
    throw InternalError("unbalanced parenthesization for " + to_string(pi));
  }

  std::vector<int> open;
  for (int tok : parenthesize(s, true, p)) {
    if (tok == kLeft) {
      open.push_back(-1);
    } else if (tok == kRight) {
      if (open.empty()) throw InternalError("unmatched right parenthesis for " + to_string(pi));
      open.pop_back();
    } else {
      if (!open.empty() && open.back() == -1) open.back() = tok;
    }
  }
  std::vector<int> js(open.begin(), open.end());
  std::sort(js.begin(), js.end());
  auto it = std::find(js.begin(), js.end(), s.a);
  if (it == js.end()) throw InternalError("left parenthesis of a is matched for " + to_string(pi));

  ChainEncoding enc;
  enc.c = static_cast<int>(js.size());
  enc.d = static_cast<int>(it - js.begin()) + 1;
  enc.LE = s.LE;
  enc.REs = {s.RE};
  enc.LI = s.LI;
  enc.RIs = {s.RI};
  enc.flavor = EncodingFlavor::typeA;
  return enc;
}

EncodingTable::EncodingTable(int p, int q, int max_degree) {
  MarkedPoset poset(p, q);
  for (const auto& e : poset.elements(max_degree)) {
    if (e.mark != 0 || !poset.is_connected(e.perm)) continue;
    ChainEncoding enc = encode_connected_perm_A(e.perm, p, q);
    by_code_.emplace(enc, e.perm);
    by_perm_.emplace(e.perm, std::move(enc));
  }
}

std::optional<Permutation> EncodingTable::decode(const ChainEncoding& enc) const {
  auto it = by_code_.find(enc);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

BigCount count_tuples(int p, int q, std::span<const int> rank_profile, EncodingFlavor flavor) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  const int n = p + q;
  check_profile(rank_profile, n);
  const std::size_t m = rank_profile.size();

  // ways[E][F]: choices of R^E_i, R^I_i with the forced sizes and totals E, F.
  std::vector<std::vector<BigCount>> ways(1, std::vector<BigCount>(1, 1));
  for (std::size_t i = 0; i < m; ++i) {
    const int size = (i + 1 < m ? rank_profile[i + 1] : n) - rank_profile[i];
    const std::size_t rows = ways.size() + static_cast<std::size_t>(size);
    std::vector<std::vector<BigCount>> next(rows, std::vector<BigCount>(rows, 0));
    for (std::size_t E = 0; E < ways.size(); ++E) {
      for (std::size_t F = 0; F < ways[E].size(); ++F) {
        if (ways[E][F] == 0) continue;
        for (int e = 0; e <= size; ++e) {
          const BigCount choose = binomial(p, e) * binomial(q, size - e);
          if (choose == 0) continue;
          next[E + static_cast<std::size_t>(e)][F + static_cast<std::size_t>(size - e)] += ways[E][F] * choose;
        }
      }
    }
    ways = std::move(next);
  }

  const int weight = flavor == EncodingFlavor::typeA ? 1 : 2;
  BigCount total = 0;
  for (std::size_t E = 0; E < ways.size(); ++E) {
    for (std::size_t F = 0; F < ways[E].size(); ++F) {
      if (ways[E][F] == 0) continue;
      for (int c = 1; c <= p; ++c) {
        total += ways[E][F] * (weight * c) * binomial(p, static_cast<int>(E) + c) *
                 binomial(q, static_cast<int>(F) - c);
      }
    }
  }
  return total;
}

std::vector<int> maximal_profile(int p, int q) {
  std::vector<int> out;
  for (int r = 0; r <= p + q; ++r) out.push_back(r);
  return out;
}

MultichainComparison verify_two_to_one_multichain(int p, int q, std::span<const int> rank_profile,
                                                  int max_degree) {
  check_profile(rank_profile, p + q);
  MultichainComparison out;
  unsigned long b_count = 0;
  AnnularPoset(p, q).for_each_multichain(
      rank_profile, [&](const std::vector<SignedPermutation>&, bool hot) { b_count += hot ? 1 : 0; }, max_degree);
  unsigned long a_count = 0;
  MarkedPoset(p, q).for_each_multichain(
      rank_profile, [&](const std::vector<MarkedElement>&, bool hot) { a_count += hot ? 1 : 0; }, max_degree);
  out.b_connected = b_count;
  out.marked_connected = a_count;
  out.tuples_A = count_tuples(p, q, rank_profile, EncodingFlavor::typeA);
  out.tuples_B = count_tuples(p, q, rank_profile, EncodingFlavor::typeB);
  out.two_to_one = out.b_connected == 2 * out.marked_connected;
  out.tuples_match = out.tuples_A == out.marked_connected && out.tuples_B == out.b_connected;
  return out;
}

}  // namespace annular
