#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "annular/closed_forms.hpp"
#include "annular/signed_permutation.hpp"

namespace annular {

/// Default size limits for type B enumerations.
inline constexpr int kMaxElementDegree = 7;
inline constexpr int kMaxChainDegree = 6;

/// A saturated chain eps = pi_0 < pi_1 < ... < pi_r = top.
struct MaximalChainB {
  std::vector<SignedPermutation> elements;
  friend bool operator==(const MaximalChainB&, const MaximalChainB&) = default;
};

/// An upper cover sigma = pi * t reached through the reflection t.
struct BCover {
  BTransposition label;
  SignedPermutation element;
};

/// The interval [eps, top] of B_n under absolute order.
class BInterval {
 public:
  explicit BInterval(SignedPermutation top);

  const SignedPermutation& top() const { return top_; }
  int degree() const { return top_.size(); }
  int rank() const { return rank_; }

  bool contains(const SignedPermutation& s) const;
  /// Absolute length of s; throws DomainError if s lies outside the interval.
  int rank_of(const SignedPermutation& s) const;

  /// Upper covers of s inside the interval, in the order of b_transpositions.
  std::vector<BCover> upper_covers(const SignedPermutation& s) const;

  /// Elements sorted by (rank, window). Scans all of B_n; throws GuardError
  /// when the degree exceeds max_degree.
  std::vector<SignedPermutation> elements(int max_degree = kMaxElementDegree) const;

  /// Visits every maximal chain exactly once in lexicographic order of the
  /// cover labels. The visitor returns false to stop early.
  void for_each_maximal_chain(const std::function<bool(const MaximalChainB&)>& visit,
                              int max_degree = kMaxChainDegree) const;

  /// Number of maximal chains, counted by walking every chain.
  BigCount count_maximal_chains(int max_degree = kMaxChainDegree) const;

 private:
  SignedPermutation top_;
  int rank_ = 0;
  std::vector<SignedPermutation> reflections_;
  std::vector<BTransposition> labels_;
};

/// Cover relations of the annular interval, by how cycles merge or split:
///  a: pi^{-1} sigma = eps_i, turning a paired cycle into a zero cycle;
///  b: ((i j)) merging two paired nonzero cycles;
///  c: ((i j)) merging a paired nonzero cycle into a zero cycle;
///  d: ((i j)) splitting a paired nonzero cycle into two zero cycles.
enum class CoverType { a, b, c, d };

enum class ChainKind { connected, disconnected };

struct ChainCounts {
  BigCount total;
  BigCount connected;
  BigCount disconnected;
};

/// The type B annular noncrossing permutations [eps, gamma_{p,q}].
class AnnularPoset {
 public:
  AnnularPoset(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  const SignedPermutation& gamma() const { return interval_.top(); }
  const BInterval& interval() const { return interval_; }

  bool contains(const SignedPermutation& s) const;
  /// (p+q) - #paired nonzero cycles; throws DomainError outside the poset.
  int rank(const SignedPermutation& s) const;
  /// connectivity(s, p) > 0.
  bool is_connected(const SignedPermutation& s) const;

  /// The cover type if sigma covers pi, nothing otherwise.
  std::optional<CoverType> cover_type(const SignedPermutation& pi, const SignedPermutation& sigma) const;

  std::vector<SignedPermutation> elements(int max_degree = kMaxElementDegree) const;

  void for_each_maximal_chain(const std::function<bool(const MaximalChainB&)>& visit,
                              int max_degree = kMaxChainDegree) const;
  ChainKind classify(const MaximalChainB& chain) const;
  /// Walks every maximal chain; `threads` > 1 splits the walk by first cover.
  ChainCounts count_chains(int max_degree = kMaxElementDegree, int threads = 1) const;

  /// Visits weakly increasing tuples pi_1 <= ... <= pi_m with
  /// rank(pi_i) = rank_profile[i], together with a flag telling whether
  /// some pi_i is connected.
  void for_each_multichain(std::span<const int> rank_profile,
                           const std::function<void(const std::vector<SignedPermutation>&, bool)>& visit,
                           int max_degree = kMaxElementDegree) const;

 private:
  int p_;
  int q_;
  BInterval interval_;
};

/// tau_i = pi_{i-1}^{-1} pi_i, so that pi_i = tau_1 ... tau_i.
std::vector<BTransposition> phi(const MaximalChainB& chain);
/// Partial products of ts; throws DomainError unless they form a maximal
/// chain of the interval.
MaximalChainB phi_inverse(std::span<const BTransposition> ts, const BInterval& interval);
MaximalChainB phi_inverse(std::span<const BTransposition> ts, const AnnularPoset& poset);

/// [1 ... p] and [p+1 ... p+q] as elements of B_{p+q}.
SignedPermutation outer_gamma(int p, int q);
SignedPermutation inner_gamma(int p, int q);

/// Interleaves phi(c1) (a maximal chain of [eps, outer_gamma]) and phi(c2)
/// (of [eps, inner_gamma]); `positions` lists the 1-based slots, in
/// increasing order, that receive c1's transpositions.
MaximalChainB shuffle_chains(const MaximalChainB& c1, const MaximalChainB& c2,
                             std::span<const int> positions, const AnnularPoset& poset);

/// Maximal chains of [eps, [1 ... n]] in B_n, by enumeration.
BigCount nc_b_chain_count(int n, int max_n = kMaxChainDegree);

}  // namespace annular
