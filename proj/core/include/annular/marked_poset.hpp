#pragma once

#include <functional>
#include <span>
#include <vector>

#include "annular/closed_forms.hpp"
#include "annular/permutation.hpp"

namespace annular {

/// A pair (pi, z) of the marked type A annular poset.
struct MarkedElement {
  Permutation perm;
  int mark = 0;

  friend auto operator<=>(const MarkedElement&, const MarkedElement&) = default;
  friend bool operator==(const MarkedElement&, const MarkedElement&) = default;
};

/// A saturated chain (eps, 0) < ... < (alpha_{p,q}, 1).
struct MarkedChain {
  std::vector<MarkedElement> elements;
  friend bool operator==(const MarkedChain&, const MarkedChain&) = default;
};

/// The marked annular noncrossing permutations of type A over the blocks
/// {1..p} and {p+1..p+q}.
///
/// (pi, z) is an element when
///   - pi disconnected: l(alpha) = l(pi) + l(pi^{-1} alpha);
///   - pi connected:    l(alpha) = l(pi) + l(pi^{-1} alpha) - 2;
///   - z = 1 only for disconnected pi.
/// Rank is l(pi) + 2z, so the poset runs from (eps, 0) to (alpha, 1).
class MarkedPoset {
 public:
  MarkedPoset(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  const Permutation& alpha() const { return alpha_; }

  bool is_connected(const Permutation& pi) const { return annular::is_connected(pi, p_); }
  bool is_element(const Permutation& pi, int z) const;
  bool is_element(const MarkedElement& e) const { return is_element(e.perm, e.mark); }
  bool leq(const MarkedElement& a, const MarkedElement& b) const;
  /// l(pi) + 2z; throws DomainError for non-elements.
  int rank(const MarkedElement& e) const;

  MarkedElement bottom() const;
  MarkedElement top() const;

  /// Upper covers, all of the form (pi t, w) for a transposition t, listed
  /// in lexicographic order of t.
  std::vector<MarkedElement> upper_covers(const MarkedElement& e) const;

  /// Every element, sorted by (rank, perm, mark). Guarded by max_degree.
  std::vector<MarkedElement> elements(int max_degree = 7) const;

  void for_each_maximal_chain(const std::function<bool(const MarkedChain&)>& visit, int max_degree = 6) const;
  BigCount count_maximal_chains(int max_degree = 7) const;

  /// Weakly increasing tuples with the given ranks and a flag telling
  /// whether the tuple contains a connected permutation.
  void for_each_multichain(std::span<const int> rank_profile,
                           const std::function<void(const std::vector<MarkedElement>&, bool)>& visit,
                           int max_degree = 7) const;

  /// Elements whose permutation is disconnected, by enumeration.
  BigCount disconnected_element_count(int max_degree = 7) const;

 private:
  int p_;
  int q_;
  Permutation alpha_;
  std::vector<Permutation> transpositions_;
};

/// t_i = pi_{i-1}^{-1} pi_i for every step of the chain.
std::vector<Permutation> marked_chain_to_factorization(const MarkedChain& chain, const MarkedPoset& poset);
/// Partial products with the mark switched on at the last connected
/// factor. Throws DomainError unless the word lies in F_{(p,q)}.
MarkedChain factorization_to_marked_chain(std::span<const Permutation> word, const MarkedPoset& poset);

}  // namespace annular
