#pragma once

#include <functional>
#include <span>
#include <vector>

#include "annular/annular_poset.hpp"
#include "annular/closed_forms.hpp"
#include "annular/permutation.hpp"
#include "annular/signed_permutation.hpp"

namespace annular {

/// A word of type A transpositions, multiplied right factor first.
using WordA = std::vector<Permutation>;
/// A word of type B reflections.
using WordB = std::vector<BTransposition>;

/// Longest word the depth-first enumerators accept by default.
inline constexpr int kMaxWordLength = 8;
/// Largest p+q for the type B factorization enumerators.
inline constexpr int kMaxFactorizationDegree = 5;

// --- type A: minimal transitive factorizations F_lambda ---------------------

/// Length n + l - 2, every factor a transposition, product alpha_lambda,
/// and the factors connect {1..n}.
bool is_mtf(std::span<const Permutation> word, const Partition& lambda);
/// The same conditions against an arbitrary target: n + #cycles - 2 factors.
bool is_mtf_of(std::span<const Permutation> word, const Permutation& target);

/// Depth-first enumeration of F_lambda in lexicographic order of the factor
/// sequence. Branches are cut when the remaining steps cannot reach the
/// target (length or parity) or cannot join the remaining components.
/// The visitor returns false to stop.
void for_each_mtf(const Partition& lambda, const std::function<bool(const WordA&)>& visit,
                  int max_length = kMaxWordLength);
BigCount count_mtf_enumerate(const Partition& lambda, int max_length = kMaxWordLength);

/// |F_lambda| from transposition walk counts per cycle block, with the
/// non-transitive words removed by decomposing on the component that
/// contains the first cycle. Exact; guarded by n <= max_n.
BigCount count_mtf_dp(const Partition& lambda, int max_n = 7);

// --- type B: F^(B)_{(p,q)} and F^+_{(p,q)} ----------------------------------

/// p+q reflections with product gamma_{p,q} whose shadows |t_i| generate S_{p+q}.
bool is_FB(std::span<const BTransposition> word, int p, int q);
/// p+q positive reflections ((i j)), 0 < i < j, with product beta_{p,q}
/// whose shadows generate S_{p+q}.
bool is_Fplus(std::span<const BTransposition> word, int p, int q);

void for_each_FB(int p, int q, const std::function<bool(const WordB&)>& visit,
                 int max_degree = kMaxFactorizationDegree);
void for_each_Fplus(int p, int q, const std::function<bool(const WordB&)>& visit,
                    int max_degree = kMaxFactorizationDegree);

/// Componentwise (.)^+ on a member of F^(B). Lands in F^+.
WordB plus_tuple(std::span<const BTransposition> word, int p, int q);
/// Componentwise ((j k)) -> (j k) on a member of F^+. Lands in F_{(p,q)}.
WordA abs_tuple(std::span<const BTransposition> word, int p, int q);
/// Inverse of abs_tuple: (j k) -> ((j k)) with j < k.
WordB positive_from_abs(std::span<const Permutation> word, int p, int q);

/// Bars every connected factor of a member of F^(B).
WordB toggle_connected(std::span<const BTransposition> word, int p, int q);

/// A member of F^(B) whose (.)^+ image is the given member of F^+.
///
/// Starts from gamma = eps_{p+1} eps_1 s_1 ... s_{p+q} and walks a shortest
/// path 1 = a_0, ..., a_k = p+1 through the factor supports (breadth first,
/// ties broken by factor index). Each step a -> b through the factor
/// s_l = ((a b)) rewrites eps_a s_1 ... s_{p+q} as eps_b followed by the
/// word with s_l barred and every earlier factor that meets exactly one of
/// a, b barred. The final eps_{p+1} eps_{p+1} cancels.
WordB lift_positive(std::span<const BTransposition> word, int p, int q);

/// The two members of F^(B) over a member of F^+, sorted.
std::vector<WordB> preimages_under_plus(std::span<const BTransposition> word, int p, int q);

/// {i : delta(i) = -beta_{p,q}(i)}, for delta with delta^+ = beta_{p,q}.
std::vector<int> ind_set(const SignedPermutation& delta, int p, int q);
/// {delta : delta^+ = beta_{p,q}, |ind(delta)| even}, sorted.
std::vector<SignedPermutation> enumerate_B_beta(int p, int q);
/// Every word t with t_i^+ = s_i for all i (2^{p+q} of them), sorted.
std::vector<WordB> enumerate_F_sigma(std::span<const BTransposition> word, int p, int q);
/// The words of enumerate_F_sigma whose product is delta.
std::vector<WordB> F_sigma_delta(std::span<const BTransposition> word, const SignedPermutation& delta, int p,
                                 int q);

/// |phi(C)^+| for a connected maximal chain C. Throws DomainError on a
/// disconnected chain.
WordA two_to_one_composite(const MaximalChainB& chain, const AnnularPoset& poset);

/// Product of reflections in B_n, right factor first.
SignedPermutation product(std::span<const BTransposition> word, int n);
Permutation product(std::span<const Permutation> word, int n);

/// Number of words of each length in the transpositions of S_m whose
/// product is a given element: dynamic programming over the Cayley graph.
class TranspositionWalkTable {
 public:
  TranspositionWalkTable(int m, int max_length);

  int degree() const { return m_; }
  int max_length() const { return max_length_; }
  const BigCount& count(const Permutation& target, int length) const;

 private:
  int m_;
  int max_length_;
  std::vector<Permutation> elements_;
  // counts_[length][index of element]
  std::vector<std::vector<BigCount>> counts_;
  std::size_t index_of(const Permutation& g) const;
};

}  // namespace annular
