#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "annular/closed_forms.hpp"
#include "annular/marked_poset.hpp"
#include "annular/permutation.hpp"

namespace annular {

enum class EncodingFlavor { typeA, typeB };

/// (c, d; L^E, R^E_1..R^E_m; L^I, R^I_1..R^I_m). Sets are sorted vectors.
struct ChainEncoding {
  int c = 0;
  int d = 0;
  std::vector<int> LE;
  std::vector<std::vector<int>> REs;
  std::vector<int> LI;
  std::vector<std::vector<int>> RIs;
  EncodingFlavor flavor = EncodingFlavor::typeA;

  friend auto operator<=>(const ChainEncoding&, const ChainEncoding&) = default;
  friend bool operator==(const ChainEncoding&, const ChainEncoding&) = default;
};

/// c >= 1, d in range for the flavor, sets inside their blocks, and
/// |L^E| = sum |R^E_i| + c, |L^I| = sum |R^I_i| - c.
bool satisfies_invariants(const ChainEncoding& enc, int p, int q);

/// Encoding of the one-element connected multichain (pi, 0). Throws
/// DomainError unless pi is connected and (pi, 0) lies in the marked poset.
ChainEncoding encode_connected_perm_A(const Permutation& pi, int p, int q);

/// The left-to-right word of the parenthesised sequence built for pi before
/// the inner entries are removed: ints are entries, '(' is -1 and ')' is 0.
std::vector<int> encoding_word(const Permutation& pi, int p, int q);

/// Encodings of every connected (pi, 0), inverted by lookup.
class EncodingTable {
 public:
  EncodingTable(int p, int q, int max_degree = 7);

  std::size_t size() const { return by_perm_.size(); }
  /// True iff no two permutations share an encoding.
  bool injective() const { return by_code_.size() == by_perm_.size(); }
  std::optional<Permutation> decode(const ChainEncoding& enc) const;
  const std::map<Permutation, ChainEncoding>& entries() const { return by_perm_; }

 private:
  std::map<Permutation, ChainEncoding> by_perm_;
  std::map<ChainEncoding, Permutation> by_code_;
};

/// Number of tuples whose sizes are forced by the rank profile
/// r_1 <= ... <= r_m: |R_i^E| + |R_i^I| = r_{i+1} - r_i, last against p+q.
/// Each c contributes with multiplicity c (typeA) or 2c (typeB).
BigCount count_tuples(int p, int q, std::span<const int> rank_profile, EncodingFlavor flavor);

/// (0, 1, ..., p+q).
std::vector<int> maximal_profile(int p, int q);

struct MultichainComparison {
  BigCount b_connected;
  BigCount marked_connected;
  BigCount tuples_A;
  BigCount tuples_B;
  /// b_connected == 2 * marked_connected.
  bool two_to_one = false;
  /// Both enumerations agree with the tuple counts.
  bool tuples_match = false;
};

/// Enumerates connected multichains with the given profile on both sides.
MultichainComparison verify_two_to_one_multichain(int p, int q, std::span<const int> rank_profile,
                                                  int max_degree = 6);

}  // namespace annular
