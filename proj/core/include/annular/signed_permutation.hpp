#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annular/permutation.hpp"

namespace annular {

/// A cycle of a signed permutation in one of the two paired notations.
///
/// kind == zero:   [a1 ... ak] = (a1 ... ak -a1 ... -ak)
/// kind == paired: ((a1 ... ak)) = (a1 ... ak)(-a1 ... -ak)
///
/// Canonical form puts the entry of smallest absolute value first, with a
/// positive sign.
struct BCycle {
  enum class Kind { zero, paired };

  Kind kind = Kind::paired;
  std::vector<int> entries;

  bool is_zero() const { return kind == Kind::zero; }
  friend bool operator==(const BCycle&, const BCycle&) = default;
};

/// An element of B_n in window notation: the images of 1..n.
/// The negative side is implied by sigma(-i) = -sigma(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(int n);
  /// `window[i-1]` is sigma(i). Throws std::invalid_argument unless the
  /// absolute values form a bijection of {1,...,n}.
  static SignedPermutation from_window(std::span<const int> window);
  static SignedPermutation from_cycles(int n, const std::vector<BCycle>& cycles);
  /// Parses "[1 2][3]((4 -5))"; "e" or "" is the identity.
  static SignedPermutation parse(int n, std::string_view text);

  int size() const { return n_; }
  /// sigma(i) for i in {+-1, ..., +-n}.
  int operator()(int i) const {
    return i > 0 ? img_[static_cast<std::size_t>(i - 1)] : -img_[static_cast<std::size_t>(-i - 1)];
  }

  SignedPermutation inverse() const;
  std::vector<int> window() const;
  bool is_identity() const;

  /// Right factor acts first, as for Permutation.
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  std::size_t hash() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int8_t, kMaxDegree> img_{};
};

/// A reflection of B_n: either eps_i = [i] or ((i j)) with 1 <= i < |j|.
class BTransposition {
 public:
  enum class Kind { zero, paired };

  /// eps_i = [i].
  static BTransposition zero(int i);
  /// ((i j)) for |i| != |j|, normalised so that the first entry is positive
  /// and smaller in absolute value.
  static BTransposition paired(int i, int j);
  /// Recovers the reflection from a signed permutation; throws
  /// std::invalid_argument if it is not one.
  static BTransposition from_permutation(const SignedPermutation& s);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  int first() const { return i_; }
  /// Second entry of ((i j)); 0 for eps_i.
  int second() const { return j_; }

  SignedPermutation to_permutation(int n) const;
  /// Meets both {+-1..+-p} and {+-(p+1)..+-(p+q)}; eps_i never does.
  bool is_connected(int p) const;
  /// True if i or j equals x in absolute value.
  bool touches(int x) const;

  friend auto operator<=>(const BTransposition&, const BTransposition&) = default;
  friend bool operator==(const BTransposition&, const BTransposition&) = default;

 private:
  BTransposition(Kind k, int i, int j) : kind_(k), i_(i), j_(j) {}
  Kind kind_;
  int i_;
  int j_;
};

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

/// The cycles of sigma on {+-1..+-n}, paired cycles merged, in canonical form
/// and sorted by smallest absolute entry. Fixed points appear as ((i)).
std::vector<BCycle> b_cycles(const SignedPermutation& sigma);

/// All n^2 reflections: eps_1..eps_n, then ((i j)), ((i -j)) for i < j in
/// lexicographic order of (i, j).
std::vector<BTransposition> b_transpositions(int n);

int paired_cycle_count(const SignedPermutation& sigma);
int zero_cycle_count(const SignedPermutation& sigma);

/// n minus the number of paired nonzero cycles.
int abs_length(const SignedPermutation& sigma);
bool abs_leq(const SignedPermutation& pi, const SignedPermutation& sigma);

/// sigma^+(i) = |sigma(i)| for i > 0.
SignedPermutation plus_map(const SignedPermutation& sigma);
/// |sigma|(i) = |sigma(i)|, as an element of S_n.
Permutation abs_map(const SignedPermutation& sigma);

/// ((i j)) -> ((i -j)). Throws DomainError on eps_i.
BTransposition bar(const BTransposition& t);

bool is_connected(const BCycle& cycle, int p);
/// Number of connected paired nonzero cycles; zero cycles never count.
int connectivity(const SignedPermutation& sigma, int p);

/// [1 ... p][p+1 ... p+q].
SignedPermutation gamma_pq(int p, int q);
/// ((1 ... p))((p+1 ... p+q)).
SignedPermutation beta_pq(int p, int q);

std::string to_string(const BCycle& c);
/// Bracket notation with fixed ((i)) omitted; the identity prints as "e".
std::string to_string(const SignedPermutation& sigma);
std::string to_string(const BTransposition& t);

}  // namespace annular

template <>
struct std::hash<annular::SignedPermutation> {
  std::size_t operator()(const annular::SignedPermutation& s) const noexcept { return s.hash(); }
};
