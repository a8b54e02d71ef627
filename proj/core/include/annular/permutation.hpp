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

namespace annular {

/// Largest ground set handled by the fixed-capacity permutation types.
inline constexpr int kMaxDegree = 16;

using Cycle = std::vector<int>;

/// An element of S_n stored as an image table on {1,...,n}.
///
/// Products follow one global convention: `a * b` is the map i -> a(b(i)),
/// so the right factor acts first and a word t1 t2 ... tk is evaluated
/// from tk towards t1.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// `images[i-1]` is the image of i. Throws std::invalid_argument unless
  /// the table is a bijection of {1,...,n}.
  static Permutation from_images(std::span<const int> images);
  /// Builds a permutation of {1,...,n} from disjoint cycles; unmentioned
  /// points are fixed.
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles);
  /// The transposition (i j) in S_n.
  static Permutation transposition(int n, int i, int j);
  /// Parses cycle notation such as "(1 2 3)(4 5)"; "e" or "" is the identity.
  static Permutation parse(int n, std::string_view text);

  int size() const { return n_; }
  /// Image of i, for 1 <= i <= n.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

  Permutation inverse() const;
  std::vector<int> images() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::size_t hash() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

/// An integer partition lambda_1 >= ... >= lambda_l >= 1.
class Partition {
 public:
  /// Parts are sorted into weakly decreasing order; throws on an empty
  /// list or a nonpositive part.
  explicit Partition(std::vector<int> parts);
  /// Parses comma-separated parts, e.g. "3,2".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// a * b with a size check (std::invalid_argument on mismatch).
Permutation compose(const Permutation& a, const Permutation& b);

/// (1 ... l1)(l1+1 ... l1+l2)... on {1,...,n}.
Permutation canonical_cycles(const Partition& lambda);

/// (1 ... p)(p+1 ... p+q), with the blocks in the given order.
Permutation alpha_pq(int p, int q);

/// Disjoint cycles including fixed points. Each cycle starts at its
/// smallest element; cycles are sorted by that element.
std::vector<Cycle> cycles(const Permutation& p);
int cycle_count(const Permutation& p);

/// n minus the number of cycles (fixed points included).
int abs_length(const Permutation& p);

/// Absolute order: pi <= sigma iff l(sigma) = l(pi) + l(pi^{-1} sigma).
bool abs_leq(const Permutation& pi, const Permutation& sigma);

/// True iff some cycle meets both {1,...,split} and {split+1,...,n}.
bool is_connected(const Permutation& p, int split);

/// True iff the points moved by the given permutations connect all of
/// {1,...,n}; for transpositions this means they generate S_n.
bool generates_transitively(std::span<const Permutation> perms, int n);

/// All transpositions of S_n in lexicographic order of (i, j), i < j.
std::vector<Permutation> transpositions(int n);

/// Cycle notation with fixed points omitted; the identity prints as "e".
std::string to_string(const Permutation& p);

}  // namespace annular

template <>
struct std::hash<annular::Permutation> {
  std::size_t operator()(const annular::Permutation& p) const noexcept { return p.hash(); }
};
