#pragma once

// Brute-force references shared by the unit tests. None of these call the
// library's length or order functions.

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "annular/permutation.hpp"
#include "annular/signed_permutation.hpp"

namespace oracle {

using annular::Permutation;
using annular::SignedPermutation;

inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::vector<SignedPermutation> all_signed(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_perms(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = p.images();
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      }
      out.push_back(SignedPermutation::from_window(w));
    }
  }
  return out;
}

// Reflections of B_n built from their action, not from the library's list.
inline std::vector<SignedPermutation> reflections_B(int n) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    w[static_cast<std::size_t>(i - 1)] = -i;
    out.push_back(SignedPermutation::from_window(w));
    for (int j = i + 1; j <= n; ++j) {
      for (int s : {1, -1}) {
        std::iota(w.begin(), w.end(), 1);
        w[static_cast<std::size_t>(i - 1)] = s * j;
        w[static_cast<std::size_t>(j - 1)] = s * i;
        out.push_back(SignedPermutation::from_window(w));
      }
    }
  }
  return out;
}

inline std::vector<Permutation> transpositions_A(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
      out.push_back(Permutation::from_images(img));
    }
  }
  return out;
}

template <class G>
std::map<G, int> distances(const G& id, const std::vector<G>& gens) {
  std::map<G, int> dist{{id, 0}};
  std::deque<G> queue{id};
  while (!queue.empty()) {
    G g = queue.front();
    queue.pop_front();
    for (const auto& t : gens) {
      G h = g * t;
      if (dist.emplace(h, dist[g] + 1).second) queue.push_back(h);
    }
  }
  return dist;
}

// pi <= sigma in absolute order, from BFS distances.
template <class G>
bool leq(const std::map<G, int>& d, const G& pi, const G& sigma) {
  return d.at(sigma) == d.at(pi) + d.at(pi.inverse() * sigma);
}

}  // namespace oracle
