#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "annular/errors.hpp"
#include "annular/factorization.hpp"

namespace annular {

TranspositionWalkTable::TranspositionWalkTable(int m, int max_length) : m_(m), max_length_(max_length) {
  if (m < 1 || m > 8) throw std::invalid_argument("walk table degree must lie in 1..8");
  if (max_length < 0) throw std::invalid_argument("negative walk length");
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  do {
    elements_.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));

  const auto ts = transpositions(m);
  // step[g][t] = index of g * t
  std::vector<std::vector<std::size_t>> step(elements_.size());
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    step[g].reserve(ts.size());
    for (const auto& t : ts) step[g].push_back(index_of(elements_[g] * t));
  }

  counts_.assign(static_cast<std::size_t>(max_length) + 1, std::vector<BigCount>(elements_.size(), 0));
  counts_[0][index_of(Permutation::identity(m))] = 1;
  for (int k = 1; k <= max_length; ++k) {
    const auto& prev = counts_[static_cast<std::size_t>(k - 1)];
    auto& cur = counts_[static_cast<std::size_t>(k)];
    for (std::size_t g = 0; g < elements_.size(); ++g) {
      if (prev[g] == 0) continue;
      for (std::size_t next : step[g]) cur[next] += prev[g];
    }
  }
}

std::size_t TranspositionWalkTable::index_of(const Permutation& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) throw std::invalid_argument("element outside the walk table");
  return static_cast<std::size_t>(it - elements_.begin());
}

const BigCount& TranspositionWalkTable::count(const Permutation& target, int length) const {
  if (length < 0 || length > max_length_) throw std::out_of_range("walk length outside the table");
  return counts_[static_cast<std::size_t>(length)][index_of(target)];
}

BigCount count_mtf_dp(const Partition& lambda, int max_n) {
  const int n = lambda.n();
  const int l = lambda.num_parts();
  if (n > max_n) throw GuardError("count_mtf_dp: n = " + std::to_string(n) + " exceeds limit " + std::to_string(max_n));
  const int length = n + l - 2;
  const auto& parts = lambda.parts();
  const unsigned full = (1u << l) - 1;

  std::map<int, std::unique_ptr<TranspositionWalkTable>> tables;
  auto table_for = [&](int m) -> const TranspositionWalkTable& {
    auto& slot = tables[m];
    if (!slot) slot = std::make_unique<TranspositionWalkTable>(m, length);
    return *slot;
  };

  // all_words[mask][k]: words of length k in S_{points(mask)} multiplying to
  // the restriction of alpha_lambda to the cycles in mask.
  std::vector<std::vector<BigCount>> all_words(full + 1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    std::vector<int> block;
    for (int i = 0; i < l; ++i) {
      if (mask >> i & 1u) block.push_back(parts[static_cast<std::size_t>(i)]);
    }
    Partition type(block);
    const auto& table = table_for(type.n());
    const Permutation target = canonical_cycles(type);
    all_words[mask].resize(static_cast<std::size_t>(length) + 1);
    for (int k = 0; k <= length; ++k) all_words[mask][static_cast<std::size_t>(k)] = table.count(target, k);
  }

  // transitive[mask][k], filled in increasing mask order so every proper
  // submask is ready.
  std::vector<std::vector<BigCount>> transitive(full + 1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    const unsigned low = mask & (~mask + 1);
    const unsigned rest_bits = mask ^ low;
    auto& t = transitive[mask];
    t = all_words[mask];
    // proper blocks B containing the lowest cycle: B = low | sub, sub a proper submask of rest_bits
    for (unsigned sub = rest_bits; ; sub = (sub - 1) & rest_bits) {
      const unsigned block = low | sub;
      if (block != mask) {
        const unsigned other = mask ^ block;
        for (int k = 0; k <= length; ++k) {
          BigCount removed = 0;
          for (int j = 0; j <= k; ++j) {
            const BigCount& tb = transitive[block][static_cast<std::size_t>(j)];
            if (tb == 0) continue;
            const BigCount& ao = all_words[other][static_cast<std::size_t>(k - j)];
            if (ao == 0) continue;
            removed += binomial(k, j) * tb * ao;
          }
          t[static_cast<std::size_t>(k)] -= removed;
        }
      }
      if (sub == 0) break;
    }
  }
  const BigCount& result = transitive[full][static_cast<std::size_t>(length)];
  if (result < 0) throw InternalError("negative transitive count");
  return result;
}

}  // namespace annular
