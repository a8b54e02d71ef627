#pragma once

#include <string>
#include <utility>
#include <vector>

#include "annular/render.hpp"

namespace annular::verify {

/// One exact comparison. `pass` iff expected == actual.
struct Report {
  std::string check;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_ms = 0;
};

using Reports = std::vector<Report>;

Json to_json(const Report& r);
bool all_pass(const Reports& rs);

/// DFS count and walk-count DP against the closed form, every partition.
Reports gj(int max_dfs_n = 5, int max_dp_n = 7);
/// Enumerated chains of the annular interval against the closed forms, p+q <= max_degree.
Reports chains(int max_degree = 6, int threads = 1);
/// Disconnected element counts on both sides, p, q <= max_pq, and the size inequality.
Reports element_counts(int max_pq = 3);
/// Fibers of the composite chain -> F_{(p,q)} map.
Reports two_to_one(const std::vector<std::pair<int, int>>& shapes);
/// F^(B) <-> connected chains and F^+ <-> F_{(p,q)}, round-tripped, p+q <= max_degree.
Reports bijections(int max_degree = 5);
/// Sign-variant fibers over F^+ and the set B(beta), p+q <= max_degree.
Reports plus_fibers(int max_degree = 4);
/// The binomial identity for 1 <= p, q <= max.
Reports kk(int max = 30);
/// Marked poset chains against the closed form, round trips, p+q <= max_degree.
Reports marked(int max_degree = 5);
/// Encoding invariants, injectivity, tuple counts, multichain comparison.
Reports encoding(int max_pq = 3, int max_multichain_degree = 4);
/// Maximal chains of [eps, [1 ... n]] against n^n.
Reports reiner(int max_n = 5);
/// Cycle-formula length against breadth-first distance in B_n and S_n.
Reports length(int max_b = 4, int max_a = 5);
/// Hand-transcribed reference objects: the (3,2) lift example, the Hasse
/// diagram of the (2,1) interval, its connected chains, two elements of B_7.
Reports goldens();

/// The reference objects as JSON documents, keyed by file stem.
std::vector<std::pair<std::string, Json>> golden_documents();

}  // namespace annular::verify
