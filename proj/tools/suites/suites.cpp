#include "suites.hpp"

#include <chrono>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "annular/errors.hpp"

namespace annular::verify {

namespace {

template <class Body>
Report timed(std::string check, std::string params, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.check = std::move(check);
  r.params = std::move(params);
  try {
    auto [expected, actual] = body();
    r.expected = std::move(expected);
    r.actual = std::move(actual);
  } catch (const std::exception& e) {
    r.expected = r.expected.empty() ? "no exception" : r.expected;
    r.actual = std::string("exception: ") + e.what();
  }
  r.pass = r.expected == r.actual;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

using Pair = std::pair<std::string, std::string>;

Pair same(const BigCount& expected, const BigCount& actual) { return {expected.get_str(), actual.get_str()}; }
Pair same(std::size_t expected, std::size_t actual) { return {std::to_string(expected), std::to_string(actual)}; }
Pair truth(bool actual) { return {"true", actual ? "true" : "false"}; }

std::string pq(int p, int q) { return "p=" + std::to_string(p) + " q=" + std::to_string(q); }

std::vector<std::pair<int, int>> shapes_up_to(int max_degree) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= max_degree; ++n) {
    for (int p = n - 1; p >= 1; --p) out.emplace_back(p, n - p);
  }
  return out;
}

std::vector<std::vector<int>> profiles(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int r = lo; r <= n; ++r) {
      cur.push_back(r);
      rec(r);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<WordB> all_FB(int p, int q) {
  std::vector<WordB> out;
  for_each_FB(p, q, [&](const WordB& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<WordB> all_Fplus(int p, int q) {
  std::vector<WordB> out;
  for_each_Fplus(p, q, [&](const WordB& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

template <class Group, class Generators>
std::unordered_map<Group, int> bfs_distances(const Group& start, const Generators& gens) {
  std::unordered_map<Group, int> dist{{start, 0}};
  std::deque<Group> queue{start};
  while (!queue.empty()) {
    Group g = queue.front();
    queue.pop_front();
    for (const auto& t : gens) {
      Group h = g * t;
      if (dist.emplace(h, dist[g] + 1).second) queue.push_back(h);
    }
  }
  return dist;
}

}  // namespace

Json to_json(const Report& r) {
  return Json{{"check", r.check},       {"params", r.params},
              {"expected", r.expected}, {"actual", r.actual},
              {"status", r.pass ? "pass" : "fail"}, {"elapsed_ms", static_cast<long>(r.elapsed_ms)}};
}

bool all_pass(const Reports& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.pass; });
}

Reports gj(int max_dfs_n, int max_dp_n) {
  Reports out;
  for (int n = 1; n <= std::max(max_dfs_n, max_dp_n); ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const std::string params = "lambda=" + lambda.to_string();
      if (n <= max_dfs_n) {
        out.push_back(timed("gj-dfs", params, [&] { return same(gj_count(lambda), count_mtf_enumerate(lambda)); }));
      }
      if (n <= max_dp_n) {
        out.push_back(
            timed("gj-dp", params, [&] { return same(gj_count(lambda), count_mtf_dp(lambda, max_dp_n)); }));
      }
      if (lambda.num_parts() == 1 && n >= 2) {
        out.push_back(timed("gj-tree", params, [&] { return same(power(n, n - 2), gj_count(lambda)); }));
      }
      if (lambda.num_parts() == 2) {
        const int p = lambda.parts()[0];
        const int q = lambda.parts()[1];
        out.push_back(timed("gj-two-cycles", params, [&] { return same(pq_count(p, q), gj_count(lambda)); }));
      }
    }
  }
  return out;
}

Reports chains(int max_degree, int threads) {
  Reports out;
  for (const auto& [p_, q_] : shapes_up_to(max_degree)) {
    const int p = p_;
    const int q = q_;
    ChainCounts counts;
    out.push_back(timed("chains-enumerate", pq(p, q), [&] {
      counts = AnnularPoset(p, q).count_chains(p + q, threads);
      return same(counts.total, counts.connected + counts.disconnected);
    }));
    out.push_back(timed("chains-disconnected", pq(p, q), [&] {
      return same(dmc_count(p, q), counts.disconnected);
    }));
    out.push_back(timed("chains-connected", pq(p, q), [&] {
      return same(cmc_sum(p, q), counts.connected);
    }));
    out.push_back(timed("chains-connected-closed", pq(p, q), [&] {
      return same(2 * pq_count(p, q), counts.connected);
    }));
    out.push_back(timed("chains-total", pq(p, q), [&] {
      return same(nc_chain_count_B(p, q), counts.total);
    }));
  }
  return out;
}

Reports element_counts(int max_pq) {
  Reports out;
  for (int p = 1; p <= max_pq; ++p) {
    for (int q = 1; q <= max_pq; ++q) {
      AnnularPoset b(p, q);
      MarkedPoset a(p, q);
      std::size_t b_size = 0;
      std::size_t a_size = 0;
      out.push_back(timed("elements-b-disconnected", pq(p, q), [&] {
        const auto els = b.elements();
        b_size = els.size();
        const auto dis = std::count_if(els.begin(), els.end(), [&](const auto& s) { return !b.is_connected(s); });
        return same(disconnected_B_count(p, q), BigCount(static_cast<unsigned long>(dis)));
      }));
      out.push_back(timed("elements-marked-disconnected", pq(p, q), [&] {
        a_size = a.elements().size();
        return same(disconnected_marked_count(p, q), a.disconnected_element_count());
      }));
      out.push_back(timed("elements-not-double", pq(p, q) + " b=" + std::to_string(b_size) +
                                                      " marked=" + std::to_string(a_size),
                          [&] { return truth(b_size != 2 * a_size); }));
    }
  }
  return out;
}

Reports two_to_one(const std::vector<std::pair<int, int>>& shapes) {
  Reports out;
  for (const auto& [p_, q_] : shapes) {
    const int p = p_;
    const int q = q_;
    AnnularPoset poset(p, q);
    std::map<WordA, std::vector<WordB>> fibers;
    out.push_back(timed("composite-images", pq(p, q), [&] {
      poset.for_each_maximal_chain(
          [&](const MaximalChainB& chain) {
            if (poset.classify(chain) == ChainKind::connected) {
              fibers[two_to_one_composite(chain, poset)].push_back(phi(chain));
            }
            return true;
          },
          p + q);
      return same(count_mtf_enumerate(Partition({p, q})), BigCount(static_cast<unsigned long>(fibers.size())));
    }));
    const Permutation alpha = alpha_pq(p, q);
    std::size_t valid = 0;
    std::size_t pairs = 0;
    std::size_t toggled = 0;
    for (const auto& [eta, taus] : fibers) {
      valid += is_mtf_of(eta, alpha) ? 1 : 0;
      if (taus.size() == 2) {
        ++pairs;
        toggled += toggle_connected(taus[0], p, q) == taus[1] ? 1 : 0;
      }
    }
    out.push_back(timed("composite-valid", pq(p, q), [&] { return same(fibers.size(), valid); }));
    out.push_back(timed("fiber-size-two", pq(p, q), [&] { return same(fibers.size(), pairs); }));
    out.push_back(timed("fiber-toggle", pq(p, q), [&] { return same(fibers.size(), toggled); }));
  }
  return out;
}

Reports bijections(int max_degree) {
  Reports out;
  for (const auto& [p_, q_] : shapes_up_to(max_degree)) {
    const int p = p_;
    const int q = q_;
    AnnularPoset poset(p, q);
    const auto fb = all_FB(p, q);
    const auto fplus = all_Fplus(p, q);
    out.push_back(timed("FB-count", pq(p, q), [&] { return same(poset.count_chains(p + q).connected, BigCount(static_cast<unsigned long>(fb.size()))); }));
    out.push_back(timed("FB-chain-roundtrip", pq(p, q), [&] {
      std::size_t ok = 0;
      for (const auto& tau : fb) {
        const auto chain = phi_inverse(tau, poset);
        ok += poset.classify(chain) == ChainKind::connected && phi(chain) == tau && is_FB(tau, p, q) ? 1 : 0;
      }
      return same(fb.size(), ok);
    }));
    out.push_back(timed("Fplus-count", pq(p, q), [&] {
      return same(count_mtf_enumerate(Partition({p, q})), BigCount(static_cast<unsigned long>(fplus.size())));
    }));
    out.push_back(timed("Fplus-abs-roundtrip", pq(p, q), [&] {
      const Permutation alpha = alpha_pq(p, q);
      std::set<WordA> images;
      std::size_t ok = 0;
      for (const auto& sigma : fplus) {
        const auto eta = abs_tuple(sigma, p, q);
        images.insert(eta);
        ok += is_mtf_of(eta, alpha) && positive_from_abs(eta, p, q) == sigma ? 1 : 0;
      }
      return same(fplus.size(), std::min(ok, images.size()));
    }));
    out.push_back(timed("plus-two-to-one", pq(p, q), [&] {
      std::map<WordB, std::size_t> fiber;
      for (const auto& tau : fb) ++fiber[plus_tuple(tau, p, q)];
      std::size_t twos = 0;
      for (const auto& [sigma, size] : fiber) twos += size == 2 && is_Fplus(sigma, p, q) ? 1 : 0;
      return same(fplus.size(), twos);
    }));
    out.push_back(timed("toggle-involution", pq(p, q), [&] {
      std::set<WordB> members(fb.begin(), fb.end());
      std::size_t ok = 0;
      for (const auto& tau : fb) {
        const auto t = toggle_connected(tau, p, q);
        ok += t != tau && members.count(t) && toggle_connected(t, p, q) == tau ? 1 : 0;
      }
      return same(fb.size(), ok);
    }));
  }
  return out;
}

Reports plus_fibers(int max_degree) {
  Reports out;
  for (const auto& [p_, q_] : shapes_up_to(max_degree)) {
    const int p = p_;
    const int q = q_;
    const int n = p + q;
    const auto betas = enumerate_B_beta(p, q);
    out.push_back(timed("B-beta-size", pq(p, q), [&] { return same(std::size_t{1} << (n - 1), betas.size()); }));
    out.push_back(timed("B-beta-even", pq(p, q), [&] {
      std::size_t ok = 0;
      for (const auto& d : betas) ok += ind_set(d, p, q).size() % 2 == 0 ? 1 : 0;
      return same(betas.size(), ok);
    }));
    const auto fplus = all_Fplus(p, q);
    out.push_back(timed("F-sigma-size", pq(p, q), [&] {
      std::size_t ok = 0;
      for (const auto& sigma : fplus) ok += enumerate_F_sigma(sigma, p, q).size() == (std::size_t{1} << n) ? 1 : 0;
      return same(fplus.size(), ok);
    }));
    out.push_back(timed("F-sigma-delta-two", pq(p, q), [&] {
      std::size_t ok = 0;
      for (const auto& sigma : fplus) {
        std::map<SignedPermutation, std::size_t> by_product;
        for (const auto& t : enumerate_F_sigma(sigma, p, q)) ++by_product[product(t, n)];
        std::size_t total = 0;
        bool all_two = true;
        for (const auto& d : betas) {
          total += by_product[d];
          all_two = all_two && by_product[d] == 2;
        }
        ok += all_two && total == (std::size_t{1} << n) ? 1 : 0;
      }
      return same(fplus.size(), ok);
    }));
    out.push_back(timed("lift-fiber", pq(p, q), [&] {
      std::size_t ok = 0;
      for (const auto& sigma : fplus) {
        const auto lifted = lift_positive(sigma, p, q);
        ok += plus_tuple(lifted, p, q) == sigma && preimages_under_plus(sigma, p, q) == F_sigma_delta(sigma, gamma_pq(p, q), p, q)
                  ? 1
                  : 0;
      }
      return same(fplus.size(), ok);
    }));
  }
  return out;
}

Reports kk(int max) {
  Reports out;
  for (int p = 1; p <= max; ++p) {
    for (int q = 1; q <= max; ++q) {
      out.push_back(timed("kk", pq(p, q), [&] { return same(kk_rhs(p, q), kk_lhs(p, q)); }));
    }
  }
  return out;
}

Reports marked(int max_degree) {
  Reports out;
  for (const auto& [p_, q_] : shapes_up_to(max_degree)) {
    const int p = p_;
    const int q = q_;
    MarkedPoset poset(p, q);
    std::size_t chains = 0;
    std::size_t round_trip = 0;
    std::size_t connected = 0;
    std::set<WordA> words;
    out.push_back(timed("marked-chains", pq(p, q), [&] {
      poset.for_each_maximal_chain(
          [&](const MarkedChain& chain) {
            ++chains;
            const auto word = marked_chain_to_factorization(chain, poset);
            words.insert(word);
            round_trip += is_mtf_of(word, poset.alpha()) && factorization_to_marked_chain(word, poset) == chain ? 1 : 0;
            connected += std::any_of(chain.elements.begin(), chain.elements.end(),
                                     [&](const MarkedElement& e) { return poset.is_connected(e.perm); })
                             ? 1
                             : 0;
            return true;
          },
          p + q);
      return same(pq_count(p, q), BigCount(static_cast<unsigned long>(chains)));
    }));
    out.push_back(timed("marked-chains-sum", pq(p, q), [&] {
      return same(marked_chain_count(p, q), BigCount(static_cast<unsigned long>(chains)));
    }));
    out.push_back(timed("marked-roundtrip", pq(p, q), [&] { return same(chains, round_trip); }));
    out.push_back(timed("marked-connected", pq(p, q), [&] { return same(chains, connected); }));
    out.push_back(timed("marked-distinct-words", pq(p, q), [&] { return same(chains, words.size()); }));
  }
  return out;
}

Reports encoding(int max_pq, int max_multichain_degree) {
  Reports out;
  for (int p = 1; p <= max_pq; ++p) {
    for (int q = 1; q <= max_pq; ++q) {
      MarkedPoset poset(p, q);
      const EncodingTable table(p, q);
      out.push_back(timed("encoding-injective", pq(p, q), [&] { return truth(table.injective()); }));
      out.push_back(timed("encoding-invariants", pq(p, q), [&] {
        std::size_t ok = 0;
        for (const auto& [pi, enc] : table.entries()) {
          int connected_cycles = 0;
          for (const auto& c : cycles(pi)) {
            connected_cycles += is_connected(Permutation::from_cycles(p + q, {c}), p) ? 1 : 0;
          }
          ok += satisfies_invariants(enc, p, q) && enc.c == connected_cycles ? 1 : 0;
        }
        return same(table.size(), ok);
      }));
      out.push_back(timed("encoding-balanced", pq(p, q), [&] {
        std::size_t ok = 0;
        for (const auto& [pi, enc] : table.entries()) {
          int depth = 0;
          bool never_negative = true;
          for (int tok : encoding_word(pi, p, q)) {
            depth += tok == -1 ? 1 : tok == 0 ? -1 : 0;
            never_negative = never_negative && depth >= 0;
          }
          ok += never_negative && depth == 0 ? 1 : 0;
        }
        return same(table.size(), ok);
      }));
      out.push_back(timed("encoding-decode", pq(p, q), [&] {
        std::size_t ok = 0;
        for (const auto& [pi, enc] : table.entries()) ok += table.decode(enc) == pi ? 1 : 0;
        return same(table.size(), ok);
      }));
      for (int r = 0; r <= p + q; ++r) {
        out.push_back(timed("encoding-rank-count", pq(p, q) + " rank=" + std::to_string(r), [&] {
          std::size_t at_rank = 0;
          for (const auto& [pi, enc] : table.entries()) at_rank += abs_length(pi) == r ? 1 : 0;
          const int profile[] = {r};
          return same(count_tuples(p, q, profile, EncodingFlavor::typeA), BigCount(static_cast<unsigned long>(at_rank)));
        }));
      }
      const auto maximal = maximal_profile(p, q);
      out.push_back(timed("tuples-maximal-A", pq(p, q), [&] {
        return same(poset.count_maximal_chains(p + q), count_tuples(p, q, maximal, EncodingFlavor::typeA));
      }));
      out.push_back(timed("tuples-maximal-B", pq(p, q), [&] {
        return same(AnnularPoset(p, q).count_chains(p + q).connected,
                    count_tuples(p, q, maximal, EncodingFlavor::typeB));
      }));
    }
  }
  for (const auto& [p_, q_] : shapes_up_to(max_multichain_degree)) {
    const int p = p_;
    const int q = q_;
    for (int m = 1; m <= 2; ++m) {
      for (const auto& profile : profiles(p + q, m)) {
        const std::string params = pq(p, q) + " profile=" + join(profile);
        MultichainComparison cmp;
        out.push_back(timed("multichain-two-to-one", params, [&] {
          cmp = verify_two_to_one_multichain(p, q, profile);
          return same(2 * cmp.marked_connected, cmp.b_connected);
        }));
        out.push_back(timed("multichain-tuples-A", params, [&] { return same(cmp.tuples_A, cmp.marked_connected); }));
        out.push_back(timed("multichain-tuples-B", params, [&] { return same(cmp.tuples_B, cmp.b_connected); }));
      }
    }
  }
  return out;
}

Reports reiner(int max_n) {
  Reports out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(timed("reiner", "n=" + std::to_string(n), [&] { return same(power(n, n), nc_b_chain_count(n, max_n)); }));
  }
  return out;
}

Reports length(int max_b, int max_a) {
  Reports out;
  for (int n = 1; n <= max_b; ++n) {
    out.push_back(timed("length-b", "n=" + std::to_string(n), [&] {
      std::vector<SignedPermutation> gens;
      for (const auto& t : b_transpositions(n)) gens.push_back(t.to_permutation(n));
      const auto dist = bfs_distances(SignedPermutation::identity(n), gens);
      std::size_t ok = 0;
      for (const auto& [g, d] : dist) ok += abs_length(g) == d ? 1 : 0;
      return same(static_cast<std::size_t>(factorial(n).get_ui()) << n, ok);
    }));
  }
  for (int n = 1; n <= max_a; ++n) {
    out.push_back(timed("length-a", "n=" + std::to_string(n), [&] {
      const auto dist = bfs_distances(Permutation::identity(n), transpositions(n));
      std::size_t ok = 0;
      for (const auto& [g, d] : dist) ok += abs_length(g) == d ? 1 : 0;
      return same(static_cast<std::size_t>(factorial(n).get_ui()), ok);
    }));
  }
  return out;
}

}  // namespace annular::verify
