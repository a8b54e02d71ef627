#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "suites.hpp"

namespace annular::verify {

namespace {

// The (3,2) worked lift: sigma in F^+, and the two signed words over it.
const char* const kSigma[] = {"((1 2))", "((2 5))", "((2 3))", "((4 5))", "((3 4))"};
const char* const kTau[] = {"((1 2))", "((2 -5))", "((2 3))", "((4 -5))", "((3 -4))"};
const char* const kTauPrime[] = {"((1 2))", "((2 5))", "((2 3))", "((4 -5))", "((3 4))"};

// Hasse diagram of the (2,1) interval: rank 2 elements with their lower covers.
struct Node {
  const char* upper;
  std::vector<const char*> lower;
};

const std::vector<const char*> kAtoms = {"((1 2))", "[1]", "((1 3))", "((1 -3))", "[3]",
                                         "((2 3))", "((2 -3))", "[2]", "((1 -2))"};

const std::vector<Node> kMiddle = {
    {"[1][3]", {"[1]", "((1 3))", "((1 -3))", "[3]"}},
    {"((1 2))[3]", {"((1 2))", "[3]"}},
    {"((1 2 3))", {"((1 2))", "((1 3))", "((2 3))"}},
    {"((1 2 -3))", {"((1 2))", "((1 -3))", "((2 -3))"}},
    {"[1 2]", {"((1 2))", "[1]", "[2]", "((1 -2))"}},
    {"((1 -3 -2))", {"((1 -3))", "((2 3))", "((1 -2))"}},
    {"((1 3 -2))", {"((1 3))", "((2 -3))", "((1 -2))"}},
    {"((1 -2))[3]", {"[3]", "((1 -2))"}},
    {"[2][3]", {"[3]", "((2 3))", "((2 -3))", "[2]"}},
};

// Connected maximal chains of the same interval, as atom/coatom edges.
const std::vector<Node> kConnected = {
    {"[1][3]", {"((1 3))", "((1 -3))"}},
    {"((1 2 3))", {"((1 2))", "((1 3))", "((2 3))"}},
    {"((1 2 -3))", {"((1 2))", "((1 -3))", "((2 -3))"}},
    {"((1 -3 -2))", {"((1 -3))", "((2 3))", "((1 -2))"}},
    {"((1 3 -2))", {"((1 3))", "((2 -3))", "((1 -2))"}},
    {"[2][3]", {"((2 3))", "((2 -3))"}},
};

WordB word_of(const char* const (&items)[5]) {
  WordB out;
  for (const char* s : items) out.push_back(parse_btransposition(s));
  return out;
}

using Edge = std::pair<SignedPermutation, SignedPermutation>;

std::set<Edge> literal_edges(const std::vector<Node>& nodes, int n) {
  std::set<Edge> out;
  for (const auto& node : nodes) {
    for (const char* low : node.lower) {
      out.emplace(SignedPermutation::parse(n, low), SignedPermutation::parse(n, node.upper));
    }
  }
  return out;
}

Report check(std::string name, std::string params, std::string expected, std::string actual) {
  Report r{std::move(name), std::move(params), std::move(expected), std::move(actual), false, 0};
  r.pass = r.expected == r.actual;
  return r;
}

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

Reports goldens() {
  Reports out;
  const auto start = std::chrono::steady_clock::now();
  try {
    const WordB sigma = word_of(kSigma);
    const WordB tau = word_of(kTau);
    const WordB tau_prime = word_of(kTauPrime);
    out.push_back(check("lift-sigma-positive", "p=3 q=2", "true", yes(is_Fplus(sigma, 3, 2))));
    out.push_back(check("lift-tau-member", "p=3 q=2", "true", yes(is_FB(tau, 3, 2) && is_FB(tau_prime, 3, 2))));
    out.push_back(check("lift-plus", "p=3 q=2", "true",
                        yes(plus_tuple(tau, 3, 2) == sigma && plus_tuple(tau_prime, 3, 2) == sigma)));
    out.push_back(check("lift-toggle", "p=3 q=2", "true", yes(toggle_connected(tau, 3, 2) == tau_prime)));
    const WordB lifted = lift_positive(sigma, 3, 2);
    out.push_back(check("lift-constructive", "p=3 q=2", "true", yes(lifted == tau || lifted == tau_prime)));
    std::vector<WordB> pair{tau, tau_prime};
    std::sort(pair.begin(), pair.end());
    out.push_back(check("lift-preimages", "p=3 q=2", "true", yes(preimages_under_plus(sigma, 3, 2) == pair)));
    out.push_back(check("lift-abs-product", "p=3 q=2", "(1 2 3)(4 5)", to_string(product(abs_tuple(sigma, 3, 2), 5))));

    AnnularPoset small(2, 1);
    const auto elements = small.elements();
    out.push_back(check("hasse-elements", "p=2 q=1", "20", std::to_string(elements.size())));
    std::map<int, std::set<SignedPermutation>> by_rank;
    for (const auto& s : elements) by_rank[small.rank(s)].insert(s);
    std::set<SignedPermutation> atoms;
    for (const char* a : kAtoms) atoms.insert(SignedPermutation::parse(3, a));
    std::set<SignedPermutation> coatoms;
    for (const auto& node : kMiddle) coatoms.insert(SignedPermutation::parse(3, node.upper));
    out.push_back(check("hasse-atoms", "p=2 q=1", "true", yes(by_rank[1] == atoms)));
    out.push_back(check("hasse-coatoms", "p=2 q=1", "true", yes(by_rank[2] == coatoms)));
    std::set<Edge> middle;
    for (const auto& low : by_rank[1]) {
      for (const auto& cover : small.interval().upper_covers(low)) middle.emplace(low, cover.element);
    }
    out.push_back(check("hasse-middle-edges", "p=2 q=1", "28", std::to_string(middle.size())));
    out.push_back(check("hasse-middle-literal", "p=2 q=1", "true", yes(middle == literal_edges(kMiddle, 3))));

    std::set<Edge> connected_edges;
    std::size_t connected = 0;
    small.for_each_maximal_chain([&](const MaximalChainB& chain) {
      if (small.classify(chain) == ChainKind::connected) {
        ++connected;
        connected_edges.emplace(chain.elements[1], chain.elements[2]);
      }
      return true;
    });
    out.push_back(check("connected-chains", "p=2 q=1", "16", std::to_string(connected)));
    out.push_back(
        check("connected-edges-literal", "p=2 q=1", "true", yes(connected_edges == literal_edges(kConnected, 3))));

    AnnularPoset big(4, 3);
    const auto pi = SignedPermutation::parse(7, "((1 5 6))((2 3 4))");
    const auto s = SignedPermutation::parse(7, "[1 5 -7 2]((3 4))");
    out.push_back(check("b7-connected-sample", "p=4 q=3", "true 1",
                        yes(big.contains(pi)) + " " + std::to_string(connectivity(pi, 4))));
    out.push_back(check("b7-disconnected-sample", "p=4 q=3", "true 0",
                        yes(big.contains(s)) + " " + std::to_string(connectivity(s, 4))));
  } catch (const std::exception& e) {
    out.push_back(check("goldens", "", "no exception", std::string("exception: ") + e.what()));
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.elapsed_ms = ms / static_cast<double>(out.size());
  return out;
}

std::vector<std::pair<std::string, Json>> golden_documents() {
  std::vector<std::pair<std::string, Json>> docs;

  const WordB sigma = word_of(kSigma);
  const WordB lifted = lift_positive(sigma, 3, 2);
  Json pre = Json::array();
  for (const auto& w : preimages_under_plus(sigma, 3, 2)) pre.push_back(word_to_json(w));
  docs.emplace_back("lift_example_3_2", Json{{"p", 3},
                                              {"q", 2},
                                              {"sigma", word_to_json(sigma)},
                                              {"lift", word_to_json(lifted)},
                                              {"toggled", word_to_json(toggle_connected(lifted, 3, 2))},
                                              {"preimages", pre},
                                              {"abs", word_to_json(abs_tuple(sigma, 3, 2))},
                                              {"abs_product", to_json(product(abs_tuple(sigma, 3, 2), 5))}});

  AnnularPoset small(2, 1);
  Json nodes = Json::array();
  Json edges = Json::array();
  for (const auto& s : small.elements()) {
    nodes.push_back(Json{{"element", to_string(s)},
                         {"cycles", to_json(s)},
                         {"rank", small.rank(s)},
                         {"connectivity", connectivity(s, 2)}});
    for (const auto& cover : small.interval().upper_covers(s)) {
      const auto type = small.cover_type(s, cover.element);
      edges.push_back(Json{{"lower", to_string(s)},
                           {"upper", to_string(cover.element)},
                           {"label", to_string(cover.label)},
                           {"type", std::string(1, static_cast<char>('a' + static_cast<int>(*type)))}});
    }
  }
  docs.emplace_back("hasse_2_1", Json{{"p", 2}, {"q", 1}, {"elements", nodes}, {"covers", edges}});

  Json chains = Json::array();
  small.for_each_maximal_chain([&](const MaximalChainB& chain) {
    if (small.classify(chain) == ChainKind::connected) chains.push_back(chain_to_json(chain, small));
    return true;
  });
  docs.emplace_back("connected_chains_2_1", Json{{"p", 2}, {"q", 1}, {"chains", chains}});

  AnnularPoset big(4, 3);
  Json samples = Json::array();
  for (const char* text : {"((1 5 6))((2 3 4))", "[1 5 -7 2]((3 4))"}) {
    const auto s = SignedPermutation::parse(7, text);
    samples.push_back(Json{{"element", to_string(s)},
                           {"cycles", to_json(s)},
                           {"in_poset", big.contains(s)},
                           {"rank", big.contains(s) ? Json(big.rank(s)) : Json(nullptr)},
                           {"connectivity", connectivity(s, 4)}});
  }
  docs.emplace_back("b7_samples", Json{{"p", 4}, {"q", 3}, {"samples", samples}});
  return docs;
}

}  // namespace annular::verify
