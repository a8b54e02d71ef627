#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "annular/errors.hpp"
#include "suites/suites.hpp"

namespace {

using namespace annular;
namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string kind;
  std::string suite;
  int p = 0;
  int q = 0;
  int n = 0;
  std::string lambda;
  std::string rank_profile;
  bool connected = false;
  bool disconnected = false;
  std::string oracle;
  std::string format = "jsonl";
  long limit = -1;
  int max = 30;
  int max_n = 0;
  int max_degree = 0;
  int threads = 1;
  std::string out_dir = "goldens";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need_pq(const Options& o) {
  if (o.p < 1 || o.q < 1) throw UsageError("--p and --q must be positive");
}

Partition need_lambda(const Options& o) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  return Partition::parse(o.lambda);
}

std::vector<int> parse_profile(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw UsageError("--rank-profile is empty");
  return out;
}

// --- count ------------------------------------------------------------------

struct Sources {
  std::optional<BigCount> formula;
  std::function<BigCount()> enumerate;
};

Sources count_sources(const Options& o) {
  const int degree = o.max_degree;
  if (o.kind == "mtf") {
    const Partition lambda = need_lambda(o);
    const int length = lambda.n() + lambda.num_parts() - 2;
    const int max_n = o.max_n ? o.max_n : 7;
    return {gj_count(lambda), [=] {
              return length <= kMaxWordLength ? count_mtf_enumerate(lambda) : count_mtf_dp(lambda, max_n);
            }};
  }
  if (o.kind == "chains-b") {
    need_pq(o);
    const int p = o.p;
    const int q = o.q;
    const int threads = o.threads;
    const int limit = degree ? degree : kMaxElementDegree;
    if (o.connected) {
      return {cmc_sum(p, q), [=] { return AnnularPoset(p, q).count_chains(limit, threads).connected; }};
    }
    if (o.disconnected) {
      return {dmc_count(p, q), [=] { return AnnularPoset(p, q).count_chains(limit, threads).disconnected; }};
    }
    return {nc_chain_count_B(p, q), [=] { return AnnularPoset(p, q).count_chains(limit, threads).total; }};
  }
  if (o.kind == "chains-marked") {
    need_pq(o);
    const int p = o.p;
    const int q = o.q;
    const int limit = degree ? degree : 7;
    return {marked_chain_count(p, q), [=] { return MarkedPoset(p, q).count_maximal_chains(limit); }};
  }
  if (o.kind == "elements-b") {
    need_pq(o);
    const int p = o.p;
    const int q = o.q;
    const int limit = degree ? degree : kMaxElementDegree;
    const bool connected = o.connected;
    const bool disconnected = o.disconnected;
    auto count = [=] {
      AnnularPoset poset(p, q);
      unsigned long k = 0;
      for (const auto& s : poset.elements(limit)) {
        const bool c = poset.is_connected(s);
        k += (connected && !c) || (disconnected && c) ? 0 : 1;
      }
      return BigCount(k);
    };
    return {disconnected ? std::optional<BigCount>(disconnected_B_count(p, q)) : std::nullopt, count};
  }
  if (o.kind == "ncb-chains") {
    if (o.n < 1) throw UsageError("--n must be positive");
    const int n = o.n;
    const int limit = o.max_n ? o.max_n : kMaxChainDegree;
    return {power(n, n), [=] { return nc_b_chain_count(n, limit); }};
  }
  throw UsageError("unknown count kind: " + o.kind);
}

int cmd_count(const Options& o) {
  Sources src = count_sources(o);
  const std::string oracle = o.oracle.empty() ? (src.formula ? "formula" : "enumerate") : o.oracle;
  if (oracle == "formula") {
    if (!src.formula) throw UsageError("no closed form for this count; use --oracle enumerate");
    std::cout << src.formula->get_str() << '\n';
    return kExitPass;
  }
  if (oracle == "enumerate") {
    std::cout << src.enumerate().get_str() << '\n';
    return kExitPass;
  }
  if (oracle == "both") {
    if (!src.formula) throw UsageError("no closed form for this count");
    const BigCount actual = src.enumerate();
    const bool pass = actual == *src.formula;
    std::cout << src.formula->get_str() << '/' << actual.get_str() << ' ' << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitPass : kExitFail;
  }
  throw UsageError("--oracle must be formula, enumerate or both");
}

// --- enumerate ----------------------------------------------------------------

class Emitter {
 public:
  Emitter(std::string format, long limit) : format_(std::move(format)), limit_(limit) {
    if (format_ != "jsonl" && format_ != "csv") throw UsageError("--format must be jsonl or csv");
  }

  /// False once the limit is reached.
  bool emit(const Json& row) {
    if (limit_ >= 0 && count_ >= limit_) return false;
    ++count_;
    if (format_ == "jsonl") {
      std::cout << row.dump() << '\n';
      return true;
    }
    if (count_ == 1) {
      bool first = true;
      for (const auto& item : row.items()) {
        std::cout << (first ? "" : ",") << item.key();
        first = false;
      }
      std::cout << '\n';
    }
    bool first = true;
    for (const auto& item : row.items()) {
      std::cout << (first ? "" : ",") << cell(item.value());
      first = false;
    }
    std::cout << '\n';
    return limit_ < 0 || count_ < limit_;
  }

 private:
  static std::string cell(const Json& v) {
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }

  std::string format_;
  long limit_;
  long count_ = 0;
};

bool keep(const Options& o, bool connected) {
  if (o.connected && !connected) return false;
  if (o.disconnected && connected) return false;
  return true;
}

int cmd_enumerate(const Options& o) {
  Emitter out(o.format, o.limit);
  if (o.kind == "mtf") {
    const Partition lambda = need_lambda(o);
    for_each_mtf(lambda, [&](const WordA& w) { return out.emit(Json{{"factors", word_to_json(w)}}); },
                 o.max_degree ? o.max_degree : kMaxWordLength);
  } else if (o.kind == "fb" || o.kind == "fplus") {
    need_pq(o);
    auto visit = [&](const WordB& w) { return out.emit(Json{{"factors", word_to_json(w)}}); };
    const int limit = o.max_degree ? o.max_degree : kMaxFactorizationDegree;
    if (o.kind == "fb") {
      for_each_FB(o.p, o.q, visit, limit);
    } else {
      for_each_Fplus(o.p, o.q, visit, limit);
    }
  } else if (o.kind == "chains-b") {
    need_pq(o);
    AnnularPoset poset(o.p, o.q);
    poset.for_each_maximal_chain(
        [&](const MaximalChainB& chain) {
          Json row = chain_to_json(chain, poset);
          return keep(o, row["connected"].get<bool>()) ? out.emit(row) : true;
        },
        o.max_degree ? o.max_degree : kMaxChainDegree);
  } else if (o.kind == "chains-marked") {
    need_pq(o);
    MarkedPoset poset(o.p, o.q);
    poset.for_each_maximal_chain(
        [&](const MarkedChain& chain) { return out.emit(chain_to_json(chain, poset)); },
        o.max_degree ? o.max_degree : 6);
  } else if (o.kind == "elements-b") {
    need_pq(o);
    AnnularPoset poset(o.p, o.q);
    for (const auto& s : poset.elements(o.max_degree ? o.max_degree : kMaxElementDegree)) {
      const bool c = poset.is_connected(s);
      if (!keep(o, c)) continue;
      if (!out.emit(Json{{"element", to_string(s)},
                         {"cycles", to_json(s)},
                         {"rank", poset.rank(s)},
                         {"connectivity", connectivity(s, o.p)}})) {
        break;
      }
    }
  } else if (o.kind == "elements-marked") {
    need_pq(o);
    MarkedPoset poset(o.p, o.q);
    for (const auto& e : poset.elements(o.max_degree ? o.max_degree : 7)) {
      if (!keep(o, poset.is_connected(e.perm))) continue;
      Json row = to_json(e);
      row["rank"] = poset.rank(e);
      if (!out.emit(row)) break;
    }
  } else if (o.kind == "encodings") {
    need_pq(o);
    const EncodingTable table(o.p, o.q, o.max_degree ? o.max_degree : 7);
    for (const auto& [pi, enc] : table.entries()) {
      if (!out.emit(Json{{"perm", to_json(pi)}, {"encoding", to_json(enc)}})) break;
    }
  } else if (o.kind == "multichains-b" || o.kind == "multichains-marked") {
    need_pq(o);
    const auto profile = parse_profile(o.rank_profile);
    bool open = true;
    const int limit = o.max_degree ? o.max_degree : kMaxElementDegree;
    if (o.kind == "multichains-b") {
      AnnularPoset(o.p, o.q).for_each_multichain(
          profile,
          [&](const std::vector<SignedPermutation>& tuple, bool hot) {
            if (!open || !keep(o, hot)) return;
            Json items = Json::array();
            for (const auto& s : tuple) items.push_back(to_string(s));
            open = out.emit(Json{{"elements", items}, {"connected", hot}});
          },
          limit);
    } else {
      MarkedPoset(o.p, o.q).for_each_multichain(
          profile,
          [&](const std::vector<MarkedElement>& tuple, bool hot) {
            if (!open || !keep(o, hot)) return;
            Json items = Json::array();
            for (const auto& e : tuple) items.push_back(to_json(e));
            open = out.emit(Json{{"elements", items}, {"connected", hot}});
          },
          limit);
    }
  } else {
    throw UsageError("unknown enumerate kind: " + o.kind);
  }
  return kExitPass;
}

// --- verify -------------------------------------------------------------------

verify::Reports run_suite(const Options& o) {
  const std::string& s = o.suite;
  if (s == "gj") return verify::gj(o.max_n ? std::min(o.max_n, 5) : 5, o.max_n ? o.max_n : 7);
  if (s == "chains") {
    auto rs = verify::chains(o.max_degree ? o.max_degree : 6, o.threads);
    auto more = verify::element_counts(3);
    rs.insert(rs.end(), more.begin(), more.end());
    return rs;
  }
  if (s == "two-to-one") {
    std::vector<std::pair<int, int>> shapes;
    if (o.p && o.q) {
      shapes.emplace_back(o.p, o.q);
    } else {
      shapes = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
    }
    auto rs = verify::two_to_one(shapes);
    auto more = verify::bijections(o.max_degree ? o.max_degree : 5);
    rs.insert(rs.end(), more.begin(), more.end());
    return rs;
  }
  if (s == "plus-fibers") return verify::plus_fibers(o.max_degree ? o.max_degree : 4);
  if (s == "kk") return verify::kk(o.max);
  if (s == "marked") return verify::marked(o.max_degree ? o.max_degree : 5);
  if (s == "encoding") return verify::encoding(3, o.max_degree ? o.max_degree : 4);
  if (s == "reiner") return verify::reiner(o.max_n ? o.max_n : 5);
  if (s == "length-b") return verify::length(o.max_n ? o.max_n : 4, 5);
  if (s == "goldens") return verify::goldens();
  throw UsageError("unknown suite: " + s);
}

int cmd_verify(const Options& o) {
  const auto reports = run_suite(o);
  const verify::Report* first_failure = nullptr;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::cout << verify::to_json(r).dump() << '\n';
    if (r.pass) {
      ++passed;
    } else if (!first_failure) {
      first_failure = &r;
    }
  }
  std::cerr << o.suite << ": " << passed << '/' << reports.size() << " passed\n";
  if (first_failure) {
    std::cerr << "first failure: " << verify::to_json(*first_failure).dump() << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int cmd_export_goldens(const Options& o) {
  fs::create_directories(o.out_dir);
  for (const auto& [stem, doc] : verify::golden_documents()) {
    const fs::path path = fs::path(o.out_dir) / (stem + ".json");
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << doc.dump(2) << '\n';
    std::cout << path.string() << '\n';
  }
  return kExitPass;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "Outer block size");
  cmd->add_option("--q", o.q, "Inner block size");
  cmd->add_option("--lambda", o.lambda, "Partition, comma separated");
  cmd->add_option("--max-degree", o.max_degree, "Override the enumeration size guard");
  cmd->add_option("--max-n", o.max_n, "Size limit for n-indexed runs");
  cmd->add_option("--threads", o.threads, "Worker threads for chain walks")->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chains and factorizations in annular noncrossing permutation posets"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Count objects by closed form or enumeration");
  count->add_option("kind", o.kind, "mtf | chains-b | chains-marked | elements-b | ncb-chains")->required();
  add_common(count, o);
  count->add_option("--n", o.n, "Rank for ncb-chains");
  count->add_option("--oracle", o.oracle, "formula | enumerate | both");
  auto* c1 = count->add_flag("--connected", o.connected, "Connected objects only");
  count->add_flag("--disconnected", o.disconnected, "Disconnected objects only")->excludes(c1);

  auto* enumerate = app.add_subcommand("enumerate", "Stream objects in deterministic order");
  enumerate
      ->add_option("kind", o.kind,
                   "mtf | fb | fplus | chains-b | chains-marked | elements-b | elements-marked | encodings | "
                   "multichains-b | multichains-marked")
      ->required();
  add_common(enumerate, o);
  enumerate->add_option("--rank-profile", o.rank_profile, "Weakly increasing ranks, comma separated");
  enumerate->add_option("--format", o.format, "jsonl | csv");
  enumerate->add_option("--limit", o.limit, "Stop after this many rows");
  auto* e1 = enumerate->add_flag("--connected", o.connected, "Connected objects only");
  enumerate->add_flag("--disconnected", o.disconnected, "Disconnected objects only")->excludes(e1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", o.suite,
                   "gj | chains | two-to-one | plus-fibers | kk | marked | encoding | reiner | length-b | goldens")
      ->required();
  add_common(verify, o);
  verify->add_option("--max", o.max, "Range bound for kk");

  auto* goldens = app.add_subcommand("export-goldens", "Write reference objects as JSON fixtures");
  goldens->add_option("--out-dir", o.out_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*count) return cmd_count(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*verify) return cmd_verify(o);
    if (*goldens) return cmd_export_goldens(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
