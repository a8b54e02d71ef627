#include "annular/render.hpp"

#include <charconv>

namespace annular {

Json to_json(const Permutation& pi) {
  Json out = Json::array();
  for (const auto& c : cycles(pi)) out.push_back(c);
  return out;
}

Json to_json(const BCycle& c) { return Json{{c.is_zero() ? "zero" : "paired", c.entries}}; }

Json to_json(const SignedPermutation& s) {
  Json out = Json::array();
  for (const auto& c : b_cycles(s)) out.push_back(to_json(c));
  return out;
}

Json to_json(const BTransposition& t) { return to_string(t); }

Json to_json(const MarkedElement& e) { return Json{{"cycles", to_json(e.perm)}, {"z", e.mark}}; }

Json to_json(const ChainEncoding& enc) {
  return Json{{"flavor", enc.flavor == EncodingFlavor::typeA ? "typeA" : "typeB"},
              {"c", enc.c},
              {"d", enc.d},
              {"LE", enc.LE},
              {"RE", enc.REs},
              {"LI", enc.LI},
              {"RI", enc.RIs}};
}

Json to_json(const BigCount& n) { return n.get_str(); }

Json word_to_json(std::span<const Permutation> word) {
  Json out = Json::array();
  for (const auto& t : word) {
    Json pair = Json::array();
    for (int i = 1; i <= t.size(); ++i) {
      if (t(i) != i) pair.push_back(i);
    }
    out.push_back(pair);
  }
  return out;
}

Json word_to_json(std::span<const BTransposition> word) {
  Json out = Json::array();
  for (const auto& t : word) out.push_back(to_json(t));
  return out;
}

Json chain_to_json(const MaximalChainB& chain, const AnnularPoset& poset) {
  Json elements = Json::array();
  for (const auto& s : chain.elements) elements.push_back(to_string(s));
  return Json{{"elements", elements},
              {"phi", word_to_json(phi(chain))},
              {"connected", poset.classify(chain) == ChainKind::connected}};
}

Json chain_to_json(const MarkedChain& chain, const MarkedPoset& poset) {
  Json elements = Json::array();
  for (const auto& e : chain.elements) elements.push_back(to_json(e));
  const auto word = marked_chain_to_factorization(chain, poset);
  bool connected = false;
  for (const auto& e : chain.elements) connected = connected || poset.is_connected(e.perm);
  return Json{{"elements", elements}, {"phi", word_to_json(word)}, {"connected", connected}};
}

BTransposition parse_btransposition(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '-' || (c >= '0' && c <= '9')) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) throw std::invalid_argument("bad reflection: " + std::string(text));
      values.push_back(v);
      pos = static_cast<std::size_t>(ptr - text.data());
    } else {
      ++pos;
    }
  }
  const bool zero = text.starts_with("[");
  if (zero && values.size() == 1 && values[0] > 0) return BTransposition::zero(values[0]);
  if (!zero && text.starts_with("((") && values.size() == 2) return BTransposition::paired(values[0], values[1]);
  throw std::invalid_argument("bad reflection: " + std::string(text));
}

WordB word_b_from_json(const Json& j) {
  WordB out;
  for (const auto& item : j) out.push_back(parse_btransposition(item.get<std::string>()));
  return out;
}

}  // namespace annular
