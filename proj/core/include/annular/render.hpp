#pragma once

#include <nlohmann/json.hpp>

#include "annular/annular_poset.hpp"
#include "annular/encoding.hpp"
#include "annular/factorization.hpp"
#include "annular/marked_poset.hpp"

namespace annular {

using Json = nlohmann::ordered_json;

/// Cycles of pi, fixed points included.
Json to_json(const Permutation& pi);
/// {"zero": [...]} or {"paired": [...]}.
Json to_json(const BCycle& c);
Json to_json(const SignedPermutation& s);
/// "[1]" or "((1 -2))".
Json to_json(const BTransposition& t);
Json to_json(const MarkedElement& e);
Json to_json(const ChainEncoding& enc);
/// Decimal string, so that counts survive any JSON reader.
Json to_json(const BigCount& n);

/// [[j, k], ...].
Json word_to_json(std::span<const Permutation> word);
Json word_to_json(std::span<const BTransposition> word);

/// {"elements", "phi", "connected"}.
Json chain_to_json(const MaximalChainB& chain, const AnnularPoset& poset);
Json chain_to_json(const MarkedChain& chain, const MarkedPoset& poset);

/// Inverses of the string renderings, for reading fixtures back.
BTransposition parse_btransposition(std::string_view text);
WordB word_b_from_json(const Json& j);

}  // namespace annular
